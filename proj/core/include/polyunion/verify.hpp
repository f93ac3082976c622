#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyunion/constructions.hpp"
#include "polyunion/disjunction.hpp"

namespace polyunion {

/// Uniform JSON report: {check, params, pass, counts, witnesses, runtime_ms}.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  double runtime_ms = 0;

  nlohmann::json to_json() const;
};

/// Structural validation against the published report schema; returns the
/// list of violations (empty when valid).
std::vector<std::string> validate_report(const nlohmann::json& j);

// ---- counting bound --------------------------------------------------------

struct BoundReport {
  Integer fP;
  Integer fQ;
  std::size_t min_m = 0;
  std::string detail;
};

/// Smallest m >= 0 with (fQ + 1)^{m+1} >= fP.
BoundReport min_additional_vars_bound(const Integer& fP, const Integer& fQ);

struct CensusResult {
  std::size_t count = 0;      // proper faces of dimension >= d - 1
  Integer bound;              // (f(q) + 1)^{m+1}, m = dim q - d
  bool holds = false;
};

CensusResult face_census(const Polytope& q, std::size_t d);
bool face_census_check(const Polytope& q, std::size_t d);

// ---- main construction -----------------------------------------------------

struct ConstructionResult {
  std::size_t d = 0;
  std::size_t facets_P0 = 0;
  std::size_t facets_P1 = 0;
  std::size_t colorful_tuples = 0;
  std::size_t certified = 0;          // certificates checked
  std::size_t distinct_facets = 0;    // distinct tight sets among them
  std::optional<std::size_t> total_facets;  // full enumeration when run
  std::optional<int> scale_exponent;
  std::optional<Integer> fQ;
  std::optional<BoundReport> bound;
  std::size_t max_bit_size = 0;       // over the rows and vertices of D and Q
  bool certificates_verified = false;
  std::string failure;
  bool pass = false;
};

/// d in {2, 4}: full certificate verification; d = 2 also enumerates every
/// facet of the Cayley embedding. d = 6: counts the colorful tuples only.
/// fQ = (2 d^2)^sigma_degree feeds the counting bound.
ConstructionResult theorem_construction_check(std::size_t d, unsigned sigma_degree = 2);
CheckReport construction_report(std::size_t d, unsigned sigma_degree = 2);

/// Checks every colorful certificate of (D, Q) and counts distinct tight
/// sets. Runs in parallel; the first failure is rethrown.
std::vector<CayleyCertificate> certify_all(const Polytope& D, const Polytope& Q, const ColoredHRep& colored,
                                           const PerturbationData& pert);

// ---- approximation ---------------------------------------------------------

/// gamma = (2 + delta) / (2 (1 + delta)).
Rat approx_gamma(const Rat& delta);

struct FalsifyResult {
  bool falsified = false;
  std::optional<QVec> witness_direction;
  std::optional<std::size_t> witness_index;
};

/// First direction c with width(P', c) > (1 + eps) width(P, c). Widths are
/// scanned on the vertex lists; a witness is re-verified with four
/// convex-combination LPs. InputError when P is not inside P'.
FalsifyResult approx_falsify(const VRep& P, const VRep& Pprime, const Rat& epsilon,
                             const std::vector<QVec>& directions);
FalsifyResult approx_falsify(const Polytope& P, const Polytope& Pprime, const Rat& epsilon,
                             const std::vector<QVec>& directions);

/// The 2^d sign vectors (d <= 12).
std::vector<QVec> sign_directions(std::size_t d);

/// Points of S with a x > b.
std::size_t cutoff_count(const QVec& a, const Rat& b, const std::vector<QVec>& S);

/// sum_{j > gamma d} C(d, j): violators of sum x <= 1 among S.
Integer cutoff_closed_form(std::size_t d, const Rat& delta);

struct EntropyBound {
  Integer binomial_sum;  // sum_{j <= k} C(n, j)
  Rat analytic;          // 2^{n H(k/n)} = n^n / (k^k (n-k)^{n-k}), exact
  bool holds = false;    // binomial_sum <= analytic
};

/// InputError when k > n/2.
EntropyBound entropy_upper_bound(std::size_t n, std::size_t k);

struct ApproxReport {
  Rat epsilon;
  Rat delta;
  Rat gamma;
  std::size_t d = 0;
  std::vector<std::size_t> cutoff_counts;  // one per facet of the cross-polytope
  Integer closed_form;
  std::size_t complement_k = 0;            // floor((1 - gamma) d)
  EntropyBound entropy_bound;
  std::size_t falsified_points = 0;
  double kappa_measured = 0;               // (count / 2^d)^{1/d}, reporting only
  bool pass = false;
};

/// Every S-point added to the cross-polytope is tested in its own sign
/// direction; every facet's cutoff count is compared with the closed form
/// and the binomial-sum bound. Requires delta > 2 epsilon.
ApproxReport approx_suite(std::size_t d, const Rat& delta, const Rat& epsilon);
CheckReport approx_report(std::size_t d, const Rat& delta, const Rat& epsilon);

// ---- Caratheodory restriction ---------------------------------------------

struct ConicCombination {
  std::vector<std::size_t> rows;  // facet rows of P.h
  QVec multipliers;               // positive
  QVec a;                         // reproduced normal
  Rat rhs;                        // support value max{a x : x in P}
};

/// Writes a x <= b (valid for the full-dimensional P) after lowering b to
/// the support value as a conic combination of at most d facet rows.
ConicCombination caratheodory_restrict(const Polytope& P, const QVec& a, const Rat& b);

// ---- lift-and-project --------------------------------------------------------

struct LiftProjectResult {
  std::size_t d = 0;
  std::size_t facets = 0;
  std::size_t expected_facets = 0;
  bool in_unit_cube = false;
  bool faces_match = false;
  bool trichotomy = false;
  std::size_t colorful_certified = 0;
  std::size_t distinct_facets = 0;
  std::optional<std::size_t> hull_facets;  // full enumeration (d = 3)
  bool certificates_in_hull = false;
  std::optional<BoundReport> bound;
  std::size_t max_bit_size = 0;  // over the rows and vertices of P
  std::string failure;
  bool pass = false;
};

LiftProjectResult lift_project_check(std::size_t d, unsigned sigma_degree = 2);
CheckReport lift_project_report(std::size_t d, unsigned sigma_degree = 2);

// ---- disjunction suites ------------------------------------------------------

/// Full-dimensional polytope: hull of d + 2 random rational points with
/// numerators in [-6, 6] and denominators in [1, 3], redrawn until
/// full-dimensional.
Polytope random_polytope(std::size_t d, std::mt19937_64& rng);

struct BalasTrial {
  std::size_t d = 0;
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  std::size_t rows = 0;
  std::size_t vars = 0;
  bool size_ok = false;
  bool hull_equal = false;
};

/// proj_x(balas_ef) against conv_union on `trials` seeded random pairs with
/// d cycling through `dims`.
std::vector<BalasTrial> balas_suite(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed);
CheckReport balas_report(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed);

/// Tight and factor-rho big-M on the segments [0,1], [2,3]; passes when
/// tight holds the hull property and factor fails with a verified witness.
CheckReport bigm_report(const Rat& rho);

/// Census over the cube, the 4-simplex and the d = 2 Cayley embedding.
CheckReport census_report();

}  // namespace polyunion
