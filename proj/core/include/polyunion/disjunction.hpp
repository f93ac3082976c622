#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "polyunion/polytope.hpp"
#include "polyunion/projection.hpp"

namespace polyunion {

/// Extended formulation of conv(P1 u P2) over the variables (x, x1, lambda):
///
///   A1 x1 - lambda b1               <= 0
///   A2 x - A2 x1 + lambda b2        <= b2
///   -lambda <= 0,  lambda <= 1
///
/// Input equations enter as inequality pairs, so f1 and f2 count them twice.
struct DisjunctiveEF {
  HRep h;
  std::size_t d = 0;
  std::size_t f1 = 0;
  std::size_t f2 = 0;

  std::size_t num_rows() const { return h.A.rows(); }
  std::size_t num_vars() const { return h.dim; }
  std::size_t lambda_index() const { return 2 * d; }
};

/// Big-M representation over (x, lambda), lambda integral:
///
///   A1 x + M1 lambda <= b1 + M1
///   A2 x - M2 lambda <= b2
///   -lambda <= 0,  lambda <= 1
///
/// lambda = 1 selects P1, lambda = 0 selects P2.
struct MipRep {
  HRep h;
  std::size_t d = 0;
  std::vector<std::size_t> integral_vars;
  QVec M1;
  QVec M2;

  std::size_t lambda_index() const { return d; }
};

struct BigMMode {
  enum class Kind { Tight, Factor };
  Kind kind = Kind::Tight;
  Rat rho = 1;

  static BigMMode tight() { return {}; }
  static BigMMode factor(const Rat& rho) { return {Kind::Factor, rho}; }
};

DisjunctiveEF balas_ef(const HRep& h1, const HRep& h2);

/// conv(v1 u v2) as a full Polytope.
Polytope conv_union(const VRep& v1, const VRep& v2);

/// Tight mode: M1_i = max{a1_i x : x in P2} - b1_i and symmetrically for M2.
/// Factor mode scales every tight entry to rho |M_i|, which loosens rows
/// whose tight value is negative as well.
MipRep big_m(const HRep& h1, const HRep& h2, BigMMode mode = BigMMode::tight());

/// The slice of a MIP representation at a fixed lambda, in x-space.
HRep lambda_slice(const MipRep& rep, const Rat& lambda);

struct HullCheck {
  bool holds = false;
  std::optional<QVec> witness;
  HRep projection;
};

/// Projects the LP relaxation onto x and compares with the oracle
/// conv(P1 u P2). A witness is a vertex of the projection that lies outside
/// the oracle, confirmed by a convex-combination LP.
HullCheck convex_hull_property_check(const DisjunctiveEF& rep, const Polytope& oracle,
                                     ProjectionRoute route = ProjectionRoute::Auto);
HullCheck convex_hull_property_check(const MipRep& rep, const Polytope& oracle,
                                     ProjectionRoute route = ProjectionRoute::Auto);

struct SplitPieces {
  HRep p0;  // P n {pi x <= pi0}
  HRep p1;  // P n {pi x >= pi0 + 1}
  bool p0_empty = false;
  bool p1_empty = false;
};

SplitPieces split_disjunction(const Polytope& p, const QVec& pi, const Rat& pi0);

}  // namespace polyunion
