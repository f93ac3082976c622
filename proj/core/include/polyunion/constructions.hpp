#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyunion/faces.hpp"
#include "polyunion/polytope.hpp"

namespace polyunion {

/// (t, t^2, ..., t^d).
QVec moment_curve_point(const Rat& t, std::size_t d);

/// The k points x(t_1), ..., x(t_k); t defaults to 1, 2, ..., k.
VRep cyclic_points(std::size_t d, std::size_t k, const std::optional<std::vector<Rat>>& t = std::nullopt);
Polytope cyclic_polytope(std::size_t d, std::size_t k, const std::optional<std::vector<Rat>>& t = std::nullopt);

bool is_simplicial(const Polytope& p);
bool is_simple(const Polytope& p);

/// f-vector (f_0, ..., f_{dim-1}) from the face lattice.
std::vector<std::size_t> f_vector(const Polytope& p);

/// Polar of p translated by minus its vertex centroid:
/// {x : (v - c) x <= 1 for every vertex v}. Facet j of the result belongs to
/// vertex j of p; the vertices are the facet normals of the translate
/// divided by their right-hand sides.
Polytope centered_polar(const Polytope& p);

/// D^Cy(d, k): centered polar of the cyclic polytope with t_i = i.
Polytope polar_cyclic(std::size_t d, std::size_t k);

/// Facet rows of a d^2-row system split into d/2 classes of 2d rows each.
/// color[i] is 1-based; class j holds rows (j-1)*2d ... j*2d - 1.
struct ColoredHRep {
  HRep h;
  std::size_t d = 0;
  std::vector<std::size_t> color;

  std::size_t num_classes() const { return d / 2; }
  std::vector<std::size_t> rows_of(std::size_t j) const;
};

ColoredHRep color_facets(const HRep& h);

/// A basis v_1..v_k with V n aff(closed cone of F) = {0} for every k-face F,
/// found by trying x(1), x(2), ... in order. Throws ConstructionError
/// "candidate sequence exhausted" after 10 * d * #faces rejected candidates.
std::vector<QVec> lemma4_subspace(const Polytope& p, std::size_t k);

/// Exact rank test behind lemma4_subspace.
bool lemma4_condition_holds(const Polytope& p, std::size_t k, const std::vector<QVec>& basis);

struct PerturbationData {
  std::vector<QVec> V_basis;
  std::vector<QVec> u;
  QVec nu;  // positive weights with sum nu_j u_j = 0 and sum nu_j = 1
  int scale_exponent = 0;
};

/// u_j = b_j - mean(b), nu_j = 1/m.
PerturbationData centered_simplex_in_subspace(const std::vector<QVec>& V_basis);

struct PerturbedPolar {
  Polytope Q;
  PerturbationData pert;
};

/// Q = {x : (a^i_j + u_j) x <= b_i}. While Q is not combinatorially equal to
/// D under the identity facet map every u_j is halved; ConstructionError
/// "scaling cap" after 64 halvings.
PerturbedPolar perturbed_polar(const Polytope& D, const ColoredHRep& colored, const PerturbationData& pert);

/// Rows of Q for the given (already scaled) perturbation.
HRep perturbed_rows(const ColoredHRep& colored, const std::vector<QVec>& u);

/// {(v, 0)} u {(w, 1)} in R^{d+1}.
VRep cayley_points(const VRep& v0, const VRep& v1);
Polytope cayley_embedding(const VRep& v0, const VRep& v1);

/// Height-t slice of a polytope in R^{d+1}, as an H-description in R^d.
HRep height_slice(const Polytope& p, const Rat& t);

/// (1 - t) P0 + t P1 as the hull of all pairwise combinations of vertices.
Polytope minkowski_combination(const VRep& v0, const VRep& v1, const Rat& t);

/// Every choice of one row per color class, lexicographic. Size (2d)^{d/2}.
std::vector<std::vector<std::size_t>> colorful_faces(const ColoredHRep& colored);

/// Dimension of the face of D cut out by the given facet rows (-1 if empty).
int face_dimension(const Polytope& D, const std::vector<std::size_t>& rows);

/// Inequality r x + alpha x_{d+1} <= beta0 on the Cayley embedding of D
/// (height 0) and Q (height 1), tight exactly on (F x 0) u (F' x 1) where F
/// and F' are the faces of D and Q cut out by the tuple.
struct CayleyCertificate {
  std::vector<std::size_t> colorful_indices;
  QVec r;
  Rat alpha;
  Rat beta0;
  QVec mu;
  IndexSet face0;  // vertices of D
  IndexSet face1;  // vertices of Q
};

/// Builds and checks the certificate; ConstructionError "certificate
/// failed" (with the reason) when any check fails. The checks: the tuple is
/// colorful, r attains its maximum over D exactly on F and over Q exactly
/// on F', the tight Cayley points span a hyperplane, and the kernel of the
/// multiplier system is the single ray through (nu, nu).
CayleyCertificate colorful_facet_certificate(const Polytope& D, const Polytope& Q, const ColoredHRep& colored,
                                             const PerturbationData& pert,
                                             const std::vector<std::size_t>& tuple);

/// The inequality as a row (r, alpha | beta0) in R^{d+1}.
std::pair<QVec, Rat> certificate_row(const CayleyCertificate& cert);

struct CrossPolytopeFamily {
  Polytope Q;     // 2^d sign inequalities
  HRep P1_h;      // d + 2 rows: -x_i <= 0, sum x <= 1, -sum x <= -1
  HRep Pm1_h;
  Polytope P1;
  Polytope Pm1;
};

CrossPolytopeFamily cross_polytope_family(std::size_t d);

/// All sign patterns of ((1+delta)/d, ..., (1+delta)/d); pattern s has a
/// negative coordinate i iff bit i of s is set. Requires d <= 20.
std::vector<QVec> point_family_S(std::size_t d, const Rat& delta);

/// apex + cone{x - apex : x in conv(q)}. One row per facet of q, lifted
/// through the apex; equations for aff(q u apex) when it is not everything.
HRep homogenization(const VRep& q, const QVec& apex);

/// h n {lo <= a x <= hi} as a Polytope.
Polytope truncate(const HRep& h, const QVec& a, const Rat& lo, const Rat& hi);

struct LiftProjectInstance {
  std::size_t d = 0;
  Polytope P;                 // in [0,1]^d
  Rat epsilon;
  int halvings = 0;
  QVec offset;                // x_orig = offset + scale * x for the first d-1 coords
  QVec scale;
  Polytope D;                 // P0 before normalization
  Polytope Q;                 // P1 before normalization
  ColoredHRep colored;        // coloring of D
  PerturbationData pert;      // as used for Q
  std::vector<std::size_t> h0_rows;  // rows of P.h coming from H0, in D order
  std::vector<std::size_t> h1_rows;  // rows of P.h coming from H1, in Q order
  bool trichotomy = false;    // vertices of H0 n H1 satisfy the apex / interior rule
};

/// P = H0 n H1 n {0 <= x_d <= 1} over P0 = D^Cy(d-1,(d-1)^2) and
/// P1 = Q^Cy(d-1,(d-1)^2), normalized into the unit cube. ConstructionError
/// "epsilon not found" after 64 halvings.
LiftProjectInstance lift_project_instance(std::size_t d);

/// The faces of P at x_d = 0 and x_d = 1 as polytopes in R^{d-1}, with rows
/// in D and Q order.
std::pair<Polytope, Polytope> lift_project_faces(const LiftProjectInstance& inst);

/// Perturbation data mapped through the normalization (u_j scaled
/// coordinatewise), so certificates apply to the extracted faces.
PerturbationData normalized_perturbation(const LiftProjectInstance& inst);

}  // namespace polyunion
