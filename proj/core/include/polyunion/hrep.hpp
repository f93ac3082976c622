#pragma once

#include <cstddef>
#include <vector>

#include "polyunion/lp.hpp"
#include "polyunion/matrix.hpp"
#include "polyunion/rational.hpp"

namespace polyunion {

/// Inequality description {x : A x <= b, E x = e} in R^dim.
///
/// `irredundant` promises that every row of A defines a facet of the set
/// relative to its affine hull and that E x = e spans that hull.
struct HRep {
  std::size_t dim = 0;
  QMat A;
  QVec b;
  QMat E;
  QVec e;
  bool irredundant = false;

  HRep() = default;
  HRep(std::size_t d, QMat a, QVec rhs);

  std::size_t num_inequalities() const { return A.rows(); }
  std::size_t num_equations() const { return E.rows(); }

  void add_inequality(std::span<const Rat> a, const Rat& rhs);
  void add_equation(std::span<const Rat> a, const Rat& rhs);

  /// Equations expanded into inequality pairs, after the inequality rows.
  std::pair<QMat, QVec> as_inequalities() const;

  bool contains(std::span<const Rat> x) const;
  /// Indices of inequality rows with a x = b.
  std::vector<std::size_t> tight_rows(std::span<const Rat> x) const;

  void validate() const;
};

/// Point list in R^dim.
struct VRep {
  std::size_t dim = 0;
  std::vector<QVec> points;
  bool minimal = false;

  VRep() = default;
  VRep(std::size_t d, std::vector<QVec> pts) : dim(d), points(std::move(pts)) {}

  std::size_t size() const { return points.size(); }
  void validate() const;
};

/// Optimize over an H-description (equations included).
LpResult optimize(const HRep& h, const QVec& c, Sense sense = Sense::Maximize);

bool is_empty(const HRep& h);
/// LP in the +-e_i directions; an empty set counts as bounded.
bool is_bounded(const HRep& h);

/// Moves implicit equalities into the equation block (canonical RREF form)
/// and drops redundant inequality rows, one LP per row. Surviving rows keep
/// their relative order. Throws InputError("empty") for an empty set.
/// `kept` (optional) receives the original indices of surviving rows.
HRep remove_redundancy(const HRep& h, std::vector<std::size_t>* kept = nullptr);

/// Canonical equation block: RREF of [E | e], primitive integer rows.
void canonicalize_equations(HRep& h);

}  // namespace polyunion
