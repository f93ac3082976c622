#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyunion/matrix.hpp"
#include "polyunion/rational.hpp"

namespace polyunion {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

const char* to_string(LpStatus status);

/// Result of optimizing a linear objective over {x : A x <= b}.
///
/// For an optimal solve `dual` holds y >= 0 (one entry per row) with
/// y^T A = c and y^T b = value when maximizing; when minimizing the same
/// certificate is stated for the negated objective (y^T A = -c,
/// y^T b = -value). `point` is a basic solution: it is tight on the rows in
/// `basis_rows`.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rat> value;
  std::optional<QVec> point;
  QVec dual;
  std::vector<std::size_t> basis_rows;
};

/// Exact simplex (Bland's rule) on the dual standard form
/// min b^T y s.t. A^T y = c, y >= 0; the primal point is read off the
/// simplex multipliers. Throws InputError on dimension mismatch.
LpResult lp_solve(const QMat& A, const QVec& b, const QVec& c, Sense sense = Sense::Maximize);

/// Result of min cost^T y s.t. M y = q, y >= 0.
struct StandardFormResult {
  LpStatus status = LpStatus::Infeasible;
  QVec y;
  Rat value;
  /// Simplex multipliers pi (one per row of M): cost_j - M_j^T pi >= 0 for
  /// all j and pi^T q = value at an optimum.
  QVec multipliers;
  std::vector<std::size_t> basis;
};

StandardFormResult solve_standard_form(const QMat& M, const QVec& q, const QVec& cost);

/// True iff y >= 0, y^T A = c and y^T b = value hold exactly.
bool verify_dual_certificate(const QMat& A, const QVec& b, const QVec& c, const QVec& y,
                             const Rat& value);

/// Is `p` in conv(points)? Decided by a feasibility LP over convex weights.
bool in_convex_hull(const std::vector<QVec>& points, const QVec& p);

}  // namespace polyunion
