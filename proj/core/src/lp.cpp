#include "polyunion/lp.hpp"

#include <utility>

#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

// Dense tableau for min cost^T y, M y = q, y >= 0 with one artificial column
// per row appended after the structural columns. The artificial block keeps
// B^{-1} so the multipliers can be read off at the end.
class Tableau {
 public:
  Tableau(const QMat& M, const QVec& q)
      : m_(M.rows()), n_(M.cols()), width_(n_ + m_ + 1), t_(m_ * width_), flipped_(m_, false),
        basis_(m_), z_(n_ + m_ + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      flipped_[i] = sgn(q[i]) < 0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = flipped_[i] ? Rat(-M(i, j)) : M(i, j);
      at(i, n_ + i) = 1;
      at(i, rhs()) = flipped_[i] ? Rat(-q[i]) : q[i];
      basis_[i] = n_ + i;
    }
  }

  // Runs phase I; false when infeasible.
  bool phase_one() {
    QVec cost(n_ + m_, Rat(0));
    for (std::size_t k = 0; k < m_; ++k) cost[n_ + k] = 1;
    set_costs(cost);
    iterate(n_ + m_);
    if (sgn(objective(cost)) > 0) return false;
    drive_out_artificials();
    return true;
  }

  // Runs phase II; false when unbounded.
  bool phase_two(const QVec& structural_cost) {
    cost_ = QVec(n_ + m_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = structural_cost[j];
    set_costs(cost_);
    return iterate(n_);
  }

  QVec primal() const {
    QVec y(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = at(i, rhs());
    return y;
  }

  QVec multipliers() const {
    QVec pi(m_, Rat(0));
    for (std::size_t k = 0; k < m_; ++k) {
      Rat s = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rat& cb = cost_[basis_[i]];
        if (sgn(cb) != 0 && sgn(at(i, n_ + k)) != 0) s += cb * at(i, n_ + k);
      }
      pi[k] = flipped_[k] ? Rat(-s) : s;
    }
    return pi;
  }

  Rat objective() const { return objective(cost_); }

  std::vector<std::size_t> structural_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t b : basis_)
      if (b < n_) out.push_back(b);
    return out;
  }

 private:
  std::size_t rhs() const { return n_ + m_; }
  Rat& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  Rat objective(const QVec& cost) const {
    Rat s = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(cost[basis_[i]]) != 0) s += cost[basis_[i]] * at(i, rhs());
    return s;
  }

  void set_costs(const QVec& cost) {
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      Rat s = cost[j];
      for (std::size_t i = 0; i < m_; ++i) {
        const Rat& cb = cost[basis_[i]];
        if (sgn(cb) != 0 && sgn(at(i, j)) != 0) s -= cb * at(i, j);
      }
      z_[j] = s;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = 1 / at(r, c);
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const Rat f = at(i, c);
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
    }
    if (sgn(z_[c]) != 0) {
      const Rat f = z_[c];
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (sgn(at(r, j)) != 0) z_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest-index improving column enters; ratio ties go to
  // the lowest-index basic variable. Only columns below `allowed` may enter.
  bool iterate(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(z_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rat ratio = at(i, rhs()) / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  // Artificials still basic after phase I sit at level zero. Swap each for a
  // structural column with a nonzero entry; rows with none are redundant
  // equations and keep their artificial, which no later pivot can touch.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(at(i, j)) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rat> t_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> basis_;
  QVec z_;
  QVec cost_;
};

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

StandardFormResult solve_standard_form(const QMat& M, const QVec& q, const QVec& cost) {
  if (q.size() != M.rows() || cost.size() != M.cols())
    throw InputError("solve_standard_form: dimension mismatch");
  StandardFormResult out;
  Tableau tab(M, q);
  if (!tab.phase_one()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  if (!tab.phase_two(cost)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.y = tab.primal();
  out.value = tab.objective();
  out.multipliers = tab.multipliers();
  out.basis = tab.structural_basis();
  return out;
}

LpResult lp_solve(const QMat& A, const QVec& b, const QVec& c, Sense sense) {
  if (A.rows() != b.size()) throw InputError("lp_solve: rows of A and length of b differ");
  if (A.cols() != c.size() && !(A.rows() == 0 && A.cols() == 0))
    throw InputError("lp_solve: columns of A and length of objective differ");
  const std::size_t d = c.size();
  QVec obj = sense == Sense::Maximize ? c : scale(c, Rat(-1));

  LpResult res;
  if (A.rows() == 0) {
    if (is_zero(obj)) {
      res.status = LpStatus::Optimal;
      res.value = Rat(0);
      res.point = zeros(d);
    } else {
      res.status = LpStatus::Unbounded;
    }
    return res;
  }

  const QMat At = A.transpose();
  StandardFormResult dual = solve_standard_form(At, obj, b);
  if (dual.status == LpStatus::Optimal) {
    res.status = LpStatus::Optimal;
    res.point = dual.multipliers;
    res.value = sense == Sense::Maximize ? dual.value : Rat(-dual.value);
    res.dual = std::move(dual.y);
    res.basis_rows = std::move(dual.basis);
    return res;
  }
  if (dual.status == LpStatus::Unbounded) {
    res.status = LpStatus::Infeasible;
    return res;
  }

  // Dual infeasible: the primal is unbounded or infeasible. A Farkas
  // certificate y >= 0, y^T A = 0, y^T b < 0 (normalized by sum y = 1)
  // decides which.
  QMat farkas(d + 1, A.rows());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < A.rows(); ++j) farkas(i, j) = A(j, i);
  for (std::size_t j = 0; j < A.rows(); ++j) farkas(d, j) = 1;
  QVec rhs = zeros(d + 1);
  rhs[d] = 1;
  // An infeasible normalized system means no y at all (Gordan): some x has
  // A x < 0, so the primal is feasible and hence unbounded.
  StandardFormResult f = solve_standard_form(farkas, rhs, b);
  if (f.status == LpStatus::Unbounded) throw InternalError("lp_solve: Farkas system unbounded");
  res.status = f.status == LpStatus::Optimal && sgn(f.value) < 0 ? LpStatus::Infeasible : LpStatus::Unbounded;
  return res;
}

bool verify_dual_certificate(const QMat& A, const QVec& b, const QVec& c, const QVec& y,
                             const Rat& value) {
  if (y.size() != A.rows() || c.size() != A.cols() || b.size() != A.rows()) return false;
  for (const Rat& yi : y)
    if (sgn(yi) < 0) return false;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < A.rows(); ++i) s += y[i] * A(i, j);
    if (s != c[j]) return false;
  }
  return dot(y, b) == value;
}

bool in_convex_hull(const std::vector<QVec>& points, const QVec& p) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  QMat M(d + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != d) throw InputError("in_convex_hull: dimension mismatch");
    if (points[j] == p) return true;
    for (std::size_t i = 0; i < d; ++i) M(i, j) = points[j][i];
    M(d, j) = 1;
  }
  QVec q = p;
  q.push_back(1);
  return solve_standard_form(M, q, zeros(points.size())).status == LpStatus::Optimal;
}

}  // namespace polyunion
