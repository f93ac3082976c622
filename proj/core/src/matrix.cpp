#include "polyunion/matrix.hpp"

#include <utility>

#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

// Rows scaled to primitive integers; scaling a row does not change rank or
// the solution set of a homogeneous system.
std::vector<IVec> integer_rows(const QMat& m) {
  std::vector<IVec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(primitive_integer(m.row(i)));
  return rows;
}

// Fraction-free (Bareiss) forward elimination in place. Returns the pivot
// columns; rows past pivots.size() are zero afterwards.
std::vector<std::size_t> bareiss_echelon(std::vector<IVec>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  Integer t1;
  Integer t2;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t1 = a[r][c] * a[i][j];
        t2 = a[i][c] * a[r][j];
        t1 -= t2;
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("QMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

QVec QMat::row_vec(std::size_t r) const {
  auto s = row(r);
  return QVec(s.begin(), s.end());
}

QVec QMat::col_vec(std::size_t c) const {
  QVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void QMat::append_row(std::span<const Rat> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InputError("QMat::append_row: dimension mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMat QMat::select_rows(std::span<const std::size_t> indices) const {
  QMat out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= rows_) throw InputError("QMat::select_rows: index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(indices[k], j);
  }
  return out;
}

QVec multiply(const QMat& m, std::span<const Rat> x) {
  if (x.size() != m.cols()) throw InputError("multiply: dimension mismatch");
  QVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), x);
  return out;
}

std::size_t rank(const QMat& m) {
  auto rows = integer_rows(m);
  return bareiss_echelon(rows, m.cols()).size();
}

std::size_t rank_of_vectors(const std::vector<QVec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(QMat::from_rows(vectors, dim));
}

Rref rref(const QMat& m) {
  QMat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMat reduced(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::vector<QVec> kernel_basis(const QMat& m) {
  const Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v = zeros(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(to_rational(primitive_integer(v)));
  }
  return basis;
}

std::optional<QVec> solve_square(const QMat& m, std::span<const Rat> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw InputError("solve_square: dimension mismatch");
  std::vector<QVec> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = m.row_vec(i);
    aug[i].push_back(rhs[i]);
  }
  auto rows = integer_rows(QMat::from_rows(aug, n + 1));
  const auto pivots = bareiss_echelon(rows, n + 1);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QVec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat s = Rat(rows[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) s -= Rat(rows[ii][j]) * x[j];
    x[ii] = s / Rat(rows[ii][ii]);
  }
  return x;
}

int affine_dimension(const std::vector<QVec>& points) {
  if (points.empty()) return -1;
  std::vector<QVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank_of_vectors(diffs, points[0].size()));
}

}  // namespace polyunion
