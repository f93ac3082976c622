#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyunion/rational.hpp"

namespace polyunion {

/// Dense row-major rational matrix.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static QMat from_rows(const std::vector<QVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVec row_vec(std::size_t r) const;
  QVec col_vec(std::size_t c) const;

  void append_row(std::span<const Rat> r);
  QMat transpose() const;
  QMat select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const QMat&, const QMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QVec multiply(const QMat& m, std::span<const Rat> x);

std::size_t rank(const QMat& m);
std::size_t rank_of_vectors(const std::vector<QVec>& vectors, std::size_t dim);

/// Basis of {x : m x = 0}. Each vector is primitive-integer scaled with one
/// free coordinate equal to its positive unit multiple.
std::vector<QVec> kernel_basis(const QMat& m);

/// Reduced row echelon form with pivot columns, zero rows dropped.
struct Rref {
  QMat reduced;
  std::vector<std::size_t> pivots;
};
Rref rref(const QMat& m);

/// Unique solution of a square nonsingular system, nullopt when singular.
std::optional<QVec> solve_square(const QMat& m, std::span<const Rat> rhs);

/// Affine dimension of a point set (-1 when empty).
int affine_dimension(const std::vector<QVec>& points);

}  // namespace polyunion
