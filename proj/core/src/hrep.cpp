#include "polyunion/hrep.hpp"

#include <algorithm>

#include "polyunion/errors.hpp"

namespace polyunion {

HRep::HRep(std::size_t d, QMat a, QVec rhs) : dim(d), A(std::move(a)), b(std::move(rhs)), E(0, d) {
  validate();
}

void HRep::add_inequality(std::span<const Rat> a, const Rat& rhs) {
  if (a.size() != dim) throw InputError("HRep::add_inequality: dimension mismatch");
  if (A.rows() == 0 && A.cols() != dim) A = QMat(0, dim);
  A.append_row(a);
  b.push_back(rhs);
}

void HRep::add_equation(std::span<const Rat> a, const Rat& rhs) {
  if (a.size() != dim) throw InputError("HRep::add_equation: dimension mismatch");
  if (E.rows() == 0 && E.cols() != dim) E = QMat(0, dim);
  E.append_row(a);
  e.push_back(rhs);
}

std::pair<QMat, QVec> HRep::as_inequalities() const {
  QMat M(0, dim);
  QVec rhs;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    M.append_row(A.row(i));
    rhs.push_back(b[i]);
  }
  for (std::size_t i = 0; i < E.rows(); ++i) {
    M.append_row(E.row(i));
    rhs.push_back(e[i]);
    M.append_row(scale(E.row(i), Rat(-1)));
    rhs.push_back(-e[i]);
  }
  return {std::move(M), std::move(rhs)};
}

bool HRep::contains(std::span<const Rat> x) const {
  if (x.size() != dim) throw InputError("HRep::contains: dimension mismatch");
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (dot(A.row(i), x) > b[i]) return false;
  for (std::size_t i = 0; i < E.rows(); ++i)
    if (dot(E.row(i), x) != e[i]) return false;
  return true;
}

std::vector<std::size_t> HRep::tight_rows(std::span<const Rat> x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (dot(A.row(i), x) == b[i]) out.push_back(i);
  return out;
}

void HRep::validate() const {
  if (A.rows() != b.size()) throw InputError("HRep: rows of A and length of b differ");
  if (A.rows() > 0 && A.cols() != dim) throw InputError("HRep: A has wrong column count");
  if (E.rows() != e.size()) throw InputError("HRep: rows of E and length of e differ");
  if (E.rows() > 0 && E.cols() != dim) throw InputError("HRep: E has wrong column count");
}

void VRep::validate() const {
  for (const QVec& p : points)
    if (p.size() != dim) throw InputError("VRep: point of wrong dimension");
}

LpResult optimize(const HRep& h, const QVec& c, Sense sense) {
  if (c.size() != h.dim) throw InputError("optimize: objective dimension mismatch");
  auto [M, rhs] = h.as_inequalities();
  if (M.rows() == 0) M = QMat(0, h.dim);
  return lp_solve(M, rhs, c, sense);
}

bool is_empty(const HRep& h) { return optimize(h, zeros(h.dim)).status == LpStatus::Infeasible; }

bool is_bounded(const HRep& h) {
  for (std::size_t i = 0; i < h.dim; ++i) {
    const QVec ei = unit_vector(h.dim, i);
    for (Sense s : {Sense::Maximize, Sense::Minimize}) {
      const LpResult r = optimize(h, ei, s);
      if (r.status == LpStatus::Infeasible) return true;
      if (r.status == LpStatus::Unbounded) return false;
    }
  }
  return true;
}

void canonicalize_equations(HRep& h) {
  if (h.E.rows() == 0) {
    h.E = QMat(0, h.dim);
    return;
  }
  QMat aug(h.E.rows(), h.dim + 1);
  for (std::size_t i = 0; i < h.E.rows(); ++i) {
    for (std::size_t j = 0; j < h.dim; ++j) aug(i, j) = h.E(i, j);
    aug(i, h.dim) = h.e[i];
  }
  const Rref rr = rref(aug);
  QMat E(0, h.dim);
  QVec e;
  for (std::size_t i = 0; i < rr.reduced.rows(); ++i) {
    if (rr.pivots[i] == h.dim) throw InputError("empty");
    const QVec row = to_rational(primitive_integer(rr.reduced.row(i)));
    E.append_row(std::span<const Rat>(row.data(), h.dim));
    e.push_back(row[h.dim]);
  }
  h.E = std::move(E);
  h.e = std::move(e);
}

HRep remove_redundancy(const HRep& h, std::vector<std::size_t>* kept) {
  h.validate();
  if (is_empty(h)) throw InputError("empty");
  const std::size_t m = h.A.rows();

  // Implicit equalities: rows whose minimum over the set equals b. Any row
  // strictly slack at a point already seen cannot be one.
  std::vector<QVec> seen;
  std::vector<bool> implicit(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const bool slack_somewhere = std::any_of(seen.begin(), seen.end(), [&](const QVec& x) {
      return dot(h.A.row(i), x) < h.b[i];
    });
    if (slack_somewhere) continue;
    const LpResult r = optimize(h, h.A.row_vec(i), Sense::Minimize);
    if (r.status != LpStatus::Optimal) throw InternalError("remove_redundancy: min LP not optimal");
    if (*r.value == h.b[i]) implicit[i] = true;
    seen.push_back(*r.point);
  }

  HRep out;
  out.dim = h.dim;
  out.A = QMat(0, h.dim);
  out.E = QMat(0, h.dim);
  for (std::size_t i = 0; i < h.E.rows(); ++i) out.add_equation(h.E.row(i), h.e[i]);
  for (std::size_t i = 0; i < m; ++i)
    if (implicit[i]) out.add_equation(h.A.row(i), h.b[i]);
  canonicalize_equations(out);

  // One LP per remaining row against everything not yet discarded.
  std::vector<bool> alive(m);
  for (std::size_t i = 0; i < m; ++i) alive[i] = !implicit[i];
  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    HRep rest;
    rest.dim = h.dim;
    rest.A = QMat(0, h.dim);
    rest.E = out.E;
    rest.e = out.e;
    for (std::size_t j = 0; j < m; ++j)
      if (alive[j] && j != i) rest.add_inequality(h.A.row(j), h.b[j]);
    const LpResult r = optimize(rest, h.A.row_vec(i), Sense::Maximize);
    if (r.status == LpStatus::Optimal && *r.value <= h.b[i]) alive[i] = false;
  }
  if (kept) kept->clear();
  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    out.add_inequality(h.A.row(i), h.b[i]);
    if (kept) kept->push_back(i);
  }
  out.irredundant = true;
  return out;
}

}  // namespace polyunion
