#include "polyunion/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "polyunion/errors.hpp"

namespace polyunion::oracle {

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VRep vertex_enumeration(const HRep& h) {
  h.validate();
  auto [M, rhs] = h.as_inequalities();
  const std::size_t d = h.dim;
  VRep out;
  out.dim = d;
  for_each_subset(M.rows(), d, [&](const std::vector<std::size_t>& rows) {
    QMat S = M.select_rows(rows);
    QVec r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = rhs[rows[i]];
    auto x = solve_square(S, r);
    if (x && h.contains(*x)) out.points.push_back(std::move(*x));
  });
  std::sort(out.points.begin(), out.points.end(), LexLess{});
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  out.minimal = true;
  return out;
}

HRep facet_enumeration(const VRep& v) {
  v.validate();
  const std::size_t d = v.dim;
  if (affine_dimension(v.points) != static_cast<int>(d))
    throw InputError("oracle::facet_enumeration: hull is not full-dimensional");
  std::vector<std::pair<QVec, Rat>> rows;
  for_each_subset(v.points.size(), d, [&](const std::vector<std::size_t>& idx) {
    QMat lifted(d, d + 1);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) lifted(i, j) = v.points[idx[i]][j];
      lifted(i, d) = 1;
    }
    const auto ker = kernel_basis(lifted);
    if (ker.size() != 1) return;
    QVec a(ker[0].begin(), ker[0].begin() + static_cast<std::ptrdiff_t>(d));
    Rat beta = -ker[0][d];
    bool below = false;
    bool above = false;
    for (const QVec& p : v.points) {
      const int s = cmp(dot(a, p), beta);
      below |= s < 0;
      above |= s > 0;
    }
    if (below && above) return;
    if (above) {
      a = scale(a, Rat(-1));
      beta = -beta;
    }
    QVec full = a;
    full.push_back(beta);
    const QVec prim = to_rational(primitive_integer(full));
    rows.emplace_back(QVec(prim.begin(), prim.end() - 1), prim.back());
  });
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    const auto c = lex_compare(x.first, y.first);
    return c != 0 ? c < 0 : x.second < y.second;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  HRep out;
  out.dim = d;
  out.A = QMat(0, d);
  out.E = QMat(0, d);
  for (const auto& [a, beta] : rows) out.add_inequality(a, beta);
  out.irredundant = true;
  return out;
}

}  // namespace polyunion::oracle
