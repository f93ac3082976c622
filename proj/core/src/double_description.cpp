#include "polyunion/double_description.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "polyunion/errors.hpp"
#include "polyunion/matrix.hpp"

namespace polyunion {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
  IVec z;
  ZeroSet zeros;
};

Integer idot(const IVec& a, const IVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool ivec_less(const IVec& a, const IVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Integer& x, const Integer& y) { return x < y; });
}

QMat to_qmat(const std::vector<IVec>& rows, std::size_t n) {
  QMat m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(rows[i][j]);
  return m;
}

}  // namespace

std::vector<IVec> extreme_rays(const std::vector<IVec>& G, std::size_t n) {
  const std::size_t m = G.size();
  for (const IVec& g : G)
    if (g.size() != n) throw InputError("extreme_rays: row of wrong length");

  // Initial simplicial cone from the first n independent rows.
  std::vector<std::size_t> basis;
  std::vector<IVec> chosen;
  for (std::size_t i = 0; i < m && basis.size() < n; ++i) {
    chosen.push_back(G[i]);
    if (rank(to_qmat(chosen, n)) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() < n) throw InputError("extreme_rays: cone is not pointed");

  const QMat S = to_qmat(chosen, n);
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < n; ++k) {
    QVec rhs = zeros(n);
    rhs[k] = -1;
    const auto z = solve_square(S, rhs);
    if (!z) throw InternalError("extreme_rays: singular initial basis");
    Ray r{primitive_integer(*z), ZeroSet(m)};
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) r.zeros.set(basis[j]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(m, false);
  for (std::size_t b : basis) in_basis[b] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (in_basis[row]) continue;
    const IVec& g = G[row];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = idot(g, rays[r].z);
      const int s = sgn(value[r]);
      if (s > 0) {
        pos.push_back(r);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        rays[r].zeros.set(row);
      }
    }
    if (pos.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        ZeroSet common = rays[p].zeros & rays[q].zeros;
        if (n >= 2 && common.count() < n - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IVec z(n);
        for (std::size_t j = 0; j < n; ++j) z[j] = value[p] * rays[q].z[j] - value[q] * rays[p].z[j];
        common.set(row);
        next.push_back({primitive_integer(std::span<const Integer>(z)), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (sgn(value[r]) <= 0) next.push_back(std::move(rays[r]));
    rays = std::move(next);
  }

  std::vector<IVec> out;
  out.reserve(rays.size());
  for (Ray& r : rays) out.push_back(std::move(r.z));
  std::sort(out.begin(), out.end(), ivec_less);
  return out;
}

VRep vertex_enumeration(const HRep& h) {
  h.validate();
  if (is_empty(h)) throw InputError("empty");
  if (!is_bounded(h)) throw InputError("not a polytope");
  const std::size_t d = h.dim;
  auto [M, rhs] = h.as_inequalities();

  // Homogenized cone {(t, x) : A x - b t <= 0, t >= 0}.
  std::vector<IVec> G;
  IVec t_row(d + 1, Integer(0));
  t_row[0] = -1;
  G.push_back(t_row);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    QVec row(d + 1);
    row[0] = -rhs[i];
    for (std::size_t j = 0; j < d; ++j) row[j + 1] = M(i, j);
    G.push_back(primitive_integer(row));
  }
  VRep out;
  out.dim = d;
  for (const IVec& z : extreme_rays(G, d + 1)) {
    if (sgn(z[0]) <= 0) throw InternalError("vertex_enumeration: recession ray in bounded set");
    QVec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = make_rat(z[j + 1], z[0]);
    out.points.push_back(std::move(x));
  }
  std::sort(out.points.begin(), out.points.end(), LexLess{});
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  out.minimal = true;
  return out;
}

HRep facet_enumeration(const VRep& v) {
  v.validate();
  if (v.points.empty()) throw InputError("facet_enumeration: empty point list");
  const std::size_t d = v.dim;
  std::vector<QVec> pts = v.points;
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Affine hull: (c, t) with c.p + t = 0 for every point gives c.x = -t.
  QMat lifted(pts.size(), d + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) lifted(i, j) = pts[i][j];
    lifted(i, d) = 1;
  }
  HRep out;
  out.dim = d;
  out.A = QMat(0, d);
  out.E = QMat(0, d);
  for (const QVec& k : kernel_basis(lifted)) {
    out.add_equation(std::span<const Rat>(k.data(), d), -k[d]);
  }
  canonicalize_equations(out);

  // Free coordinates of the equation block form a chart of the hull.
  std::vector<bool> pivot(d, false);
  for (std::size_t i = 0; i < out.E.rows(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(out.E(i, j)) != 0) {
        pivot[j] = true;
        break;
      }
    }
  }
  std::vector<std::size_t> chart;
  for (std::size_t j = 0; j < d; ++j)
    if (!pivot[j]) chart.push_back(j);
  const std::size_t k = chart.size();
  if (k == 0) {
    out.irredundant = true;
    return out;
  }

  // Cone of valid inequalities {(beta, a) : a.p - beta <= 0} in the chart.
  std::vector<IVec> G;
  for (const QVec& p : pts) {
    QVec row(k + 1);
    row[0] = -1;
    for (std::size_t j = 0; j < k; ++j) row[j + 1] = p[chart[j]];
    G.push_back(primitive_integer(row));
  }
  std::vector<std::pair<QVec, Rat>> rows;
  for (const IVec& z : extreme_rays(G, k + 1)) {
    QVec a = zeros(d);
    for (std::size_t j = 0; j < k; ++j) a[chart[j]] = Rat(z[j + 1]);
    rows.emplace_back(std::move(a), Rat(z[0]));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    const auto c = lex_compare(x.first, y.first);
    return c != 0 ? c < 0 : x.second < y.second;
  });
  for (const auto& [a, beta] : rows) out.add_inequality(a, beta);
  out.irredundant = true;
  return out;
}

}  // namespace polyunion
