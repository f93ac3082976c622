#include "polyunion/projection.hpp"

#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "polyunion/double_description.hpp"
#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

constexpr std::size_t kFourierMotzkinLimit = 6;

HRep empty_system(std::size_t dim) {
  HRep out;
  out.dim = dim;
  out.A = QMat(0, dim);
  out.E = QMat(0, dim);
  out.add_inequality(zeros(dim), Rat(-1));
  out.irredundant = true;
  return out;
}

HRep select_columns(const HRep& h, const std::vector<std::size_t>& keep) {
  HRep out;
  out.dim = keep.size();
  out.A = QMat(0, keep.size());
  out.E = QMat(0, keep.size());
  auto pick = [&](std::span<const Rat> row) {
    QVec r;
    for (std::size_t k : keep) r.push_back(row[k]);
    return r;
  };
  for (std::size_t i = 0; i < h.A.rows(); ++i) out.add_inequality(pick(h.A.row(i)), h.b[i]);
  for (std::size_t i = 0; i < h.E.rows(); ++i) out.add_equation(pick(h.E.row(i)), h.e[i]);
  out.irredundant = h.irredundant;
  return out;
}

HRep project_by_vertices(const HRep& h, const std::vector<std::size_t>& keep) {
  const VRep v = vertex_enumeration(h);
  VRep img;
  img.dim = keep.size();
  for (const QVec& x : v.points) {
    QVec y;
    for (std::size_t k : keep) y.push_back(x[k]);
    img.points.push_back(std::move(y));
  }
  return facet_enumeration(img);
}

// A row together with the set of input rows it was combined from.
struct TrackedRow {
  QVec row;  // (a, b)
  boost::dynamic_bitset<> history;
};

// One elimination step with Chernikov's rules: after `step` eliminations a
// row built from more than step + 1 input rows is redundant, and so is a row
// whose history strictly contains another's. Equal rows reached through
// different histories are all kept; collapsing them loses facets.
std::vector<TrackedRow> eliminate_tracked(const std::vector<TrackedRow>& in, std::size_t k, std::size_t d,
                                          std::size_t step) {
  std::map<QVec, std::vector<boost::dynamic_bitset<>>, LexLess> found;
  auto push = [&](QVec row, boost::dynamic_bitset<> hist) {
    if (hist.count() > step + 1) return;
    if (is_zero(std::span<const Rat>(row.data(), d)) && sgn(row[d]) >= 0) return;
    auto& hists = found[to_rational(primitive_integer(row))];
    if (std::find(hists.begin(), hists.end(), hist) == hists.end()) hists.push_back(std::move(hist));
  };
  std::vector<const TrackedRow*> pos;
  std::vector<const TrackedRow*> neg;
  for (const TrackedRow& r : in) {
    const int s = sgn(r.row[k]);
    if (s > 0) pos.push_back(&r);
    else if (s < 0) neg.push_back(&r);
    else push(r.row, r.history);
  }
  for (const TrackedRow* p : pos) {
    for (const TrackedRow* n : neg) {
      const Rat wp = -n->row[k];
      const Rat wn = p->row[k];
      QVec row(d + 1);
      for (std::size_t j = 0; j <= d; ++j) row[j] = wp * p->row[j] + wn * n->row[j];
      row[k] = 0;
      push(std::move(row), p->history | n->history);
    }
  }
  std::vector<TrackedRow> rows;
  for (auto& [row, hists] : found)
    for (auto& hist : hists) rows.push_back({row, hist});
  std::vector<bool> dominated(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size() && !dominated[i]; ++j)
      dominated[i] = j != i && rows[j].history.is_proper_subset_of(rows[i].history);
  std::vector<TrackedRow> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!dominated[i]) out.push_back(std::move(rows[i]));
  return out;
}

HRep project_by_elimination(const HRep& h, const std::vector<std::size_t>& drop) {
  const std::size_t d = h.dim;
  const HRep start = remove_redundancy(h);
  auto [M, rhs] = start.as_inequalities();
  std::vector<TrackedRow> rows;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    QVec r = M.row_vec(i);
    r.push_back(rhs[i]);
    boost::dynamic_bitset<> hist(M.rows());
    hist.set(i);
    rows.push_back({std::move(r), std::move(hist)});
  }
  // Eliminate the column with the fewest new rows first.
  std::vector<std::size_t> left = drop;
  for (std::size_t step = 1; !left.empty(); ++step) {
    auto cost = [&](std::size_t k) {
      std::size_t p = 0;
      std::size_t n = 0;
      for (const TrackedRow& r : rows) {
        p += sgn(r.row[k]) > 0;
        n += sgn(r.row[k]) < 0;
      }
      return p * n;
    };
    auto best = std::min_element(left.begin(), left.end(),
                                 [&](std::size_t a, std::size_t b) { return cost(a) < cost(b); });
    rows = eliminate_tracked(rows, *best, d, step);
    left.erase(best);
  }
  HRep out;
  out.dim = d;
  out.A = QMat(0, d);
  out.E = QMat(0, d);
  std::vector<QVec> distinct;
  for (const TrackedRow& r : rows) distinct.push_back(r.row);
  std::sort(distinct.begin(), distinct.end(), LexLess{});
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const QVec& r : distinct) out.add_inequality(std::span<const Rat>(r.data(), d), r[d]);
  if (out.A.rows() == 0) out.add_inequality(zeros(d), Rat(0));
  return remove_redundancy(out);
}

}  // namespace

HRep fm_eliminate(const HRep& h, std::size_t k) {
  auto [M, rhs] = h.as_inequalities();
  const std::size_t d = h.dim;
  std::vector<QVec> rows;
  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  auto push = [&](QVec row) {
    // row = (a, b); drop trivial rows, keep primitive representatives.
    if (is_zero(std::span<const Rat>(row.data(), d)) && sgn(row[d]) >= 0) return;
    rows.push_back(to_rational(primitive_integer(row)));
  };
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const int s = sgn(M(i, k));
    if (s > 0) pos.push_back(i);
    if (s < 0) neg.push_back(i);
    if (s == 0) {
      QVec row = M.row_vec(i);
      row.push_back(rhs[i]);
      push(std::move(row));
    }
  }
  for (std::size_t p : pos) {
    for (std::size_t n : neg) {
      const Rat wp = -M(n, k);
      const Rat wn = M(p, k);
      QVec row(d + 1);
      for (std::size_t j = 0; j < d; ++j) row[j] = wp * M(p, j) + wn * M(n, j);
      row[k] = 0;
      row[d] = wp * rhs[p] + wn * rhs[n];
      push(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), LexLess{});
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  HRep out;
  out.dim = d;
  out.A = QMat(0, d);
  out.E = QMat(0, d);
  for (const QVec& r : rows) out.add_inequality(std::span<const Rat>(r.data(), d), r[d]);
  return out;
}

HRep fm_project(const HRep& h, const std::vector<std::size_t>& keep, ProjectionRoute route) {
  h.validate();
  std::vector<bool> kept(h.dim, false);
  for (std::size_t k : keep) {
    if (k >= h.dim) throw InputError("fm_project: coordinate out of range");
    if (kept[k]) throw InputError("fm_project: repeated coordinate");
    kept[k] = true;
  }
  if (is_empty(h)) return empty_system(keep.size());

  std::vector<std::size_t> drop;
  for (std::size_t j = 0; j < h.dim; ++j)
    if (!kept[j]) drop.push_back(j);

  if (route == ProjectionRoute::VertexHull ||
      (route == ProjectionRoute::Auto && drop.size() > kFourierMotzkinLimit && is_bounded(h)))
    return project_by_vertices(h, keep);

  HRep out = select_columns(project_by_elimination(h, drop), keep);
  canonicalize_equations(out);
  out.irredundant = true;
  return out;
}

}  // namespace polyunion
