#include "polyunion/polytope.hpp"

#include <algorithm>

#include "polyunion/double_description.hpp"
#include "polyunion/errors.hpp"

namespace polyunion {

IndexSet Polytope::vertex_facets(std::size_t i) const {
  IndexSet s(num_facets());
  for (std::size_t f = 0; f < num_facets(); ++f)
    if (incidence[f].test(i)) s.set(f);
  return s;
}

IndexSet Polytope::vertices_on(const IndexSet& facets) const {
  IndexSet s(num_vertices());
  s.set();
  for (std::size_t f = facets.find_first(); f != IndexSet::npos; f = facets.find_next(f)) s &= incidence[f];
  return s;
}

std::vector<IndexSet> compute_incidence(const HRep& h, const VRep& v) {
  std::vector<IndexSet> inc(h.A.rows(), IndexSet(v.points.size()));
  for (std::size_t f = 0; f < h.A.rows(); ++f)
    for (std::size_t i = 0; i < v.points.size(); ++i)
      if (dot(h.A.row(f), v.points[i]) == h.b[f]) inc[f].set(i);
  return inc;
}

Polytope make_polytope(const HRep& h, std::vector<std::size_t>* kept) {
  h.validate();
  if (is_empty(h)) throw InputError("empty");
  if (!is_bounded(h)) throw InputError("not a polytope");
  Polytope p;
  p.h = remove_redundancy(h, kept);
  p.v = vertex_enumeration(p.h);
  p.incidence = compute_incidence(p.h, p.v);
  return p;
}

std::optional<Polytope> try_make_polytope(const HRep& h) {
  try {
    return make_polytope(h);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Polytope make_polytope(const VRep& v) {
  v.validate();
  if (v.points.empty()) throw InputError("empty");
  Polytope p;
  p.h = facet_enumeration(v);
  std::vector<QVec> pts = v.points;
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // A point is a vertex iff its tight facet normals together with the
  // equation normals have full rank.
  p.v.dim = v.dim;
  for (const QVec& x : pts) {
    std::vector<QVec> normals;
    for (std::size_t i = 0; i < p.h.E.rows(); ++i) normals.push_back(p.h.E.row_vec(i));
    for (std::size_t f : p.h.tight_rows(x)) normals.push_back(p.h.A.row_vec(f));
    if (rank_of_vectors(normals, v.dim) == v.dim) p.v.points.push_back(x);
  }
  p.v.minimal = true;
  p.incidence = compute_incidence(p.h, p.v);
  return p;
}

int dim(const HRep& h) {
  if (is_empty(h)) return -1;
  const HRep r = remove_redundancy(h);
  return static_cast<int>(r.dim) - static_cast<int>(r.E.rows());
}

int dim(const VRep& v) { return affine_dimension(v.points); }

bool combinatorial_equal(const Polytope& p, const Polytope& q, const std::vector<std::size_t>& facet_map) {
  if (facet_map.size() != p.num_facets())
    throw InputError("combinatorial_equal: facet map is not total");
  std::vector<bool> hit(facet_map.size(), false);
  for (std::size_t t : facet_map) {
    if (t >= facet_map.size() || hit[t]) throw InputError("combinatorial_equal: facet map is not a bijection");
    hit[t] = true;
  }
  if (p.num_facets() != q.num_facets() || p.num_vertices() != q.num_vertices()) return false;

  std::vector<IndexSet> cols_p;
  std::vector<IndexSet> cols_q;
  for (std::size_t i = 0; i < p.num_vertices(); ++i) {
    IndexSet s(p.num_facets());
    for (std::size_t f = 0; f < p.num_facets(); ++f)
      if (p.incidence[f].test(i)) s.set(facet_map[f]);
    cols_p.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < q.num_vertices(); ++i) cols_q.push_back(q.vertex_facets(i));
  std::sort(cols_p.begin(), cols_p.end());
  std::sort(cols_q.begin(), cols_q.end());
  return cols_p == cols_q;
}

bool combinatorial_equal(const Polytope& p, const Polytope& q) {
  std::vector<std::size_t> identity(p.num_facets());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return combinatorial_equal(p, q, identity);
}

bool same_set(const Polytope& p, const Polytope& q) {
  return p.ambient_dim() == q.ambient_dim() && p.v.points == q.v.points;
}

std::vector<QVec> canonical_facets(const HRep& h) {
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < h.A.rows(); ++i) {
    QVec r = h.A.row_vec(i);
    r.push_back(h.b[i]);
    rows.push_back(to_rational(primitive_integer(r)));
  }
  std::sort(rows.begin(), rows.end(), LexLess{});
  return rows;
}

Polytope project_vertices(const Polytope& p, const std::vector<std::size_t>& keep) {
  VRep img;
  img.dim = keep.size();
  for (const QVec& x : p.v.points) {
    QVec y;
    for (std::size_t k : keep) y.push_back(x.at(k));
    img.points.push_back(std::move(y));
  }
  return make_polytope(img);
}

}  // namespace polyunion
