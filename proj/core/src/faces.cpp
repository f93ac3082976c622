#include "polyunion/faces.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

std::vector<QVec> points_of(const Polytope& p, const IndexSet& vertices) {
  std::vector<QVec> pts;
  for (std::size_t i = vertices.find_first(); i != IndexSet::npos; i = vertices.find_next(i))
    pts.push_back(p.v.points[i]);
  return pts;
}

}  // namespace

std::size_t Cone::dim() const {
  std::vector<QVec> all = generators;
  all.insert(all.end(), lineality.begin(), lineality.end());
  return rank_of_vectors(all, ambient);
}

Face face_closure(const Polytope& p, const IndexSet& vertices) {
  Face f;
  f.tight_facets = IndexSet(p.num_facets());
  f.incident_vertices = IndexSet(p.num_vertices());
  f.incident_vertices.set();
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    if (vertices.is_subset_of(p.incidence[k])) {
      f.tight_facets.set(k);
      f.incident_vertices &= p.incidence[k];
    }
  }
  f.dim = affine_dimension(points_of(p, f.incident_vertices));
  return f;
}

std::vector<Face> face_lattice(const Polytope& p) {
  const std::size_t nv = p.num_vertices();
  const std::size_t nf = p.num_facets();
  std::map<IndexSet, Face> found;
  std::deque<IndexSet> queue;

  auto visit = [&](const IndexSet& vertices) {
    if (vertices.none()) return;
    Face f = face_closure(p, vertices);
    if (found.count(f.incident_vertices)) return;
    queue.push_back(f.incident_vertices);
    found.emplace(f.incident_vertices, std::move(f));
  };

  IndexSet all(nv);
  all.set();
  visit(all);
  for (std::size_t k = 0; k < nf; ++k) visit(p.incidence[k]);
  while (!queue.empty()) {
    const IndexSet current = queue.front();
    queue.pop_front();
    const IndexSet tight = found.at(current).tight_facets;
    for (std::size_t k = 0; k < nf; ++k) {
      if (tight.test(k)) continue;
      visit(current & p.incidence[k]);
    }
  }

  std::vector<Face> faces;
  Face empty;
  empty.tight_facets = IndexSet(nf);
  empty.tight_facets.set();
  empty.incident_vertices = IndexSet(nv);
  empty.dim = -1;
  faces.push_back(std::move(empty));
  for (auto& [key, f] : found) faces.push_back(std::move(f));
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.incident_vertices < b.incident_vertices;
  });
  return faces;
}

std::vector<Face> faces_of_dim(const Polytope& p, int k) {
  if (k < -1 || k > p.dim()) throw InputError("faces_of_dim: dimension out of range");
  std::vector<Face> out;
  for (Face& f : face_lattice(p))
    if (f.dim == k) out.push_back(std::move(f));
  return out;
}

Face face_maximizing(const Polytope& p, const QVec& c) {
  if (c.size() != p.ambient_dim()) throw InputError("face_maximizing: dimension mismatch");
  if (p.num_vertices() == 0) throw InputError("face_maximizing: empty polytope");
  IndexSet best(p.num_vertices());
  Rat best_value = dot(c, p.v.points[0]);
  best.set(0);
  for (std::size_t i = 1; i < p.num_vertices(); ++i) {
    const Rat val = dot(c, p.v.points[i]);
    const int s = cmp(val, best_value);
    if (s > 0) {
      best.reset();
      best_value = val;
    }
    if (s >= 0) best.set(i);
  }
  return face_closure(p, best);
}

Cone optimality_cone_closed(const Polytope& p, const Face& f) {
  if (f.incident_vertices.none()) throw InputError("optimality_cone: empty face");
  Cone cone;
  cone.ambient = p.ambient_dim();
  for (std::size_t k = f.tight_facets.find_first(); k != IndexSet::npos; k = f.tight_facets.find_next(k))
    cone.generators.push_back(p.h.A.row_vec(k));
  for (std::size_t i = 0; i < p.h.E.rows(); ++i) cone.lineality.push_back(p.h.E.row_vec(i));
  return cone;
}

Cone optimality_cone(const Polytope& p, const Face& f) {
  Cone cone = optimality_cone_closed(p, f);
  cone.open = true;
  return cone;
}

bool in_optimality_cone(const Polytope& p, const Face& f, const QVec& c) {
  if (f.incident_vertices.none()) throw InputError("optimality_cone: empty face");
  return face_maximizing(p, c).incident_vertices == f.incident_vertices;
}

std::vector<QVec> cone_span_basis(const Cone& cone) {
  std::vector<QVec> all = cone.generators;
  all.insert(all.end(), cone.lineality.begin(), cone.lineality.end());
  if (all.empty()) return {};
  const Rref rr = rref(QMat::from_rows(all, cone.ambient));
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < rr.reduced.rows(); ++i) basis.push_back(rr.reduced.row_vec(i));
  return basis;
}

}  // namespace polyunion
