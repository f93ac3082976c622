#pragma once

#include <cstddef>
#include <vector>

#include "polyunion/polytope.hpp"

namespace polyunion {

/// A face as the facets tight on it and the vertices it contains.
struct Face {
  IndexSet tight_facets;
  IndexSet incident_vertices;
  int dim = -1;

  friend bool operator==(const Face&, const Face&) = default;
};

/// {sum l_i g_i + sum m_j v_j : l >= 0, m free}. `open` marks the relative
/// interior of that set.
struct Cone {
  std::vector<QVec> generators;
  std::vector<QVec> lineality;
  std::size_t ambient = 0;
  bool open = false;

  /// Dimension of the linear span (equal for the cone and its relint).
  std::size_t dim() const;
};

/// Every face of `p`, from the empty face (dim -1) up to `p` itself, each
/// exactly once. Obtained by closing intersections of facets over the
/// incidence matrix. Ordered by dimension, then by vertex set.
std::vector<Face> face_lattice(const Polytope& p);

/// All faces of dimension k; InputError unless -1 <= k <= dim(p).
std::vector<Face> faces_of_dim(const Polytope& p, int k);

/// Smallest face containing the given vertices.
Face face_closure(const Polytope& p, const IndexSet& vertices);

/// Face of maximizers of c over p.
Face face_maximizing(const Polytope& p, const QVec& c);

/// Closed optimality cone: generated by the normals of facets containing f,
/// with the affine-hull normals of p as lineality.
Cone optimality_cone_closed(const Polytope& p, const Face& f);
/// Open optimality cone: same data, marked open.
Cone optimality_cone(const Polytope& p, const Face& f);

/// c lies in the open optimality cone of f iff f is exactly the face of
/// maximizers of c.
bool in_optimality_cone(const Polytope& p, const Face& f, const QVec& c);

/// Basis of the linear span of the closed optimality cone.
std::vector<QVec> cone_span_basis(const Cone& cone);

}  // namespace polyunion
