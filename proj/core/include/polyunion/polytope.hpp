#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "polyunion/hrep.hpp"

namespace polyunion {

using IndexSet = boost::dynamic_bitset<>;

/// Paired H/V description with facet-vertex incidence.
///
/// `h` is irredundant (rows are facets, equations span the affine hull) and
/// `v` is the vertex list in lexicographic order. `incidence[f][v]` is set
/// iff vertex v lies on facet f.
struct Polytope {
  HRep h;
  VRep v;
  std::vector<IndexSet> incidence;

  std::size_t ambient_dim() const { return h.dim; }
  std::size_t num_facets() const { return h.A.rows(); }
  std::size_t num_vertices() const { return v.points.size(); }
  int dim() const { return static_cast<int>(h.dim) - static_cast<int>(h.E.rows()); }
  bool full_dimensional() const { return h.E.rows() == 0; }

  /// Facets containing vertex `i`.
  IndexSet vertex_facets(std::size_t i) const;
  /// Vertices of the face cut out by all facets in `facets`.
  IndexSet vertices_on(const IndexSet& facets) const;
};

/// Builds the pair from an inequality description. Surviving rows keep
/// their input order; `kept` receives their original indices.
Polytope make_polytope(const HRep& h, std::vector<std::size_t>* kept = nullptr);
/// Builds the pair from a point list; facets come out canonically sorted.
Polytope make_polytope(const VRep& v);
/// Same as make_polytope(h) but returns nullopt for empty or unbounded input.
std::optional<Polytope> try_make_polytope(const HRep& h);

std::vector<IndexSet> compute_incidence(const HRep& h, const VRep& v);

/// Affine dimension; -1 for the empty set.
int dim(const HRep& h);
int dim(const VRep& v);

/// True iff some vertex bijection makes the incidence matrices equal under
/// `facet_map` (facet i of p corresponds to facet facet_map[i] of q).
/// Different facet or vertex counts give false; a map that is not a
/// permutation of the facet indices is an InputError.
bool combinatorial_equal(const Polytope& p, const Polytope& q,
                         const std::vector<std::size_t>& facet_map);
bool combinatorial_equal(const Polytope& p, const Polytope& q);

/// Same point set, decided on the sorted vertex lists.
bool same_set(const Polytope& p, const Polytope& q);

/// Facet rows as primitive integer (a, b) pairs, sorted. Only meaningful as
/// a canonical form for full-dimensional polytopes.
std::vector<QVec> canonical_facets(const HRep& h);

/// Image of the vertex set under the coordinate selection `keep`, hulled.
Polytope project_vertices(const Polytope& p, const std::vector<std::size_t>& keep);

}  // namespace polyunion
