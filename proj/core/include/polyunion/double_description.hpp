#pragma once

#include <cstddef>
#include <vector>

#include "polyunion/hrep.hpp"
#include "polyunion/rational.hpp"

namespace polyunion {

/// Extreme rays of the pointed cone {z in R^n : G z <= 0}, computed by the
/// incremental double description method with the combinatorial adjacency
/// test. Rays come back as primitive integer vectors in lexicographic order.
/// Throws InputError when the cone is not pointed (rank G < n).
std::vector<IVec> extreme_rays(const std::vector<IVec>& G, std::size_t n);

/// Vertices of a bounded nonempty H-description, lexicographically sorted.
/// Errors: "not a polytope" when unbounded, "empty" when infeasible.
VRep vertex_enumeration(const HRep& h);

/// Irredundant H-description of conv(points). For a lower-dimensional hull
/// the equation block spans the affine hull and the facet rows are written
/// in the free coordinates of that block. Rows are canonical (primitive
/// integer) and lexicographically sorted.
HRep facet_enumeration(const VRep& v);

}  // namespace polyunion
