#pragma once

#include "polyunion/hrep.hpp"

namespace polyunion::oracle {

// Reference conversions by exhaustive subset enumeration. Exponential; kept
// independent of the double description code so tests can compare the two.

/// Every d-subset of rows (equations expanded to pairs) is solved as a
/// square system; feasible solutions are the vertices. Sorted, unique.
VRep vertex_enumeration(const HRep& h);

/// Every d-subset of affinely independent points spans a candidate
/// hyperplane; supporting ones are facets. Requires a full-dimensional
/// hull. Rows primitive-integer, sorted as in polyunion::facet_enumeration.
HRep facet_enumeration(const VRep& v);

}  // namespace polyunion::oracle
