#pragma once

#include <cstddef>
#include <vector>

#include "polyunion/hrep.hpp"

namespace polyunion {

enum class ProjectionRoute {
  Auto,            // Fourier-Motzkin, or the vertex route past 6 eliminations
  FourierMotzkin,
  VertexHull,      // bounded input only
};

/// {x_keep : exists the other coordinates with x in h}, columns in the order
/// of `keep`. The result is irredundant. An empty input projects to the
/// empty system {0 <= -1}.
HRep fm_project(const HRep& h, const std::vector<std::size_t>& keep,
                ProjectionRoute route = ProjectionRoute::Auto);

/// One Fourier-Motzkin step: every positive/negative pair of rows in column
/// `k` combined so the column cancels. Rows zero in column k pass through.
/// No redundancy removal.
HRep fm_eliminate(const HRep& h, std::size_t k);

}  // namespace polyunion
