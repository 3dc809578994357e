#pragma once

#include "tiling.hpp"

#include <string>

namespace torusmaps {

// SVG picture of a cells x cells block of translation cells of the tiling,
// every face cut into its flag triangles (corner, edge midpoint, barycenter),
// colored by the flag's orbit class under the full symmetry group.  Output is
// deterministic byte-for-byte.  cells must be in [1, 6].
std::string render_svg(TilingId id, int cells);

}  // namespace torusmaps
