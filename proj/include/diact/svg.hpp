#pragma once

#include <string>
#include <vector>

#include "diact/matrix.hpp"

namespace diact {

/// Standalone SVG heatmap: one rect per coefficient, sector labels on both
/// axes, single-hue ramp scaled linearly from 0 to the matrix maximum.
std::string heatmap_svg(const Matrix& m, const std::vector<std::string>& labels,
                        const std::string& title);

}  // namespace diact
