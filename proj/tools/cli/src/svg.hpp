#pragma once

#include <string>
#include <vector>

#include "chordiv/sweep.hpp"

namespace chordiv::cli {

/// Static heatmap of a sweep: alpha across, beta up, linear colour scale.
std::string sweep_heatmap_svg(const SweepGrid& grid, const std::vector<SweepRow>& rows,
                              const std::string& title);

}  // namespace chordiv::cli
