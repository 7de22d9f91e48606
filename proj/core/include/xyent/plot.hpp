#pragma once

#include <string>
#include <vector>

#include "xyent/sweep.hpp"

namespace xyent {

enum class PlotMode {
  automatic,  // heat map when one quantity varies over both lambda and T
  curves,     // one curve per (gamma, temperature, r, quantity) over lambda
  heatmap,    // value over the (lambda, temperature) plane
};

// Render sweep rows as a self-contained SVG document.
std::string render_svg(const std::vector<ResultRow>& rows,
                       PlotMode mode = PlotMode::automatic);

void render_svg_file(const std::vector<ResultRow>& rows,
                     const std::string& path,
                     PlotMode mode = PlotMode::automatic);

}  // namespace xyent
