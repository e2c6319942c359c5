#pragma once

#include <string>

#include "rksolve/table.hpp"

namespace rksolve {

struct PlotConfig {
    int width = 800;    // pixels; must exceed 2*margin
    int height = 600;   // pixels; must exceed 2*margin
    int margin = 50;    // pixels around the plot area
    std::string approx_color = "red";
    std::string exact_color = "yellow";
    std::string error_color = "green";
};

/// Renders the three series (approximate, exact, absolute error against x)
/// as a standalone SVG 1.1 document: exactly three polylines mapped linearly
/// into the plot area, axis lines with min/max tick labels, and a legend.
/// All series share one y scale; x increases left to right.
///
/// Throws DegenerateRange when all x values or all y values coincide.
std::string render_svg(const SolutionTable& table, const PlotConfig& config = {});

}  // namespace rksolve
