#include "rksolve/svg_plot.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rksolve/errors.hpp"

namespace rksolve {

namespace {

struct Series {
    const char* label;
    const std::string* color;
    double (*pick)(const SolutionRow&);
};

}  // namespace

std::string render_svg(const SolutionTable& table, const PlotConfig& config) {
    if (config.width <= 2 * config.margin || config.height <= 2 * config.margin) {
        throw std::invalid_argument("plot dimensions must exceed twice the margin");
    }
    if (table.rows.empty()) {
        throw std::invalid_argument("table has no rows");
    }

    double x_min = table.rows.front().x;
    double x_max = x_min;
    double y_min = table.rows.front().y_approx;
    double y_max = y_min;
    for (const SolutionRow& row : table.rows) {
        x_min = std::min(x_min, row.x);
        x_max = std::max(x_max, row.x);
        for (double value : {row.y_approx, row.y_exact, row.abs_error}) {
            y_min = std::min(y_min, value);
            y_max = std::max(y_max, value);
        }
    }
    if (x_min == x_max) {
        throw DegenerateRange("all x values coincide");
    }
    if (y_min == y_max) {
        throw DegenerateRange("all y values coincide");
    }

    const double plot_w = config.width - 2 * config.margin;
    const double plot_h = config.height - 2 * config.margin;
    const auto px = [&](double x) {
        return config.margin + (x - x_min) / (x_max - x_min) * plot_w;
    };
    const auto py = [&](double y) {
        return (config.height - config.margin) - (y - y_min) / (y_max - y_min) * plot_h;
    };

    const Series series[3] = {
        {"Y_Approximate", &config.approx_color, [](const SolutionRow& r) { return r.y_approx; }},
        {"Y_Exact", &config.exact_color, [](const SolutionRow& r) { return r.y_exact; }},
        {"Absolute_Error", &config.error_color, [](const SolutionRow& r) { return r.abs_error; }},
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << config.width
        << "\" height=\"" << config.height << "\" viewBox=\"0 0 " << config.width << " "
        << config.height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << config.width << "\" height=\"" << config.height
        << "\" fill=\"white\"/>\n";

    // axes
    const int left = config.margin;
    const int right = config.width - config.margin;
    const int top = config.margin;
    const int bottom = config.height - config.margin;
    svg << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << bottom
        << "\" stroke=\"black\"/>\n";

    // min/max tick labels
    svg << "<text x=\"" << left << "\" y=\"" << bottom + 16
        << "\" font-size=\"12\" text-anchor=\"middle\">" << format_number(x_min) << "</text>\n";
    svg << "<text x=\"" << right << "\" y=\"" << bottom + 16
        << "\" font-size=\"12\" text-anchor=\"middle\">" << format_number(x_max) << "</text>\n";
    svg << "<text x=\"" << left - 6 << "\" y=\"" << bottom
        << "\" font-size=\"12\" text-anchor=\"end\">" << format_number(y_min) << "</text>\n";
    svg << "<text x=\"" << left - 6 << "\" y=\"" << top + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << format_number(y_max) << "</text>\n";

    for (const Series& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << *s.color << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (const SolutionRow& row : table.rows) {
            if (!first) svg << ' ';
            first = false;
            svg << format_number(px(row.x)) << ',' << format_number(py(s.pick(row)));
        }
        svg << "\"/>\n";
    }

    // legend, top right of the plot area
    const int legend_x = right - 160;
    for (int i = 0; i < 3; ++i) {
        const int row_y = top + 14 + 18 * i;
        svg << "<line x1=\"" << legend_x << "\" y1=\"" << row_y << "\" x2=\"" << legend_x + 28
            << "\" y2=\"" << row_y << "\" stroke=\"" << *series[i].color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << legend_x + 34 << "\" y=\"" << row_y + 4 << "\" font-size=\"12\">"
            << series[i].label << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rksolve
