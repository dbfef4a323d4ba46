// Static SVG rendering of a polygon inside n*Delta with lattice dots.
// Render-only; never feeds back into any computation.
#pragma once

#include <sstream>
#include <string>

#include "polytope.hpp"

namespace latmax {

struct SvgOptions {
    double unit = 28.0;    // pixels per lattice step
    double margin = 20.0;
    bool skew = false;     // draw in the sheared frame (x,y) -> (x-y, y)
};

inline std::string render_svg(const Polytope& p, Int n, const SvgOptions& opts = {}) {
    const auto tx = [&](double x, double y) { return opts.skew ? x - y : x; };
    const double min_x = opts.skew ? tx(0, n) : 0.0;
    const double max_x = static_cast<double>(n);
    const double w = (max_x - min_x) * opts.unit + 2 * opts.margin;
    const double h = n * opts.unit + 2 * opts.margin;
    const auto px = [&](double x, double y) { return opts.margin + (tx(x, y) - min_x) * opts.unit; };
    const auto py = [&](double y) { return h - opts.margin - y * opts.unit; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "  <polygon points=\"" << px(0, 0) << ',' << py(0) << ' ' << px(double(n), 0) << ','
        << py(0) << ' ' << px(0, double(n)) << ',' << py(double(n))
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) svg << ' ';
        svg << px(double(p.vertices[i].x), double(p.vertices[i].y)) << ','
            << py(double(p.vertices[i].y));
    }
    svg << "\" fill=\"#cfe3f7\" stroke=\"#1f4e79\" stroke-width=\"2\" stroke-linejoin=\"round\"/>\n";
    for (Int x = 0; x <= n; ++x)
        for (Int y = 0; x + y <= n; ++y)
            svg << "  <circle cx=\"" << px(double(x), double(y)) << "\" cy=\"" << py(double(y))
                << "\" r=\"1.8\" fill=\"#444\"/>\n";
    for (const auto& v : p.vertices)
        svg << "  <circle cx=\"" << px(double(v.x), double(v.y)) << "\" cy=\"" << py(double(v.y))
            << "\" r=\"3.2\" fill=\"#1f4e79\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace latmax
