#pragma once

// SVG rendering of a vertex configuration. Output depends only on the
// configuration and the options, so it can be compared byte for byte.

#include "tgwa/vertex_config.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace tgwa {

struct SvgOptions {
    int halfCell = 30;  // pixels per doubled-coordinate unit
    int margin = 20;
    std::string gridColor = "#b0b0b0";
    std::string edgeColor = "#1f5fd0";
    std::string boundaryColor = "#606060";
    std::string labelColor = "#000000";
    int gridWidth = 1;
    int edgeWidth = 4;  // per unit of multiplicity
    int fontSize = 14;
};

namespace detail {

inline std::string xmlEscape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

inline long oddFloor(long v) { return (v % 2 != 0) ? v : v - 1; }
inline long oddCeil(long v) { return (v % 2 != 0) ? v : v + 1; }

}  // namespace detail

/// Grid lines run through vertices (odd coordinates). For a lattice <(r,s)>
/// with r >= 1 the strip -1 <= x <= 2r-1 is drawn, bounded by dashed lines
/// that are identified by the period.
inline std::string renderSvg(const VertexConfig& c, const SvgOptions& opts = {}) {
    long xlo = -1, xhi = 1, ylo = -1, yhi = 1;
    const bool periodic = c.lattice().rank() == 1 && c.lattice().basis[0][0] >= 1;
    if (periodic) xhi = 2 * c.lattice().basis[0][0] - 1;
    for (const auto& [k, mult] : c.edges) {
        if (!periodic) {
            xlo = std::min(xlo, detail::oddFloor(k.first - 1));
            xhi = std::max(xhi, detail::oddCeil(k.first + 1));
        }
        ylo = std::min(ylo, detail::oddFloor(k.second - 1));
        yhi = std::max(yhi, detail::oddCeil(k.second + 1));
    }
    xlo -= periodic ? 0 : 2;
    xhi += periodic ? 0 : 2;
    ylo -= 2;
    yhi += 2;

    const int h = opts.halfCell;
    auto px = [&](long x) { return opts.margin + (x - xlo) * h; };
    auto py = [&](long y) { return opts.margin + (yhi - y) * h; };
    const long width = 2 * opts.margin + (xhi - xlo) * h;
    const long height = 2 * opts.margin + (yhi - ylo) * h;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

    out << "<g stroke=\"" << opts.gridColor << "\" stroke-width=\"" << opts.gridWidth << "\">\n";
    for (long x = xlo; x <= xhi; x += 2) {
        if (periodic && (x == xlo || x == xhi)) continue;
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(yhi) << "\" x2=\"" << px(x) << "\" y2=\"" << py(ylo)
            << "\"/>\n";
    }
    for (long y = ylo; y <= yhi; y += 2)
        out << "<line x1=\"" << px(xlo) << "\" y1=\"" << py(y) << "\" x2=\"" << px(xhi) << "\" y2=\"" << py(y)
            << "\"/>\n";
    out << "</g>\n";

    if (periodic) {
        out << "<g stroke=\"" << opts.boundaryColor << "\" stroke-width=\"" << opts.gridWidth + 1
            << "\" stroke-dasharray=\"6,4\">\n";
        for (long x : {xlo, xhi})
            out << "<line x1=\"" << px(x) << "\" y1=\"" << py(yhi) << "\" x2=\"" << px(x) << "\" y2=\"" << py(ylo)
                << "\"/>\n";
        out << "</g>\n";
    }

    out << "<g stroke=\"" << opts.edgeColor << "\" stroke-linecap=\"round\">\n";
    for (const auto& [k, mult] : c.edges) {
        auto [x, y] = k;
        long x1 = x, x2 = x, y1 = y, y2 = y;
        if (isTypeI(k)) {
            y1 = y - 1;
            y2 = y + 1;
        } else {
            x1 = x - 1;
            x2 = x + 1;
        }
        out << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
            << "\" stroke-width=\"" << opts.edgeWidth * static_cast<int>(mult) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g fill=\"" << opts.labelColor << "\" font-family=\"monospace\" font-size=\"" << opts.fontSize
        << "\" text-anchor=\"middle\">\n";
    for (const auto& [k, mult] : c.edges) {
        if (mult < 2) continue;
        long lx = px(k.first) + (isTypeI(k) ? opts.fontSize : 0);
        long ly = py(k.second) - (isTypeI(k) ? 0 : opts.fontSize / 2);
        out << "<text x=\"" << lx << "\" y=\"" << ly << "\">" << mult << "</text>\n";
    }
    out << "<text x=\"" << px(0) << "\" y=\"" << py(0) + opts.fontSize / 3 << "\">"
        << detail::xmlEscape(toString(c.baseFace())) << "</text>\n";
    out << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tgwa
