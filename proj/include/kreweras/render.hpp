#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kreweras/bijections.hpp"
#include "kreweras/noncrossing.hpp"
#include "kreweras/plane_tree.hpp"

namespace kreweras {

// Static SVG output.  Layout contract: circle of radius 100, point 1 at
// angle 90 degrees, labels proceeding clockwise; primed points interleaved
// at the half steps.  Coordinates are printed with two decimals so a given
// input always renders to identical bytes.

namespace svg {

inline constexpr double kRadius = 100.0;
inline constexpr double kMargin = 30.0;

struct Point {
    double x, y;
};

// Position k of m (1-based), clockwise from the top.
inline Point circle_point(int k, int m, double radius = kRadius) {
    const double theta = (90.0 - 360.0 * (k - 1) / m) * 3.14159265358979323846 / 180.0;
    return {radius * std::cos(theta), -radius * std::sin(theta)};
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0.00
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

inline std::string header(double width, double height) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += num(-width / 2) + " " + num(-height / 2) + " " + num(width) + " " + num(height) + "\">\n";
    return s;
}

inline std::string circle(const Point& c, double r, const std::string& cls) {
    return "  <circle class=\"" + cls + "\" cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(r) + "\"/>\n";
}

inline std::string line(const Point& a, const Point& b, const std::string& cls) {
    return "  <line class=\"" + cls + "\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
           "\" y2=\"" + num(b.y) + "\"/>\n";
}

inline std::string label(const Point& p, const std::string& text) {
    return "  <text x=\"" + num(p.x) + "\" y=\"" + num(p.y) +
           "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + text + "</text>\n";
}

inline std::string style_block() {
    return "  <style>\n"
           "    .frame { fill: none; stroke: #999; }\n"
           "    .pt { fill: #222; }\n"
           "    .chord { stroke: #1f4e8c; stroke-width: 1.5; fill: none; }\n"
           "    .hull-main { fill: #1f4e8c; fill-opacity: 0.25; stroke: #1f4e8c; stroke-width: 1.5; }\n"
           "    .hull-comp { fill: #b4421e; fill-opacity: 0.25; stroke: #b4421e; stroke-width: 1.5; }\n"
           "    .loop { fill: none; stroke: #1f4e8c; stroke-width: 1.5; }\n"
           "    .baseline { stroke: #999; }\n"
           "  </style>\n";
}

}  // namespace svg

// Chord diagram of a matching: labeled circle points, one straight chord
// per pair.
inline std::string render_matching_svg(const Matching& m) {
    const int points = 2 * m.n();
    const double size = 2 * (svg::kRadius + svg::kMargin);
    std::string s = svg::header(size, size);
    s += svg::style_block();
    s += svg::circle({0, 0}, svg::kRadius, "frame");
    for (const auto& [a, b] : m.chords())
        s += svg::line(svg::circle_point(a, points), svg::circle_point(b, points), "chord");
    for (int k = 1; k <= points; ++k) {
        s += svg::circle(svg::circle_point(k, points), 2.5, "pt");
        s += svg::label(svg::circle_point(k, points, svg::kRadius + 14), std::to_string(k));
    }
    s += "</svg>\n";
    return s;
}

inline std::string render_tree_svg(const PlaneTree& t) { return render_matching_svg(t.matching()); }

namespace svg {

// Convex hull of a block placed on given circle positions: a dot, a
// segment, or a polygon depending on the block size.
inline std::string hull(const std::vector<int>& positions, int total, const std::string& cls) {
    if (positions.size() == 1) return circle(circle_point(positions[0], total), 4.0, cls);
    if (positions.size() == 2)
        return line(circle_point(positions[0], total), circle_point(positions[1], total), cls);
    std::string s = "  <polygon class=\"" + cls + "\" points=\"";
    for (size_t k = 0; k < positions.size(); ++k) {
        if (k) s += ' ';
        const Point p = circle_point(positions[k], total);
        s += num(p.x) + "," + num(p.y);
    }
    s += "\"/>\n";
    return s;
}

}  // namespace svg

// Hull picture of a partition.  Without the complement, the n elements sit
// at n clockwise positions.  With it, elements take the odd positions of a
// 2n-point circle and the complement's primed points the even ones.
inline std::string render_partition_svg(const NoncrossingPartition& p, bool with_complement) {
    const int n = p.n();
    const int total = with_complement ? 2 * n : n;
    const double size = 2 * (svg::kRadius + svg::kMargin);
    std::string s = svg::header(size, size);
    s += svg::style_block();
    s += svg::circle({0, 0}, svg::kRadius, "frame");
    for (const auto& block : p.blocks()) {
        std::vector<int> positions;
        positions.reserve(block.size());
        for (int e : block) positions.push_back(with_complement ? 2 * e - 1 : e);
        s += svg::hull(positions, total, "hull-main");
    }
    if (with_complement) {
        for (const auto& block : complement(p).blocks()) {
            std::vector<int> positions;
            positions.reserve(block.size());
            for (int e : block) positions.push_back(2 * e);
            s += svg::hull(positions, total, "hull-comp");
        }
    }
    for (int e = 1; e <= n; ++e) {
        const int pos = with_complement ? 2 * e - 1 : e;
        s += svg::circle(svg::circle_point(pos, total), 2.5, "pt");
        s += svg::label(svg::circle_point(pos, total, svg::kRadius + 14), std::to_string(e));
    }
    if (with_complement) {
        for (int e = 1; e <= n; ++e) {
            s += svg::circle(svg::circle_point(2 * e, total), 2.5, "pt");
            s += svg::label(svg::circle_point(2 * e, total, svg::kRadius + 14), std::to_string(e) + "'");
        }
    }
    s += "</svg>\n";
    return s;
}

// Meander picture: 2n points on a horizontal line, the first matching
// drawn as arcs above, the second below.  Each closed loop of the union
// becomes one closed path, so a meander renders as a single loop element.
inline std::string render_meander_svg(const Matching& above, const Matching& below) {
    if (above.n() != below.n()) throw std::invalid_argument("render_meander_svg: mismatched n");
    const int points = 2 * above.n();
    const double spacing = 36.0;
    const double width = spacing * (points + 1);
    const double height = spacing * points / 2.0 + 2 * svg::kMargin;
    auto x_of = [&](int k) { return spacing * k - width / 2; };

    std::string s = svg::header(width, height);
    s += svg::style_block();
    s += svg::line({x_of(1) - spacing / 2, 0}, {x_of(points) + spacing / 2, 0}, "baseline");

    std::vector<bool> visited(static_cast<size_t>(points) + 1, false);
    for (int start = 1; start <= points; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        std::string d = "M " + svg::num(x_of(start)) + " 0.00";
        int at = start;
        bool up = true;
        do {
            visited[static_cast<size_t>(at)] = true;
            const int next = up ? above.partner(at) : below.partner(at);
            const double r = std::abs(x_of(next) - x_of(at)) / 2;
            // With the y axis pointing down, sweep 1 bulges upward when
            // traveling right; upper arcs need the bulge above the line.
            const int sweep = (up == (next > at)) ? 1 : 0;
            d += " A " + svg::num(r) + " " + svg::num(r) + " 0 0 " + std::to_string(sweep) + " " +
                 svg::num(x_of(next)) + " 0.00";
            at = next;
            up = !up;
        } while (!(at == start && up));
        d += " Z";
        s += "  <path class=\"loop\" d=\"" + d + "\"/>\n";
    }
    for (int k = 1; k <= points; ++k) {
        s += svg::circle({x_of(k), 0}, 2.5, "pt");
        s += svg::label({x_of(k), 14}, std::to_string(k));
    }
    s += "</svg>\n";
    return s;
}

}  // namespace kreweras
