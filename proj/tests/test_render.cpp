#include "kreweras/render.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "kreweras/io.hpp"

using namespace kreweras;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

struct Segment {
    double x1, y1, x2, y2;
};

double attr(const std::string& element, const std::string& name) {
    const size_t at = element.find(name + "=\"");
    REQUIRE(at != std::string::npos);
    return std::stod(element.substr(at + name.size() + 2));
}

// Every straight stroke of the given class: <line> elements plus the sides
// of <polygon> elements.
std::vector<Segment> strokes_of_class(const std::string& svg, const std::string& cls) {
    std::vector<Segment> segments;
    const std::string line_tag = "<line class=\"" + cls + "\"";
    for (size_t pos = svg.find(line_tag); pos != std::string::npos; pos = svg.find(line_tag, pos + 1)) {
        const std::string element = svg.substr(pos, svg.find("/>", pos) - pos);
        segments.push_back({attr(element, "x1"), attr(element, "y1"), attr(element, "x2"), attr(element, "y2")});
    }
    const std::string poly_tag = "<polygon class=\"" + cls + "\"";
    for (size_t pos = svg.find(poly_tag); pos != std::string::npos; pos = svg.find(poly_tag, pos + 1)) {
        const std::string element = svg.substr(pos, svg.find("/>", pos) - pos);
        const size_t at = element.find("points=\"");
        REQUIRE(at != std::string::npos);
        std::string list = element.substr(at + 8);
        list = list.substr(0, list.find('"'));
        std::vector<std::pair<double, double>> pts;
        size_t i = 0;
        while (i < list.size()) {
            size_t comma = list.find(',', i);
            size_t space = list.find(' ', comma);
            if (space == std::string::npos) space = list.size();
            pts.emplace_back(std::stod(list.substr(i, comma - i)), std::stod(list.substr(comma + 1, space - comma - 1)));
            i = space + 1;
        }
        for (size_t k = 0; k < pts.size(); ++k) {
            const auto& a = pts[k];
            const auto& b = pts[(k + 1) % pts.size()];
            segments.push_back({a.first, a.second, b.first, b.second});
        }
    }
    return segments;
}

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

bool properly_intersect(const Segment& s, const Segment& t) {
    const double d1 = orient(s.x1, s.y1, s.x2, s.y2, t.x1, t.y1);
    const double d2 = orient(s.x1, s.y1, s.x2, s.y2, t.x2, t.y2);
    const double d3 = orient(t.x1, t.y1, t.x2, t.y2, s.x1, s.y1);
    const double d4 = orient(t.x1, t.y1, t.x2, t.y2, s.x2, s.y2);
    return d1 * d2 < -1e-9 && d3 * d4 < -1e-9;
}

}  // namespace

TEST_CASE("matching render has the expected structure") {
    const std::string svg = render_matching_svg(star_center(2).matching());
    REQUIRE(svg.rfind("<svg", 0) == 0);
    REQUIRE(count_occurrences(svg, "<circle class=\"pt\"") == 4);
    REQUIRE(count_occurrences(svg, "<line class=\"chord\"") == 2);
    REQUIRE(count_occurrences(svg, "<text") == 4);
    REQUIRE(render_tree_svg(star_center(2)) == svg);
}

TEST_CASE("rendering is deterministic") {
    const NoncrossingPartition p = parse_partition("1,3/2/4");
    REQUIRE(render_partition_svg(p, true) == render_partition_svg(p, true));
    REQUIRE(render_matching_svg(star_leaf(3).matching()) == render_matching_svg(star_leaf(3).matching()));
}

TEST_CASE("partition render draws disjoint hulls for partition and complement") {
    const NoncrossingPartition p = parse_partition("1,3/2/4");
    const std::string svg = render_partition_svg(p, true);
    REQUIRE(count_occurrences(svg, "<circle class=\"pt\"") == 8);
    // Blocks {1,3} as a segment, {2} and {4} as dots.
    REQUIRE(count_occurrences(svg, "<line class=\"hull-main\"") == 1);
    REQUIRE(count_occurrences(svg, "<circle class=\"hull-main\"") == 2);
    // The complement 1,2/3,4 contributes two segments on the primed points.
    REQUIRE(count_occurrences(svg, "<line class=\"hull-comp\"") == 2);
    for (const auto& a : strokes_of_class(svg, "hull-main"))
        for (const auto& b : strokes_of_class(svg, "hull-comp")) REQUIRE_FALSE(properly_intersect(a, b));
}

TEST_CASE("hulls never cross for any partition with its complement") {
    for (const auto& p : enumerate_partitions(5)) {
        const std::string svg = render_partition_svg(p, true);
        const auto main_hulls = strokes_of_class(svg, "hull-main");
        const auto comp_hulls = strokes_of_class(svg, "hull-comp");
        for (const auto& a : main_hulls)
            for (const auto& b : comp_hulls) REQUIRE_FALSE(properly_intersect(a, b));
    }
}

TEST_CASE("partition render without complement uses n positions") {
    const std::string svg = render_partition_svg(parse_partition("1,2,3"), false);
    REQUIRE(count_occurrences(svg, "<circle class=\"pt\"") == 3);
    REQUIRE(count_occurrences(svg, "<polygon class=\"hull-main\"") == 1);
    REQUIRE(count_occurrences(svg, "hull-comp") == 0);
}

TEST_CASE("meander render closes one loop exactly for meander pairs") {
    const PlaneTree t = PlaneTree::from_dyck("(()())");
    const std::string one = render_meander_svg(t.matching(), reroot(t).matching());
    REQUIRE(count_occurrences(one, "<path class=\"loop\"") == 1);
    REQUIRE(count_occurrences(one, "<circle class=\"pt\"") == 12);

    const Matching m = star_center(2).matching();
    const std::string two = render_meander_svg(m, m);
    REQUIRE(count_occurrences(two, "<path class=\"loop\"") == 2);
}
