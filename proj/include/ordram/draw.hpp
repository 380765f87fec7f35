#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/core.hpp"

namespace ordram::draw {

// Convex: independent edges meet iff they cross. Twisted: iff they nest.
enum class Style { Convex, Twisted };

Style parse_style(std::string_view name);
std::string_view to_string(Style style);

struct Point {
    double x = 0;
    double y = 0;
};

struct DrawnEdge {
    Edge edge;
    Color color = 0;
    std::vector<Point> path;  // polyline through the curve
};

struct Drawing {
    Style style = Style::Convex;
    int m = 0;
    int t = 1;
    std::vector<Point> vertices;  // vertices[i-1] is vertex i
    std::vector<DrawnEdge> edges;
};

Drawing layout(int m, int t, std::span<const Edge> edges, std::span<const Color> colors, Style style);
Drawing layout(const OrderedColoring& coloring, Style style);
Drawing layout(const Certificate& cert, int m, Style style);

std::string to_svg(const Drawing& drawing);

/// True when the two polylines share a point.
bool polylines_intersect(std::span<const Point> a, std::span<const Point> b);

}  // namespace ordram::draw
