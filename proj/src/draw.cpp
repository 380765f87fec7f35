#include "ordram/draw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ordram::draw {

namespace {

constexpr int kArcSamples = 96;

// Half circle over the axis segment [from, to] (either order), bulging up or down.
void half_circle(std::vector<Point>& path, double from, double to, bool up) {
    const double center = (from + to) / 2;
    const double radius = std::abs(to - from) / 2;
    const double start = from < to ? std::numbers::pi : 0.0;
    const double sweep = from < to ? -std::numbers::pi : std::numbers::pi;
    for (int s = path.empty() ? 0 : 1; s <= kArcSamples; ++s) {
        const double a = start + sweep * s / kArcSamples;
        const double y = radius * std::sin(a);
        path.push_back({center + radius * std::cos(a), up ? std::abs(y) : -std::abs(y)});
    }
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
    return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) && std::min(p.y, r.y) <= q.y &&
           q.y <= std::max(p.y, r.y);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
    const double d1 = cross(p3, p4, p1);
    const double d2 = cross(p3, p4, p2);
    const double d3 = cross(p1, p2, p3);
    const double d4 = cross(p1, p2, p4);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(p3, p1, p4)) return true;
    if (d2 == 0 && on_segment(p3, p2, p4)) return true;
    if (d3 == 0 && on_segment(p1, p3, p2)) return true;
    if (d4 == 0 && on_segment(p1, p4, p2)) return true;
    return false;
}

constexpr std::array<const char*, 10> kPalette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

Style parse_style(std::string_view name) {
    if (name == "convex") return Style::Convex;
    if (name == "twisted") return Style::Twisted;
    fail(ErrorKind::InvalidArgument, "unknown drawing style '" + std::string(name) + "'");
}

std::string_view to_string(Style style) { return style == Style::Convex ? "convex" : "twisted"; }

Drawing layout(int m, int t, std::span<const Edge> edges, std::span<const Color> colors, Style style) {
    require(m >= 1, "needs m >= 1");
    require(edges.size() == colors.size(), "one color per edge is required");
    Drawing d;
    d.style = style;
    d.m = m;
    d.t = t;
    for (int i = 1; i <= m; ++i) {
        if (style == Style::Convex) {
            const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * (i - 1) / m;
            d.vertices.push_back({std::cos(a), std::sin(a)});
        } else {
            d.vertices.push_back({static_cast<double>(i), 0.0});
        }
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        require(e.lo >= 1 && e.lo < e.hi && e.hi <= m, "edge " + to_string(e) + " is out of range");
        DrawnEdge de{e, colors[k], {}};
        if (style == Style::Convex) {
            de.path = {d.vertices[static_cast<std::size_t>(e.lo - 1)], d.vertices[static_cast<std::size_t>(e.hi - 1)]};
        } else {
            // Upper half circle from lo to a turning point left of every vertex,
            // lower half circle back to hi; turning points grow with lex order.
            const double turn = -0.5 * static_cast<double>(edge_index(m, e) + 1);
            half_circle(de.path, e.lo, turn, true);
            half_circle(de.path, turn, e.hi, false);
        }
        d.edges.push_back(std::move(de));
    }
    return d;
}

Drawing layout(const OrderedColoring& coloring, Style style) {
    const auto edges = all_edges(coloring.m());
    std::vector<Color> colors;
    for (const auto& e : edges) colors.push_back(coloring.color(e));
    return layout(coloring.m(), coloring.t(), edges, colors, style);
}

Drawing layout(const Certificate& cert, int m, Style style) {
    const std::vector<Color> colors(cert.edges.size(), cert.color);
    return layout(m, std::max(2, cert.color + 1), cert.edges, colors, style);
}

std::string to_svg(const Drawing& d) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    auto grow = [&](const Point& p) {
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            first = false;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    };
    for (const auto& v : d.vertices) grow(v);
    for (const auto& e : d.edges)
        for (const auto& p : e.path) grow(p);

    const double width = 800;
    const double margin = 30;
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double scale = (width - 2 * margin) / std::max(span_x, span_y);
    const double height = span_y * scale + 2 * margin;
    auto sx = [&](double x) { return margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return margin + (max_y - y) * scale; };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<title>" << to_string(d.style) << " drawing, m=" << d.m << "</title>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& e : d.edges) {
        out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\""
            << kPalette[static_cast<std::size_t>(e.color) % kPalette.size()] << "\" data-edge=\"" << e.edge.lo
            << ',' << e.edge.hi << "\" data-color=\"" << e.color << "\" points=\"";
        for (std::size_t k = 0; k < e.path.size(); ++k)
            out << (k ? " " : "") << sx(e.path[k].x) << ',' << sy(e.path[k].y);
        out << "\"/>\n";
    }
    for (int i = 1; i <= d.m; ++i) {
        const Point& v = d.vertices[static_cast<std::size_t>(i - 1)];
        out << "<circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"4\" fill=\"black\"/>\n";
        out << "<text x=\"" << sx(v.x) + 6 << "\" y=\"" << sy(v.y) - 6
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

bool polylines_intersect(std::span<const Point> a, std::span<const Point> b) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            if (segments_intersect(a[i], a[i + 1], b[j], b[j + 1])) return true;
    return false;
}

}  // namespace ordram::draw
