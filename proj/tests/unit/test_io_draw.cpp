#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "ordram/draw.hpp"
#include "ordram/io.hpp"
#include "ordram/search.hpp"

using namespace ordram;

namespace {

void expect_format_error(const std::string& text) {
    try {
        io::coloring_from_json(io::parse_json(text));
        FAIL() << text;
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Format) << text;
    }
}

}  // namespace

TEST(ColoringJson, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto c = search::random_coloring(1 + static_cast<int>(seed % 9), 1 + static_cast<int>(seed % 4), seed);
        EXPECT_EQ(io::coloring_from_json(io::coloring_to_json(c)), c);
        const auto path = std::filesystem::temp_directory_path() / ("ordram_rt_" + std::to_string(seed) + ".json");
        io::write_coloring(path, c);
        EXPECT_EQ(io::read_coloring(path), c);
        std::filesystem::remove(path);
    }
}

TEST(ColoringJson, AnyEdgeOrder) {
    const auto c = io::coloring_from_json(io::parse_json(R"({"m":3,"t":2,"edges":[[2,3,1],[1,3,0],[1,2,1]]})"));
    EXPECT_EQ(c.color(1, 2), 1);
    EXPECT_EQ(c.color(1, 3), 0);
    EXPECT_EQ(c.color(2, 3), 1);
}

TEST(ColoringJson, Rejections) {
    expect_format_error(R"({"m":3,"t":2,"edges":[[1,2,0],[1,3,0]]})");
    expect_format_error(R"({"m":3,"t":2,"edges":[[1,2,0],[1,3,0],[2,3,0],[1,2,1]]})");
    expect_format_error(R"({"m":3,"t":2,"edges":[[1,2,0],[1,3,0],[2,3,2]]})");
    expect_format_error(R"({"m":3,"t":2,"edges":[[1,2,0],[1,3,0],[2,4,0]]})");
    expect_format_error(R"({"m":3,"t":2,"edges":[[1,2,0],[1,3,0],[3,2,0]]})");
    expect_format_error(R"({"m":3,"edges":[]})");
    expect_format_error(R"({"m":3,"t":2,"edges":[[1,2,0],[1,3,0],[2,3,"red"]]})");
    expect_format_error("{not json");
}

TEST(CertificateJson, RoundTrip) {
    const auto cert = make_certificate(CertificateKind::Matching, {{2, 5}, {1, 3}}, 1,
                                       RelationConstraint::forbid(PairRelation::Nested), "thm14");
    const auto doc = io::certificate_to_json(cert, 5);
    EXPECT_EQ(doc["kind"], "matching");
    EXPECT_EQ(doc["constraint"]["forbidden"][0], "nested");
    EXPECT_EQ(doc["m"], 5);
    EXPECT_EQ(io::certificate_from_json(doc), cert);
    const auto req = make_certificate(CertificateKind::Subtree, {{1, 3}, {3, 5}}, 0,
                                      RelationConstraint::require(PairRelation::Crossing), "oracle");
    EXPECT_EQ(io::certificate_from_json(io::certificate_to_json(req)), req);
    EXPECT_THROW(io::certificate_from_json(io::parse_json(
                     R"({"kind":"matching","color":0,"constraint":{"required":"nested","forbidden":[]},"edges":[]})")),
                 Error);
}

TEST(Draw, ConvexFaithful) {
    for (int m = 4; m <= 10; ++m) {
        const auto d = draw::layout(OrderedColoring(m, 1), draw::Style::Convex);
        for (std::size_t a = 0; a < d.edges.size(); ++a)
            for (std::size_t b = a + 1; b < d.edges.size(); ++b) {
                const auto& e = d.edges[a];
                const auto& f = d.edges[b];
                if (!independent(e.edge, f.edge)) continue;
                EXPECT_EQ(draw::polylines_intersect(e.path, f.path), relation_of(e.edge, f.edge) == PairRelation::Crossing);
            }
    }
}

TEST(Draw, TwistedFaithful) {
    for (int m = 4; m <= 10; ++m) {
        const auto d = draw::layout(OrderedColoring(m, 1), draw::Style::Twisted);
        for (std::size_t a = 0; a < d.edges.size(); ++a)
            for (std::size_t b = a + 1; b < d.edges.size(); ++b) {
                const auto& e = d.edges[a];
                const auto& f = d.edges[b];
                if (!independent(e.edge, f.edge)) continue;
                EXPECT_EQ(draw::polylines_intersect(e.path, f.path), relation_of(e.edge, f.edge) == PairRelation::Nested)
                    << to_string(e.edge) << to_string(f.edge);
            }
    }
}

TEST(Draw, Examples) {
    const std::vector<Edge> nested{{1, 4}, {2, 3}};
    const std::vector<Color> two{0, 1};
    const auto convex = draw::layout(4, 2, nested, two, draw::Style::Convex);
    EXPECT_FALSE(draw::polylines_intersect(convex.edges[0].path, convex.edges[1].path));
    const auto twisted = draw::layout(4, 2, nested, two, draw::Style::Twisted);
    EXPECT_TRUE(draw::polylines_intersect(twisted.edges[0].path, twisted.edges[1].path));
    const std::vector<Edge> crossing{{1, 3}, {2, 4}};
    const auto cc = draw::layout(4, 2, crossing, two, draw::Style::Convex);
    EXPECT_TRUE(draw::polylines_intersect(cc.edges[0].path, cc.edges[1].path));

    const auto empty = draw::to_svg(draw::layout(3, 2, {}, {}, draw::Style::Convex));
    EXPECT_NE(empty.find("<svg"), std::string::npos);
    EXPECT_NE(empty.find("</svg>"), std::string::npos);
    EXPECT_EQ(empty.find("polyline"), std::string::npos);
    const auto svg = draw::to_svg(twisted);
    EXPECT_NE(svg.find("data-edge=\"1,4\""), std::string::npos);
    EXPECT_THROW(draw::parse_style("cubist"), Error);
}
