#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ordram/matchings.hpp"

using namespace ordram;
using namespace ordram::matchings;

namespace {

const auto kNonNested = RelationConstraint::forbid(PairRelation::Nested);

void expect_matching(const OrderedColoring& c, const Certificate& cert, std::size_t n) {
    ASSERT_EQ(cert.kind, CertificateKind::Matching);
    ASSERT_EQ(cert.size(), n);
    ASSERT_EQ(oracle::check(c, cert), "") << cert.source;
}

OrderedColoring random_two(int m, std::mt19937_64& rng) {
    OrderedColoring c(m, 2);
    for (const auto& e : all_edges(m)) c.set(e, static_cast<int>(rng() & 1));
    return c;
}

// Every choice of k elements of [m], ascending.
std::vector<std::vector<Vertex>> subsets(int m, int k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    std::function<void(int)> go = [&](int v) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = v; x <= m; ++x) {
            cur.push_back(x);
            go(x + 1);
            cur.pop_back();
        }
    };
    go(1);
    return out;
}

std::vector<Vertex> complement(int m, const std::vector<Vertex>& p) {
    std::vector<Vertex> q;
    for (int v = 1; v <= m; ++v)
        if (!std::binary_search(p.begin(), p.end(), v)) q.push_back(v);
    return q;
}

}  // namespace

TEST(CockayneLorimer, Values) {
    EXPECT_EQ(cockayne_lorimer_bound(std::vector<int>{2, 2}), 5);
    EXPECT_EQ(cockayne_lorimer_bound(std::vector<int>{3, 3}), 8);
    EXPECT_EQ(cockayne_lorimer_bound(std::vector<int>{1, 1, 1, 1}), 2);
    EXPECT_EQ(cockayne_lorimer_bound(std::vector<int>{2, 3}), 7);
    EXPECT_THROW(cockayne_lorimer_bound(std::vector<int>{3, 2}), Error);
}

TEST(NonCrossingMatching, Examples) {
    EXPECT_EQ(find_matching_noncrossing(OrderedColoring(2, 2, kBlue), 1).size(), 1u);
    const auto cert = find_matching_noncrossing(OrderedColoring(5, 2, kRed), 2);
    EXPECT_EQ(cert.edges, (std::vector<Edge>{{1, 2}, {3, 4}}));
    EXPECT_EQ(cert.color, kRed);
    EXPECT_THROW(find_matching_noncrossing(OrderedColoring(6, 2), 2), Error);
}

TEST(NonSeparatedMatching, Examples) {
    OrderedColoring c(5, 2, kBlue);
    for (Vertex a : {1, 2})
        for (Vertex b : {4, 5}) c.set(a, b, kRed);
    const auto cert = find_matching_nonseparated(c, 2);
    EXPECT_EQ(cert.edges, (std::vector<Edge>{{1, 4}, {2, 5}}));
    EXPECT_EQ(cert.color, kRed);
    EXPECT_EQ(find_matching_nonseparated(OrderedColoring(2, 2), 1).size(), 1u);
}

TEST(NonCrossingAndNonSeparated, Exhaustive) {
    for (int n = 1; n <= 2; ++n) {
        const int m = 3 * n - 1;
        for (std::uint64_t code = 0; code < oracle::power(2, m * (m - 1) / 2); ++code) {
            const auto c = oracle::coloring_from_code(m, 2, code);
            expect_matching(c, find_matching_noncrossing(c, n), static_cast<std::size_t>(n));
            expect_matching(c, find_matching_nonseparated(c, n), static_cast<std::size_t>(n));
        }
    }
}

TEST(NonCrossingAndNonSeparated, Random) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const auto c = random_two(3 * n - 1, rng);
        expect_matching(c, find_matching_noncrossing(c, n), static_cast<std::size_t>(n));
        expect_matching(c, find_matching_nonseparated(c, n), static_cast<std::size_t>(n));
        const auto r = reverse(c);
        EXPECT_TRUE(validate_certificate(c, reverse(find_matching_nonseparated(r, n), r.m())));
    }
}

TEST(HGraph, Definition) {
    const auto h = HGraph::from_positions(2, {1, 3, 5});
    EXPECT_EQ(h.q(), (std::vector<Vertex>{2, 4}));
    EXPECT_EQ(h.pi(1, 2), 0);
    EXPECT_TRUE(h.has_edge(Edge{1, 2}));
    const auto h2 = HGraph::from_positions(2, {1, 2, 3});
    EXPECT_TRUE(h2.has_edge(Edge{3, 4}));
    EXPECT_EQ(h2.pi(1, 4), 2);
    EXPECT_FALSE(h2.has_edge(Edge{1, 4}));
    EXPECT_FALSE(h2.has_edge(Edge{1, 2}));
}

TEST(HGraph, PiMatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int m = 3 * n - 1;
        std::vector<Vertex> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Vertex> p(all.begin(), all.begin() + (2 * n - 1));
        std::sort(p.begin(), p.end());
        const auto h = HGraph::from_positions(n, p);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < h.q().size(); ++j) {
                const Vertex a = p[i], b = h.q()[j];
                int between = 0;
                for (Vertex x : p) between += std::min(a, b) < x && x < std::max(a, b);
                EXPECT_EQ(h.pi(a, b), between);
                const bool edge = (between > 0 && between <= n - 1) || (between == 0 && (i + 1) % 2 == 1);
                EXPECT_EQ(h.has_edge(make_edge(a, b)), edge);
            }
    }
}

TEST(HGraph, RejectsNonRedClique) {
    OrderedColoring c(5, 2, kRed);
    c.set(1, 3, kBlue);
    try {
        build_h_graph(c, {1, 3, 5});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotARedClique);
    }
}

TEST(ExpandRedHEdge, Examples) {
    OrderedColoring c(5, 2, kBlue);
    for (const Edge& e : {Edge{1, 3}, Edge{1, 5}, Edge{3, 5}, Edge{1, 2}}) c.set(e, kRed);
    const auto cert = expand_red_h_edge(c, {1, 3, 5}, {1, 2});
    EXPECT_EQ(cert.edges, (std::vector<Edge>{{1, 2}, {3, 5}}));
    expect_matching(c, cert, 2);

    // (3,4) has no clique vertex between its ends and 3 is the second clique vertex.
    OrderedColoring d(5, 2, kBlue);
    for (const Edge& e : {Edge{2, 3}, Edge{2, 5}, Edge{3, 5}, Edge{3, 4}}) d.set(e, kRed);
    try {
        expand_red_h_edge(d, {2, 3, 5}, {3, 4});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAnHEdge);
    }
    // (4,5) is an H-edge of the same clique.
    d.set(4, 5, kRed);
    expect_matching(d, expand_red_h_edge(d, {2, 3, 5}, {4, 5}), 2);

    OrderedColoring blue_edge = c;
    blue_edge.set(1, 2, kBlue);
    try {
        expand_red_h_edge(blue_edge, {1, 3, 5}, {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EdgeNotRed);
    }
}

TEST(HMatching, Example) {
    const auto h = HGraph::from_positions(2, {1, 3, 5});
    OrderedColoring c(5, 2, kBlue);
    for (const Edge& e : {Edge{1, 3}, Edge{1, 5}, Edge{3, 5}}) c.set(e, kRed);
    const auto r = nonnested_h_matching(h);
    expect_matching(c, r.certificate, 2);
    EXPECT_EQ(r.certificate.color, kBlue);
    EXPECT_EQ(r.trace.j.size(), 2u);
}

TEST(NonNestedAroundClique, ExhaustiveRedCliqueN2) {
    const int m = 5;
    for (const auto& p : subsets(m, 3)) {
        const auto q = complement(m, p);
        std::vector<Edge> free;
        for (const auto& e : all_edges(m))
            if (!(std::binary_search(p.begin(), p.end(), e.lo) && std::binary_search(p.begin(), p.end(), e.hi)))
                free.push_back(e);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
            OrderedColoring c(m, 2, kRed);
            for (std::size_t k = 0; k < free.size(); ++k)
                if (mask >> k & 1) c.set(free[k], kBlue);
            expect_matching(c, find_nonnested_given_red_clique(c, p), 2);
        }
    }
}

TEST(NonNestedAroundClique, HMatchingRandomPlacements) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 50);
        const int m = 3 * n - 1;
        std::vector<Vertex> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Vertex> p(all.begin(), all.begin() + (2 * n - 1));
        std::sort(p.begin(), p.end());
        const auto h = HGraph::from_positions(n, p);
        const auto r = nonnested_h_matching(h);
        ASSERT_EQ(r.certificate.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 1; i < r.trace.j.size(); ++i) ASSERT_LT(r.trace.j[i - 1], r.trace.j[i]);
        for (const auto& e : r.certificate.edges) ASSERT_TRUE(h.has_edge(e));
        ASSERT_EQ(relation_profile(r.certificate.edges).nested, 0u);
    }
}

TEST(NonNestedAroundClique, RandomRedCliqueColorings) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 20);
        const int m = 3 * n - 1;
        std::vector<Vertex> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Vertex> p(all.begin(), all.begin() + (2 * n - 1));
        std::sort(p.begin(), p.end());
        auto c = random_two(m, rng);
        // Sparse red outside the clique makes both branches common.
        for (const auto& e : all_edges(m)) c.set(e, rng() % 8 == 0 ? kRed : kBlue);
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) c.set(p[a], p[b], kRed);
        expect_matching(c, find_nonnested_given_red_clique(c, p), static_cast<std::size_t>(n));
    }
}

TEST(NonNestedAroundClique, ExtremalLayout) {
    for (int n = 1; n <= 20; ++n) {
        const int m = 3 * n - 1;
        OrderedColoring c(m, 2, kBlue);
        std::vector<Vertex> p;
        for (int v = 1; v <= 2 * n - 1; ++v) p.push_back(v);
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) c.set(p[a], p[b], kRed);
        expect_matching(c, find_nonnested_given_red_clique(c, p), static_cast<std::size_t>(n));
    }
}

TEST(BlackWhite, Examples) {
    EXPECT_EQ(black_white_nonnested_matching({1, 4}, {2, 3}, 2), (std::vector<Edge>{{1, 2}, {3, 4}}));
    EXPECT_EQ(black_white_nonnested_matching({1, 2}, {3, 4}, 2), (std::vector<Edge>{{1, 3}, {2, 4}}));
    try {
        black_white_nonnested_matching({1}, {2, 3}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientVertices);
    }
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 100);
        std::vector<Vertex> all(static_cast<std::size_t>(3 * n));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<Vertex> blacks(all.begin(), all.begin() + n);
        const std::vector<Vertex> whites(all.begin() + n, all.begin() + 2 * n + static_cast<int>(rng() % n));
        EXPECT_EQ(relation_profile(black_white_nonnested_matching(blacks, whites, n)).nested, 0u);
    }
}

TEST(NonNestedAroundClique, BlueBicliqueExamples) {
    OrderedColoring c(5, 2, kBlue);
    for (const Edge& e : {Edge{1, 2}, Edge{1, 4}, Edge{1, 5}, Edge{2, 4}, Edge{2, 5}, Edge{4, 5}}) c.set(e, kRed);
    const auto red = find_nonnested_given_blue_biclique(c, {1, 2, 4, 5}, {3});
    EXPECT_EQ(red.edges, (std::vector<Edge>{{1, 4}, {2, 5}}));
    EXPECT_EQ(red.color, kRed);
    c.set(1, 4, kBlue);
    const auto blue = find_nonnested_given_blue_biclique(c, {1, 2, 4, 5}, {3});
    EXPECT_EQ(blue.color, kBlue);
    expect_matching(c, blue, 2);
}

TEST(NonNestedAroundClique, BlueBicliqueExhaustiveN2) {
    const int m = 5;
    for (const auto& p : subsets(m, 4)) {
        const auto q = complement(m, p);
        std::vector<Edge> inner;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) inner.push_back({p[a], p[b]});
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
            OrderedColoring c(m, 2, kBlue);
            for (std::size_t k = 0; k < inner.size(); ++k)
                if (mask >> k & 1) c.set(inner[k], kRed);
            expect_matching(c, find_nonnested_given_blue_biclique(c, p, q), 2);
        }
    }
}

TEST(NonNestedAroundClique, BlueBicliqueRandom) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 49);
        const int m = 3 * n - 1;
        std::vector<Vertex> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<Vertex> p(all.begin(), all.begin() + 2 * n);
        std::sort(p.begin(), p.end());
        const auto q = complement(m, p);
        OrderedColoring c(m, 2, kBlue);
        const int density = 1 + static_cast<int>(rng() % 4);
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                c.set(p[a], p[b], static_cast<int>(rng() % 16) < 16 - density ? kRed : kBlue);
        expect_matching(c, find_nonnested_given_blue_biclique(c, p, q), static_cast<std::size_t>(n));
    }
}

TEST(RStar2, Examples) {
    const OrderedColoring red(5, 2, kRed);
    const auto cert = solve_r_star_2(red, 2);
    EXPECT_EQ(cert.color, kRed);
    EXPECT_EQ(relation_profile(cert.edges).crossing, 1u);
    for (std::uint64_t code = 0; code < oracle::power(2, 10); ++code) {
        const auto c = oracle::coloring_from_code(5, 2, code);
        expect_matching(c, solve_r_star_2(c, 2), 2);
    }
}

TEST(RStar2, Random) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 20);
        OrderedColoring c(2 * n + 1, 2);
        for (const auto& e : all_edges(c.m())) c.set(e, rng() % 6 == 0 ? kRed : kBlue);
        const auto cert = solve_r_star_2(c, n);
        expect_matching(c, cert, cert.color == kRed ? 2u : static_cast<std::size_t>(n));
        EXPECT_EQ(cert.constraint, kNonNested);
    }
}

TEST(RStar3, DenseSampleN3) {
    for (std::uint64_t code = 0; code < oracle::power(2, 28); code += code < 200000 ? 1 : 4099) {
        const auto c = oracle::coloring_from_code(8, 2, code);
        expect_matching(c, solve_r_star_3(c, 3), 3);
    }
    expect_matching(OrderedColoring(8, 2, kRed), solve_r_star_3(OrderedColoring(8, 2, kRed), 3), 3);
}

TEST(RStar3, Random) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 5000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 15);
        OrderedColoring c(2 * n + 2, 2);
        const int bias = static_cast<int>(rng() % 10);
        for (const auto& e : all_edges(c.m())) c.set(e, static_cast<int>(rng() % 10) < bias ? kRed : kBlue);
        const auto cert = solve_r_star_3(c, n);
        expect_matching(c, cert, cert.color == kRed ? 3u : static_cast<std::size_t>(n));
    }
}

TEST(RStarLowerBounds, NoTargets) {
    for (int n = 2; n <= 6; ++n) {
        const auto c = construct_rstar2_lb(n);
        EXPECT_LT(max_constrained_matching(c, RelationConstraint::none(), kRed).size, 2u);
        EXPECT_LT(max_constrained_matching(c, kNonNested, kBlue).size, static_cast<std::size_t>(n));
    }
    for (int n = 3; n <= 6; ++n) {
        const auto c = construct_rstar3_lb(n);
        EXPECT_LT(max_constrained_matching(c, RelationConstraint::none(), kRed).size, 3u);
        EXPECT_LT(max_constrained_matching(c, kNonNested, kBlue).size, static_cast<std::size_t>(n));
    }
}

TEST(Extractors, Examples) {
    OrderedColoring c(6, 2, kBlue);
    c.set(1, 6, kRed);
    c.set(2, 5, kRed);
    const auto nested = extract_nested_matching(c, 2);
    EXPECT_EQ(nested.edges, (std::vector<Edge>{{1, 6}, {2, 5}}));
    EXPECT_EQ(nested.color, kRed);

    OrderedColoring s(6, 2, kBlue);
    s.set(1, 2, kRed);
    s.set(3, 4, kRed);
    EXPECT_EQ(extract_separated_matching(s, 2).edges, (std::vector<Edge>{{1, 2}, {3, 4}}));

    const auto cr = extract_crossing_matching(OrderedColoring(5, 2, kRed), 2);
    EXPECT_EQ(relation_profile(cr.edges).crossing, 1u);
    EXPECT_THROW(extract_crossing_matching(OrderedColoring(6, 2), 2), Error);
}

TEST(Extractors, Random) {
    std::mt19937_64 rng(47);
    for (auto [t, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 3}}) {
        for (int trial = 0; trial < 500; ++trial) {
            const int k = t * (n - 1) + 1;
            OrderedColoring a(2 * k, t), b(2 * k - 1, t);
            for (const auto& e : all_edges(a.m())) a.set(e, static_cast<int>(rng() % t));
            for (const auto& e : all_edges(b.m())) b.set(e, static_cast<int>(rng() % t));
            expect_matching(a, extract_nested_matching(a, n), static_cast<std::size_t>(n));
            expect_matching(a, extract_separated_matching(a, n), static_cast<std::size_t>(n));
            expect_matching(b, extract_crossing_matching(b, n), static_cast<std::size_t>(n));
        }
    }
}

TEST(DoubleStars, Decomposition) {
    const auto t3 = double_star_decomposition(3);
    EXPECT_EQ(t3[0], (std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {4, 5}, {4, 6}}));
    for (int t = 1; t <= 10; ++t) {
        const auto trees = double_star_decomposition(t);
        std::set<Edge> seen;
        for (const auto& tree : trees) {
            EXPECT_EQ(tree.size(), static_cast<std::size_t>(2 * t - 1));
            EXPECT_EQ(relation_profile(tree).crossing, 0u);
            for (const auto& e : tree) EXPECT_TRUE(seen.insert(e).second);
            Certificate cert = make_certificate(CertificateKind::SpanningTree, tree, 0, RelationConstraint::none(), "");
            EXPECT_TRUE(validate_certificate(OrderedColoring(2 * t, 1), cert));
        }
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(t * (2 * t - 1)));
    }
}

TEST(LowerBounds, NoMonochromaticTarget) {
    for (auto [t, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto nested = construct_nested_lb(t, n);
        const auto crossing = construct_crossing_lb(t, n);
        const auto separated = construct_separated_lb(t, n);
        EXPECT_EQ(nested.m(), 2 * t * (n - 1) + 1);
        EXPECT_EQ(crossing.m(), 2 * t * (n - 1));
        EXPECT_EQ(separated.m(), 2 * t * (n - 1) + 1);
        for (Color c = 0; c < t; ++c) {
            EXPECT_LT(max_constrained_matching(nested, RelationConstraint::require(PairRelation::Nested), c).size,
                      static_cast<std::size_t>(n));
            EXPECT_LT(max_constrained_matching(crossing, RelationConstraint::require(PairRelation::Crossing), c).size,
                      static_cast<std::size_t>(n));
            EXPECT_LT(max_constrained_matching(separated, RelationConstraint::require(PairRelation::Separated), c).size,
                      static_cast<std::size_t>(n));
        }
    }
    EXPECT_EQ(construct_nested_lb(2, 1).m(), 1);
    EXPECT_EQ(construct_separated_lb(2, 2).color(1, 2), 0);
    EXPECT_EQ(construct_separated_lb(2, 2).color(3, 5), 1);
}

TEST(LowerBounds, CrossingBlowUpOfDoubleStars) {
    const auto c = construct_crossing_lb(3, 2);
    const auto trees = double_star_decomposition(3);
    for (int i = 0; i < 3; ++i)
        for (const auto& e : trees[static_cast<std::size_t>(i)]) EXPECT_EQ(c.color(e), i);
}

TEST(CrossingOnlyColoring, Classes) {
    const auto c = construct_prop15(3);
    EXPECT_EQ(c.color_class(0), (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}}));
    EXPECT_EQ(c.color_class(1), (std::vector<Edge>{{1, 4}, {3, 4}, {3, 5}, {4, 5}}));
    for (int t = 3; t <= 10; ++t) {
        const auto g = construct_prop15(t);
        EXPECT_EQ(g.m(), t + 3);
        for (Color col = 0; col < t; ++col) {
            const auto prof = relation_profile(g.color_class(col));
            EXPECT_EQ(prof.nested, 0u);
            EXPECT_EQ(prof.separated, 0u);
        }
    }
}

TEST(Named, AllGenerators) {
    for (auto name : construction_names()) {
        const auto c = construct_named(name, 3, 4);
        EXPECT_GE(c.m(), 1) << name;
    }
    EXPECT_THROW(construct_named("nope", 2, 2), Error);
}

TEST(MatchingOracle, Examples) {
    const OrderedColoring red(6, 2, kRed);
    EXPECT_EQ(max_constrained_matching(red, RelationConstraint::require(PairRelation::Nested), kRed).size, 3u);
    EXPECT_EQ(max_constrained_matching(red, RelationConstraint::require(PairRelation::Separated), kRed).size, 3u);
    EXPECT_THROW(max_constrained_matching(OrderedColoring(25, 2), RelationConstraint::none(), 0), Error);
}

TEST(MatchingOracle, AgreesWithEnumeration) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 7);
        const int t = 2 + static_cast<int>(rng() % 2);
        const auto c = oracle::coloring_from_code(m, t, rng());
        for (const char* fam : {"any", "non-crossing", "non-nested", "non-separated", "crossing", "nested", "separated"}) {
            const auto con = parse_constraint(fam);
            const auto r = max_constrained_matching(c, con, 0);
            EXPECT_EQ(static_cast<int>(r.size), oracle::max_matching(c, con, 0)) << fam;
            EXPECT_EQ(oracle::check(c, r.witness), "");
        }
    }
}
