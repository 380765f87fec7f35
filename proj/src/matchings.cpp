#include <algorithm>
#include <array>
#include <numeric>

#include "ordram/detail/clique.hpp"
#include "ordram/matchings.hpp"
#include "ordram/trees.hpp"

namespace ordram::matchings {

namespace {

void require_two_colors_on(const OrderedColoring& coloring, int m, int n) {
    require(n >= 1, "matching size must be at least 1");
    require(coloring.t() == 2, "needs a 2-coloring");
    require(coloring.m() == m, "needs m = " + std::to_string(m) + ", got " + std::to_string(coloring.m()));
}

struct Partial {
    std::vector<Edge> edges;
    Color color = kRed;
};

Partial noncrossing(const OrderedColoring& c, std::vector<Vertex> vs) {
    const auto len = vs.size();
    for (std::size_t i = 0; i + 2 < len; ++i) {
        const Color left = c.color(vs[i], vs[i + 1]);
        const Color right = c.color(vs[i + 1], vs[i + 2]);
        if (left == right) continue;
        const std::array<Vertex, 3> q{vs[i], vs[i + 1], vs[i + 2]};
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i), vs.begin() + static_cast<std::ptrdiff_t>(i + 3));
        Partial p = noncrossing(c, std::move(vs));
        p.edges.push_back(left == p.color ? Edge{q[0], q[1]} : Edge{q[1], q[2]});
        return p;
    }
    Partial p{{}, c.color(vs[0], vs[1])};
    for (std::size_t i = 0; i + 1 < len; i += 2) p.edges.push_back({vs[i], vs[i + 1]});
    p.edges.resize((len + 1) / 3);
    return p;
}

Partial nonseparated(const OrderedColoring& c, std::vector<Vertex> vs) {
    const auto k = (vs.size() + 1) / 3;
    const std::vector<Vertex> a(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(k));
    const std::vector<Vertex> b(vs.end() - static_cast<std::ptrdiff_t>(k), vs.end());

    // A vertex of [A,B] with edges of both colors is the middle of a bicolored P_3.
    std::vector<Vertex> side;
    for (Vertex x : vs) {
        const bool in_a = std::binary_search(a.begin(), a.end(), x);
        const bool in_b = std::binary_search(b.begin(), b.end(), x);
        if (!in_a && !in_b) continue;
        const auto& other = in_a ? b : a;
        const Color first = c.color(x, other.front());
        auto diff = std::find_if(other.begin(), other.end(), [&](Vertex y) { return c.color(x, y) != first; });
        if (diff == other.end()) continue;
        const Vertex y1 = other.front();
        const Vertex y2 = *diff;
        std::erase_if(vs, [&](Vertex v) { return v == x || v == y1 || v == y2; });
        Partial p = nonseparated(c, std::move(vs));
        p.edges.push_back(make_edge(x, p.color == first ? y1 : y2));
        return p;
    }
    Partial p{{}, c.color(a.front(), b.front())};
    for (std::size_t i = 0; i < k; ++i) p.edges.push_back({a[i], b[i]});
    return p;
}

Certificate checked(const OrderedColoring& coloring, Certificate cert, std::size_t n) {
    const auto report = validate_certificate(coloring, cert);
    if (!report || cert.size() != n)
        fail(ErrorKind::AlgorithmStuck, cert.source + " produced an invalid matching: " +
                                            (report ? "size " + std::to_string(cert.size()) : report.message));
    return cert;
}

// Majority color over the given edges; ties go to the smaller color.
Color majority(const OrderedColoring& coloring, std::span<const Edge> edges) {
    std::vector<std::size_t> count(static_cast<std::size_t>(coloring.t()), 0);
    for (const auto& e : edges) ++count[coloring.color(e)];
    return static_cast<Color>(std::max_element(count.begin(), count.end()) - count.begin());
}

Certificate take_majority(const OrderedColoring& coloring, const std::vector<Edge>& chain, int n,
                          PairRelation rel, const char* source) {
    const Color c = majority(coloring, chain);
    std::vector<Edge> picked;
    for (const auto& e : chain)
        if (coloring.color(e) == c && static_cast<int>(picked.size()) < n) picked.push_back(e);
    return checked(coloring,
                   make_certificate(CertificateKind::Matching, std::move(picked), c,
                                    RelationConstraint::require(rel), source),
                   static_cast<std::size_t>(n));
}

int threshold_half(int t, int n) { return t * (n - 1) + 1; }

}  // namespace

int cockayne_lorimer_bound(std::span<const int> sizes) {
    require(!sizes.empty(), "sizes must be nonempty");
    require(std::is_sorted(sizes.begin(), sizes.end()), "sizes must be ascending");
    require(sizes.front() >= 1, "sizes must be positive");
    int sum = 0;
    for (int s : sizes) sum += s - 1;
    return sum + sizes.back() + 1;
}

Certificate find_matching_noncrossing(const OrderedColoring& coloring, int n) {
    require_two_colors_on(coloring, 3 * n - 1, n);
    std::vector<Vertex> vs(static_cast<std::size_t>(coloring.m()));
    std::iota(vs.begin(), vs.end(), 1);
    Partial p = noncrossing(coloring, std::move(vs));
    return checked(coloring,
                   make_certificate(CertificateKind::Matching, std::move(p.edges), p.color,
                                    RelationConstraint::forbid(PairRelation::Crossing), "thm14"),
                   static_cast<std::size_t>(n));
}

Certificate find_matching_nonseparated(const OrderedColoring& coloring, int n) {
    require_two_colors_on(coloring, 3 * n - 1, n);
    std::vector<Vertex> vs(static_cast<std::size_t>(coloring.m()));
    std::iota(vs.begin(), vs.end(), 1);
    Partial p = nonseparated(coloring, std::move(vs));
    return checked(coloring,
                   make_certificate(CertificateKind::Matching, std::move(p.edges), p.color,
                                    RelationConstraint::forbid(PairRelation::Separated), "thm16"),
                   static_cast<std::size_t>(n));
}

Certificate extract_nested_matching(const OrderedColoring& coloring, int n) {
    require(n >= 1, "matching size must be at least 1");
    const int k = threshold_half(coloring.t(), n);
    require(coloring.m() == 2 * k, "needs m = 2(t(n-1)+1) = " + std::to_string(2 * k));
    std::vector<Edge> chain;
    for (int i = 1; i <= k; ++i) chain.push_back({i, coloring.m() + 1 - i});
    return take_majority(coloring, chain, n, PairRelation::Nested, "thm17");
}

Certificate extract_separated_matching(const OrderedColoring& coloring, int n) {
    require(n >= 1, "matching size must be at least 1");
    const int k = threshold_half(coloring.t(), n);
    require(coloring.m() == 2 * k, "needs m = 2(t(n-1)+1) = " + std::to_string(2 * k));
    std::vector<Edge> chain;
    for (int i = 1; i <= k; ++i) chain.push_back({2 * i - 1, 2 * i});
    return take_majority(coloring, chain, n, PairRelation::Separated, "thm19");
}

Certificate extract_crossing_matching(const OrderedColoring& coloring, int n) {
    require(n >= 2, "needs n >= 2");
    const int m = coloring.m();
    const int step = coloring.t() * (n - 1);
    require(m == 2 * step + 1, "needs m = 2t(n-1)+1 = " + std::to_string(2 * step + 1));

    // Longest diagonals v_k -> v_{k+1}, v_k = 1 + k*step mod m, form a Hamiltonian cycle.
    std::vector<Edge> cycle;
    for (int k = 0; k < m; ++k)
        cycle.push_back(make_edge(1 + (k * step) % m, 1 + ((k + 1) * step) % m));
    const Color c = majority(coloring, cycle);
    auto is_major = [&](int k) { return coloring.color(cycle[static_cast<std::size_t>(k % m)]) == c; };

    int start = 0;
    for (int k = 0; k < m; ++k)
        if (is_major(k) && !is_major(k + m - 1)) {
            start = k;
            break;
        }
    std::vector<Edge> picked;
    int prev = -2;
    for (int k = start; k < start + m - 1 && static_cast<int>(picked.size()) < n; ++k)
        if (is_major(k) && k != prev + 1) {
            picked.push_back(cycle[static_cast<std::size_t>(k % m)]);
            prev = k;
        }
    return checked(coloring,
                   make_certificate(CertificateKind::Matching, std::move(picked), c,
                                    RelationConstraint::require(PairRelation::Crossing), "thm18"),
                   static_cast<std::size_t>(n));
}

OrderedColoring construct_nested_lb(int t, int n) {
    require(t >= 2, "needs t >= 2");
    require(n >= 1, "needs n >= 1");
    OrderedColoring g(1, t);
    for (int step = 1; step < n; ++step) {
        const int inner = g.m();
        const int size = inner + 2 * t;
        OrderedColoring next(size, t);
        auto a = [&](int p) { return p; };
        auto b = [&](int q) { return size + 1 - q; };
        auto x = [&](int v) { return t + v; };
        for (int p = 1; p <= t; ++p)
            for (int q = 1; q <= t; ++q) {
                const Color low = std::min(p, q) - 1;
                if (p < q) {
                    next.set(a(p), a(q), low);
                    next.set(b(q), b(p), low);
                }
                next.set(a(p), b(q), low);
            }
        for (int v = 1; v <= inner; ++v)
            for (int p = 1; p <= t; ++p) {
                next.set(a(p), x(v), p - 1);
                next.set(x(v), b(p), p - 1);
            }
        for (const auto& e : all_edges(inner)) next.set(x(e.lo), x(e.hi), g.color(e));
        g = std::move(next);
    }
    return g;
}

std::vector<std::vector<Edge>> double_star_decomposition(int t) {
    require(t >= 1, "needs t >= 1");
    const int m = 2 * t;
    auto wrap = [&](int v) { return (v - 1) % m + 1; };
    std::vector<std::vector<Edge>> trees;
    for (int i = 1; i <= t; ++i) {
        std::vector<Edge> tree;
        for (int d = 1; d <= t; ++d) tree.push_back(make_edge(i, i + d));
        for (int d = 1; d <= t - 1; ++d) tree.push_back(make_edge(t + i, wrap(t + i + d)));
        sort_edges(tree);
        trees.push_back(std::move(tree));
    }
    return trees;
}

OrderedColoring construct_crossing_lb(int t, int n) {
    require(t >= 2, "needs t >= 2");
    require(n >= 2, "needs n >= 2");
    const int block = n - 1;
    OrderedColoring base(2 * t, t);
    const auto trees = double_star_decomposition(t);
    for (int i = 0; i < t; ++i)
        for (const auto& e : trees[static_cast<std::size_t>(i)]) base.set(e, i);

    OrderedColoring g(2 * t * block, t, 0);
    for (const auto& e : all_edges(g.m())) {
        const int p = (e.lo - 1) / block + 1;
        const int q = (e.hi - 1) / block + 1;
        if (p != q) g.set(e, base.color(p, q));
    }
    return g;
}

OrderedColoring construct_separated_lb(int t, int n) {
    require(t >= 2, "needs t >= 2");
    require(n >= 2, "needs n >= 2");
    const int block = 2 * n - 2;
    OrderedColoring g(2 * t * (n - 1) + 1, t);
    for (const auto& e : all_edges(g.m())) g.set(e, std::min((e.lo - 1) / block, t - 1));
    return g;
}

OrderedColoring construct_prop15(int t) {
    require(t >= 3, "needs t >= 3");
    OrderedColoring g(t + 3, t, 2);
    for (const Edge& e : {Edge{1, 2}, Edge{1, 3}, Edge{2, 3}, Edge{2, 4}, Edge{2, 5}}) g.set(e, 0);
    for (const Edge& e : {Edge{1, 4}, Edge{3, 4}, Edge{3, 5}, Edge{4, 5}}) g.set(e, 1);
    for (int s = 4; s <= t; ++s)
        for (Vertex v = 1; v < s + 3; ++v) g.set(v, s + 3, s - 1);
    return g;
}

OrderedColoring construct_rstar2_lb(int n) {
    require(n >= 2, "needs n >= 2");
    OrderedColoring g(2 * n, 2, kBlue);
    for (Vertex v = 2; v <= 2 * n; ++v) g.set(1, v, kRed);
    return g;
}

OrderedColoring construct_rstar3_lb(int n) {
    require(n >= 3, "needs n >= 3");
    OrderedColoring g(2 * n + 1, 2, kBlue);
    for (Vertex v = 2; v <= 2 * n + 1; ++v) g.set(1, v, kRed);
    for (Vertex v = 3; v <= 2 * n + 1; ++v) g.set(2, v, kRed);
    return g;
}

std::span<const std::string_view> construction_names() {
    static constexpr std::array<std::string_view, 11> names{
        "prop6i",    "prop6ii",   "thm8-sep",    "thm8-nested",  "thm8-crossing", "rstar2-lb",
        "rstar3-lb", "nested-lb", "crossing-lb", "separated-lb", "prop15"};
    return names;
}

OrderedColoring construct_named(std::string_view name, int t, int n) {
    using trees::Prop6Variant;
    using trees::Thm8Variant;
    if (name == "prop6i") return trees::construct_prop6(Prop6Variant::NonCrossing, n);
    if (name == "prop6ii") return trees::construct_prop6(Prop6Variant::NonNested, n);
    if (name == "thm8-sep") return trees::construct_thm8(Thm8Variant::Separated, n);
    if (name == "thm8-nested") return trees::construct_thm8(Thm8Variant::Nested, n);
    if (name == "thm8-crossing") return trees::construct_thm8(Thm8Variant::Crossing, n);
    if (name == "rstar2-lb") return construct_rstar2_lb(n);
    if (name == "rstar3-lb") return construct_rstar3_lb(n);
    if (name == "nested-lb") return construct_nested_lb(t, n);
    if (name == "crossing-lb") return construct_crossing_lb(t, n);
    if (name == "separated-lb") return construct_separated_lb(t, n);
    if (name == "prop15") return construct_prop15(t);
    fail(ErrorKind::InvalidArgument, "unknown generator '" + std::string(name) + "'");
}

OracleResult max_constrained_matching(const OrderedColoring& coloring,
                                      const RelationConstraint& constraint, Color color, int limit) {
    if (coloring.m() > limit)
        fail(ErrorKind::OracleLimitExceeded, "matching oracle supports m <= " + std::to_string(limit) +
                                                 ", got " + std::to_string(coloring.m()));
    require(color >= 0 && color < coloring.t(), "color out of range");
    const auto edges = coloring.color_class(color);
    detail::BitGraph g(static_cast<int>(edges.size()));
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (independent(edges[a], edges[b]) && constraint.allows(relation_of(edges[a], edges[b])))
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    std::vector<Edge> witness;
    for (int v : detail::max_clique(g)) witness.push_back(edges[static_cast<std::size_t>(v)]);
    const auto size = witness.size();
    return {size, make_certificate(CertificateKind::Matching, std::move(witness), color, constraint,
                                   "oracle-matching")};
}

}  // namespace ordram::matchings
