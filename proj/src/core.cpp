#include "ordram/core.hpp"

#include <algorithm>
#include <numeric>

namespace ordram {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SharedVertex: return "SharedVertex";
        case ErrorKind::IdenticalEdge: return "IdenticalEdge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Format: return "Format";
        case ErrorKind::OracleLimitExceeded: return "OracleLimitExceeded";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::NotARedClique: return "NotARedClique";
        case ErrorKind::NotAnHEdge: return "NotAnHEdge";
        case ErrorKind::EdgeNotRed: return "EdgeNotRed";
        case ErrorKind::InsufficientVertices: return "InsufficientVertices";
        case ErrorKind::AlgorithmStuck: return "AlgorithmStuck";
        case ErrorKind::NoneFound: return "NoneFound";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) fail(ErrorKind::InvalidArgument, "loop edge at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string_view to_string(PairRelation rel) {
    switch (rel) {
        case PairRelation::Crossing: return "crossing";
        case PairRelation::Nested: return "nested";
        case PairRelation::Separated: return "separated";
    }
    return "?";
}

PairRelation parse_relation(std::string_view name) {
    for (auto r : kAllRelations)
        if (name == to_string(r)) return r;
    fail(ErrorKind::InvalidArgument, "unknown relation '" + std::string(name) + "'");
}

PairRelation classify_pair(const Edge& e, const Edge& f) {
    if (e == f) fail(ErrorKind::IdenticalEdge, "identical edges " + to_string(e));
    if (e.shares_vertex(f))
        fail(ErrorKind::SharedVertex, "edges " + to_string(e) + " and " + to_string(f) +
                                          " share a vertex");
    return relation_of(e, f);
}

RelationConstraint RelationConstraint::forbid(RelationSet rels) {
    RelationConstraint c;
    c.forbidden_ = rels;
    return c;
}

RelationConstraint RelationConstraint::require(PairRelation rel) {
    RelationConstraint c;
    c.required_ = rel;
    return c;
}

std::string RelationConstraint::describe() const {
    if (required_) return std::string(to_string(*required_));
    if (forbidden_.empty()) return "any";
    std::string out;
    for (auto r : kAllRelations) {
        if (!forbidden_.contains(r)) continue;
        if (!out.empty()) out += "+";
        out += "non-";
        out += to_string(r);
    }
    return out;
}

RelationConstraint parse_constraint(std::string_view name) {
    if (name == "any" || name.empty()) return RelationConstraint::none();
    if (name.starts_with("non-")) {
        RelationSet set;
        std::string_view rest = name;
        while (!rest.empty()) {
            auto plus = rest.find('+');
            auto token = rest.substr(0, plus);
            if (!token.starts_with("non-"))
                fail(ErrorKind::InvalidArgument, "bad constraint '" + std::string(name) + "'");
            set = set.with(parse_relation(token.substr(4)));
            rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
        }
        return RelationConstraint::forbid(set);
    }
    return RelationConstraint::require(parse_relation(name));
}

std::vector<Edge> all_edges(int m) {
    std::vector<Edge> out;
    out.reserve(edge_count(m));
    for (Vertex i = 1; i <= m; ++i)
        for (Vertex j = i + 1; j <= m; ++j) out.push_back({i, j});
    return out;
}

OrderedColoring::OrderedColoring(int m, int t, Color fill) : m_(m), t_(t) {
    require(m >= 1, "coloring needs m >= 1");
    require(t >= 1 && t <= 255, "coloring needs 1 <= t <= 255");
    require(fill >= 0 && fill < t, "fill color out of range");
    colors_.assign(edge_count(m), static_cast<std::uint8_t>(fill));
}

OrderedColoring::OrderedColoring(int m, int t, std::vector<std::uint8_t> colors)
    : m_(m), t_(t), colors_(std::move(colors)) {
    require(m >= 1, "coloring needs m >= 1");
    require(t >= 1 && t <= 255, "coloring needs 1 <= t <= 255");
    require(colors_.size() == edge_count(m), "color vector has wrong length");
    for (auto c : colors_) require(c < t, "color out of range");
}

void OrderedColoring::set(const Edge& e, Color c) {
    require(contains(e), "edge " + to_string(e) + " outside [" + std::to_string(m_) + "]");
    require(c >= 0 && c < t_, "color " + std::to_string(c) + " out of range");
    colors_[edge_index(m_, e)] = static_cast<std::uint8_t>(c);
}

OrderedColoring OrderedColoring::induced(Vertex lo, Vertex hi) const {
    require(1 <= lo && lo <= hi && hi <= m_, "bad induced range");
    std::vector<Vertex> vs(static_cast<std::size_t>(hi - lo + 1));
    std::iota(vs.begin(), vs.end(), lo);
    return induced(vs);
}

OrderedColoring OrderedColoring::induced(std::span<const Vertex> vertices) const {
    const int k = static_cast<int>(vertices.size());
    require(k >= 1, "induced coloring needs at least one vertex");
    OrderedColoring sub(k, t_);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            require(vertices[a] < vertices[b], "induced vertex list must be increasing");
            sub.colors_[edge_index(k, {a + 1, b + 1})] =
                colors_[edge_index(m_, {vertices[a], vertices[b]})];
        }
    return sub;
}

std::vector<Edge> OrderedColoring::color_class(Color c) const {
    std::vector<Edge> out;
    std::size_t idx = 0;
    for (Vertex i = 1; i <= m_; ++i)
        for (Vertex j = i + 1; j <= m_; ++j, ++idx)
            if (colors_[idx] == c) out.push_back({i, j});
    return out;
}

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::Matching: return "matching";
        case CertificateKind::SpanningTree: return "spanning-tree";
        case CertificateKind::Subtree: return "subtree";
        case CertificateKind::Subgraph: return "subgraph";
    }
    return "?";
}

CertificateKind parse_certificate_kind(std::string_view name) {
    for (auto k : {CertificateKind::Matching, CertificateKind::SpanningTree,
                   CertificateKind::Subtree, CertificateKind::Subgraph})
        if (name == to_string(k)) return k;
    fail(ErrorKind::Format, "unknown certificate kind '" + std::string(name) + "'");
}

void sort_edges(std::vector<Edge>& edges) { std::sort(edges.begin(), edges.end()); }

Certificate make_certificate(CertificateKind kind, std::vector<Edge> edges, Color color,
                             RelationConstraint constraint, std::string source) {
    sort_edges(edges);
    return Certificate{kind, std::move(edges), color, std::move(constraint), std::move(source)};
}

namespace {

ValidationReport violation(std::string msg, std::optional<std::pair<Edge, Edge>> pair = {}) {
    return ValidationReport{false, std::move(msg), pair};
}

// Union-find over vertex labels; used for the acyclicity and connectivity
// checks of tree certificates.
struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

ValidationReport validate_certificate(const OrderedColoring& coloring, const Certificate& cert) {
    const int m = coloring.m();
    if (cert.color < 0 || cert.color >= coloring.t())
        return violation("certificate color " + std::to_string(cert.color) + " out of range");
    if (cert.constraint.required() && !cert.constraint.forbidden().empty())
        return violation("constraint carries both a required and a forbidden relation");

    for (const auto& e : cert.edges)
        if (!coloring.contains(e)) return violation("edge " + to_string(e) + " outside [" +
                                                    std::to_string(m) + "]");
    for (std::size_t a = 0; a < cert.edges.size(); ++a)
        for (std::size_t b = a + 1; b < cert.edges.size(); ++b)
            if (cert.edges[a] == cert.edges[b])
                return violation("duplicate edge " + to_string(cert.edges[a]),
                                 std::pair{cert.edges[a], cert.edges[b]});

    for (const auto& e : cert.edges)
        if (coloring.color(e) != cert.color)
            return violation("edge " + to_string(e) + " has color " +
                             std::to_string(coloring.color(e)) + ", expected " +
                             std::to_string(cert.color));

    switch (cert.kind) {
        case CertificateKind::Matching:
            for (std::size_t a = 0; a < cert.edges.size(); ++a)
                for (std::size_t b = a + 1; b < cert.edges.size(); ++b)
                    if (cert.edges[a].shares_vertex(cert.edges[b]))
                        return violation("matching edges " + to_string(cert.edges[a]) + "," +
                                             to_string(cert.edges[b]) + " share a vertex",
                                         std::pair{cert.edges[a], cert.edges[b]});
            break;
        case CertificateKind::SpanningTree:
        case CertificateKind::Subtree: {
            DisjointSets sets(m);
            std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
            int vertices = 0;
            for (const auto& e : cert.edges) {
                for (Vertex v : {e.lo, e.hi})
                    if (!seen[v]) {
                        seen[v] = true;
                        ++vertices;
                    }
                if (!sets.unite(e.lo, e.hi))
                    return violation("edge " + to_string(e) + " closes a cycle");
            }
            if (!cert.edges.empty() &&
                static_cast<std::size_t>(vertices) != cert.edges.size() + 1)
                return violation("tree is not connected");
            if (cert.kind == CertificateKind::SpanningTree &&
                cert.edges.size() + 1 != static_cast<std::size_t>(m))
                return violation("spanning tree on [" + std::to_string(m) + "] needs " +
                                 std::to_string(m - 1) + " edges, got " +
                                 std::to_string(cert.edges.size()));
            break;
        }
        case CertificateKind::Subgraph: break;
    }

    for (std::size_t a = 0; a < cert.edges.size(); ++a)
        for (std::size_t b = a + 1; b < cert.edges.size(); ++b) {
            const Edge& e = cert.edges[a];
            const Edge& f = cert.edges[b];
            if (!independent(e, f)) continue;
            const auto rel = relation_of(e, f);
            if (!cert.constraint.allows(rel))
                return violation(std::string(to_string(rel)) + " pair " + to_string(e) + "," +
                                     to_string(f),
                                 std::pair{e, f});
        }
    return {};
}

std::size_t RelationProfile::count(PairRelation r) const {
    switch (r) {
        case PairRelation::Crossing: return crossing;
        case PairRelation::Nested: return nested;
        case PairRelation::Separated: return separated;
    }
    return 0;
}

RelationProfile relation_profile(std::span<const Edge> edges) {
    RelationProfile p;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (!independent(edges[a], edges[b])) continue;
            switch (relation_of(edges[a], edges[b])) {
                case PairRelation::Crossing: ++p.crossing; break;
                case PairRelation::Nested: ++p.nested; break;
                case PairRelation::Separated: ++p.separated; break;
            }
        }
    return p;
}

Edge reverse(const Edge& e, int m) { return Edge{m + 1 - e.hi, m + 1 - e.lo}; }

std::vector<Edge> reverse(std::span<const Edge> edges, int m) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.push_back(reverse(e, m));
    sort_edges(out);
    return out;
}

OrderedColoring reverse(const OrderedColoring& coloring) {
    const int m = coloring.m();
    OrderedColoring out(m, coloring.t());
    for (const auto& e : all_edges(m)) out.set(reverse(e, m), coloring.color(e));
    return out;
}

Certificate reverse(const Certificate& cert, int m) {
    Certificate out = cert;
    out.edges = reverse(cert.edges, m);
    return out;
}

OrderedColoring swap_colors(const OrderedColoring& coloring, Color a, Color b) {
    std::vector<std::uint8_t> colors(coloring.colors().begin(), coloring.colors().end());
    for (auto& c : colors) {
        if (c == a)
            c = static_cast<std::uint8_t>(b);
        else if (c == b)
            c = static_cast<std::uint8_t>(a);
    }
    return OrderedColoring(coloring.m(), coloring.t(), std::move(colors));
}

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")";
}

std::string color_name(Color c, int t) {
    if (t == 2) return c == kRed ? "red" : "blue";
    return "color " + std::to_string(c);
}

}  // namespace ordram
