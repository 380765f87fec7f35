#include "ordram/kneser.hpp"

#include <algorithm>
#include <sstream>

#include "ordram/detail/clique.hpp"

namespace ordram::kneser {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    require(n >= 0, "vertex count must be non-negative");
}

void SimpleGraph::add_edge(int a, int b) {
    require(a >= 0 && a < n_ && b >= 0 && b < n_, "vertex out of range");
    require(a != b, "loops are not allowed");
    if (adjacent(a, b)) return;
    adj_[index(a, b)] = adj_[index(b, a)] = 1;
    edges_.emplace_back(std::min(a, b), std::max(a, b));
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adjacent(v, u);
    return d;
}

SimpleGraph SimpleGraph::without(int v) const {
    require(v >= 0 && v < n_, "vertex out of range");
    SimpleGraph h(n_ - 1);
    auto shift = [v](int u) { return u > v ? u - 1 : u; };
    for (auto [a, b] : edges_)
        if (a != v && b != v) h.add_edge(shift(a), shift(b));
    return h;
}

int KneserSubgraph::index_of(const Edge& e) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
    return it != vertices.end() && *it == e ? static_cast<int>(it - vertices.begin()) : -1;
}

KneserSubgraph build_g(int t) {
    require(t >= 2, "needs t >= 2");
    KneserSubgraph g;
    g.t = t;
    const int m = t + 3;
    for (const auto& e : all_edges(m))
        if (e.length() >= 2 && !(e.lo == 1 && e.hi == m)) g.vertices.push_back(e);
    g.graph = SimpleGraph(static_cast<int>(g.vertices.size()));
    for (std::size_t a = 0; a < g.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
            const Edge& e = g.vertices[a];
            const Edge& f = g.vertices[b];
            if (independent(e, f) && relation_of(e, f) != PairRelation::Nested)
                g.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

namespace {

class Dsatur {
public:
    Dsatur(const SimpleGraph& g, int k)
        : g_(g), k_(k), color_(static_cast<std::size_t>(g.size()), -1),
          seen_(static_cast<std::size_t>(g.size()) * static_cast<std::size_t>(k), 0),
          sat_(static_cast<std::size_t>(g.size()), 0) {
        for (int v = 0; v < g.size(); ++v) degree_.push_back(g.degree(v));
    }

    bool run() { return assign(0, 0); }
    const std::vector<int>& colors() const { return color_; }

private:
    int& seen(int v, int c) { return seen_[static_cast<std::size_t>(v) * k_ + c]; }

    int pick() const {
        int best = -1;
        for (int v = 0; v < g_.size(); ++v) {
            if (color_[v] >= 0) continue;
            if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    void paint(int v, int c, int delta) {
        for (int u = 0; u < g_.size(); ++u) {
            if (!g_.adjacent(v, u)) continue;
            int& s = seen(u, c);
            if (delta > 0 && s++ == 0) ++sat_[u];
            if (delta < 0 && --s == 0) --sat_[u];
        }
    }

    bool assign(int done, int used) {
        if (done == g_.size()) return true;
        const int v = pick();
        if (sat_[v] >= k_) return false;
        // A fresh color is tried only once: all unused colors are interchangeable.
        const int top = std::min(k_ - 1, used);
        for (int c = 0; c <= top; ++c) {
            if (seen(v, c)) continue;
            color_[v] = c;
            paint(v, c, +1);
            if (assign(done + 1, std::max(used, c + 1))) return true;
            paint(v, c, -1);
            color_[v] = -1;
        }
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<int> seen_;
    std::vector<int> sat_;
    std::vector<int> degree_;
};

int clique_number(const SimpleGraph& g) {
    detail::BitGraph b(g.size());
    for (auto [a, c] : g.edges()) b.add_edge(a, c);
    return static_cast<int>(detail::max_clique(b).size());
}

}  // namespace

bool colorable(const SimpleGraph& g, int k, std::vector<int>* witness) {
    if (g.size() == 0) {
        if (witness) witness->clear();
        return true;
    }
    if (k <= 0) return false;
    Dsatur search(g, k);
    if (!search.run()) return false;
    if (witness) *witness = search.colors();
    return true;
}

bool is_proper(const SimpleGraph& g, const std::vector<int>& colors, int k) {
    if (static_cast<int>(colors.size()) != g.size()) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (auto [a, b] : g.edges())
        if (colors[a] == colors[b]) return false;
    return true;
}

ChromaticResult chromatic_number(const SimpleGraph& g, int limit) {
    if (g.size() > limit)
        fail(ErrorKind::LimitExceeded, "chromatic number supports at most " + std::to_string(limit) +
                                           " vertices, got " + std::to_string(g.size()));
    ChromaticResult r;
    if (g.size() == 0) return r;
    for (int k = std::max(1, clique_number(g));; ++k)
        if (colorable(g, k, &r.colors)) {
            r.k = k;
            return r;
        }
}

CriticalityReport criticality(const SimpleGraph& g, int limit) {
    CriticalityReport rep;
    rep.chi = chromatic_number(g, limit).k;
    for (int v = 0; v < g.size(); ++v) {
        const SimpleGraph h = g.without(v);
        // chi(g - v) is chi or chi - 1; one decision settles it.
        const int without = colorable(h, rep.chi - 1) ? chromatic_number(h, limit).k : rep.chi;
        rep.chi_without.push_back(without);
        if (without < rep.chi) rep.critical.push_back(v);
    }
    return rep;
}

std::vector<int> critical_vertices(const SimpleGraph& g, int limit) { return criticality(g, limit).critical; }

Certificate m2_from_edge_coloring(const OrderedColoring& coloring) {
    const int t = coloring.t();
    require(t >= 2, "needs t >= 2");
    require(coloring.m() == t + 3, "needs m = t+3 = " + std::to_string(t + 3));
    const KneserSubgraph g = build_g(t);
    for (auto [a, b] : g.graph.edges()) {
        const Edge& e = g.vertices[static_cast<std::size_t>(a)];
        const Edge& f = g.vertices[static_cast<std::size_t>(b)];
        if (coloring.color(e) == coloring.color(f))
            return make_certificate(CertificateKind::Matching, {e, f}, coloring.color(e),
                                    RelationConstraint::forbid(PairRelation::Nested), "thm13");
    }
    std::ostringstream dump;
    for (auto c : coloring.colors()) dump << static_cast<int>(c);
    fail(ErrorKind::NoneFound, "no monochromatic adjacent pair in G_{t+3}; colors " + dump.str());
}

std::string export_graph(const KneserSubgraph& g) {
    std::ostringstream out;
    out << "G t=" << g.t << " vertices=" << g.vertices.size() << " edges=" << g.graph.edge_count() << '\n';
    for (const auto& e : g.vertices) out << e.lo << ' ' << e.hi << '\n';
    out << '\n';
    auto edges = g.graph.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) out << a << ' ' << b << '\n';
    return out.str();
}

}  // namespace ordram::kneser
