// Non-nested matchings around a red K_{2n-1} or a blue K_{n-1,2n}.

#include <algorithm>
#include <sstream>

#include "ordram/matchings.hpp"

namespace ordram::matchings {

namespace {

const RelationConstraint kNonNested = RelationConstraint::forbid(PairRelation::Nested);

void check_sorted_subset(const std::vector<Vertex>& vs, int m, const char* what) {
    for (std::size_t k = 0; k < vs.size(); ++k) {
        require(vs[k] >= 1 && vs[k] <= m, std::string(what) + " vertex out of range");
        require(k == 0 || vs[k - 1] < vs[k], std::string(what) + " has a repeated vertex");
    }
}

std::string describe(const HMatchingTrace& trace, const HGraph& h) {
    std::ostringstream out;
    out << "n=" << h.n() << " P={";
    for (auto v : h.p()) out << ' ' << v;
    out << " } Q={";
    for (auto v : h.q()) out << ' ' << v;
    out << " } trace:";
    for (std::size_t i = 0; i < trace.j.size(); ++i)
        out << " q" << i + 1 << "->p" << trace.j[i] << "(step " << trace.step[i] << ")";
    return out.str();
}

}  // namespace

HGraph HGraph::from_positions(int n, std::vector<Vertex> clique) {
    require(n >= 1, "H-graph needs n >= 1");
    std::sort(clique.begin(), clique.end());
    const int m = 3 * n - 1;
    require(static_cast<int>(clique.size()) == 2 * n - 1,
            "clique must have 2n-1 = " + std::to_string(2 * n - 1) + " vertices");
    check_sorted_subset(clique, m, "clique");

    HGraph h;
    h.n_ = n;
    h.p_ = std::move(clique);
    h.prefix_.assign(static_cast<std::size_t>(m) + 1, 0);
    std::vector<char> in_p(static_cast<std::size_t>(m) + 1, 0);
    for (auto v : h.p_) in_p[v] = 1;
    for (Vertex v = 1; v <= m; ++v) {
        h.prefix_[v] = h.prefix_[v - 1] + in_p[v];
        if (!in_p[v]) h.q_.push_back(v);
    }
    return h;
}

int HGraph::pi(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    if (b - a < 2) return 0;
    return prefix_[b - 1] - prefix_[a];
}

int HGraph::p_index(Vertex v) const {
    auto it = std::lower_bound(p_.begin(), p_.end(), v);
    return it != p_.end() && *it == v ? static_cast<int>(it - p_.begin()) + 1 : 0;
}

bool HGraph::has_edge(int p_idx, int q_idx) const {
    const int d = pi(p_at(p_idx), q_at(q_idx));
    return (d > 0 && d <= n_ - 1) || (d == 0 && p_idx % 2 == 1);
}

bool HGraph::has_edge(const Edge& e) const {
    const int a = p_index(e.lo), b = p_index(e.hi);
    if ((a == 0) == (b == 0)) return false;  // both in P or both in Q
    const Vertex qv = a == 0 ? e.lo : e.hi;
    const int qi = static_cast<int>(std::lower_bound(q_.begin(), q_.end(), qv) - q_.begin()) + 1;
    return has_edge(a == 0 ? b : a, qi);
}

std::vector<Edge> HGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= static_cast<int>(p_.size()); ++i)
        for (int j = 1; j <= static_cast<int>(q_.size()); ++j)
            if (has_edge(i, j)) out.push_back(make_edge(p_at(i), q_at(j)));
    sort_edges(out);
    return out;
}

HGraph build_h_graph(const OrderedColoring& coloring, std::vector<Vertex> clique) {
    require(coloring.t() == 2, "H-graph needs a 2-coloring");
    require(coloring.m() % 3 == 2, "H-graph needs m = 3n-1");
    const int n = (coloring.m() + 1) / 3;
    HGraph h = HGraph::from_positions(n, std::move(clique));
    const auto& p = h.p();
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (coloring.color(p[a], p[b]) != kRed)
                fail(ErrorKind::NotARedClique,
                     "edge " + to_string(Edge{p[a], p[b]}) + " inside P is not red");
    return h;
}

Certificate expand_red_h_edge(const OrderedColoring& coloring, std::vector<Vertex> clique,
                              const Edge& h_edge) {
    const HGraph h = build_h_graph(coloring, std::move(clique));
    if (!h.has_edge(h_edge))
        fail(ErrorKind::NotAnHEdge, "edge " + to_string(h_edge) + " is not an edge of H");
    if (coloring.color(h_edge) != kRed)
        fail(ErrorKind::EdgeNotRed, "H-edge " + to_string(h_edge) + " is not red");

    // P1 | P2 | P3: clique vertices left of, between, and right of the edge.
    std::vector<Vertex> p1, p2, p3;
    for (auto v : h.p()) {
        if (h_edge.touches(v)) continue;
        if (v < h_edge.lo)
            p1.push_back(v);
        else if (v < h_edge.hi)
            p2.push_back(v);
        else
            p3.push_back(v);
    }
    const int n1 = static_cast<int>(p1.size());
    const int n2 = static_cast<int>(p2.size());
    const int n3 = static_cast<int>(p3.size());

    // P2 = P2' + P2'': P2' is the longest prefix with |P2'| <= |P1|,
    // |P2''| <= |P3| and |P1| - |P2'| even (then |P3| - |P2''| is even too).
    int k = -1;
    for (int cand = std::min(n1, n2); cand >= 0; --cand)
        if ((n1 - cand) % 2 == 0 && n2 - cand <= n3) {
            k = cand;
            break;
        }
    if (k < 0)
        fail(ErrorKind::AlgorithmStuck,
             "no admissible split of the clique vertices between " + to_string(h_edge));

    std::vector<Edge> edges{h_edge};
    const int keep_left = n1 - k;  // paired among themselves
    for (int a = 0; a + 1 < keep_left; a += 2) edges.push_back({p1[a], p1[a + 1]});
    for (int a = 0; a < k; ++a) edges.push_back({p1[keep_left + a], p2[a]});
    const int cross_right = n2 - k;
    for (int a = 0; a < cross_right; ++a) edges.push_back({p2[k + a], p3[a]});
    for (int a = cross_right; a + 1 < n3; a += 2) edges.push_back({p3[a], p3[a + 1]});

    return make_certificate(CertificateKind::Matching, std::move(edges), kRed, kNonNested,
                            "thm9i-red-h-edge");
}

HMatchingResult nonnested_h_matching(const HGraph& h) {
    const int n = h.n();
    const int p_count = 2 * n - 1;
    HMatchingTrace trace;
    int prev = 0;
    auto stuck = [&](const std::string& why) {
        fail(ErrorKind::AlgorithmStuck, "H-matching: " + why + "; " + describe(trace, h));
    };

    for (int i = 1; i <= n; ++i) {
        const int next = prev + 1;
        if (next > p_count) stuck("ran out of P-vertices at q" + std::to_string(i));
        const int d = h.pi(h.q_at(i), h.p_at(next));
        int j = 0;
        int step = 0;
        if (h.has_edge(next, i)) {
            j = next;
            step = 3;
        } else if (d == 0 && next % 2 == 0) {
            j = next + 1;
            step = 4;
        } else if (d >= n) {
            for (int cand = next; cand <= p_count; ++cand)
                if (h.pi(h.q_at(i), h.p_at(cand)) < n) {
                    j = cand;
                    break;
                }
            step = 5;
        }
        if (j == 0 || j > p_count) stuck("no P-vertex for q" + std::to_string(i));
        trace.j.push_back(j);
        trace.step.push_back(step);
        if (!h.has_edge(j, i))
            stuck("pair (q" + std::to_string(i) + ", p" + std::to_string(j) + ") is not an H-edge");
        prev = j;
    }

    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back(make_edge(h.q_at(i), h.p_at(trace.j[i - 1])));
    return {make_certificate(CertificateKind::Matching, std::move(edges), kBlue, kNonNested,
                             "thm9i-h-matching"),
            std::move(trace)};
}

Certificate find_nonnested_given_red_clique(const OrderedColoring& coloring,
                                            std::vector<Vertex> clique) {
    const HGraph h = build_h_graph(coloring, clique);
    for (const auto& e : h.edges())
        if (coloring.color(e) == kRed) return expand_red_h_edge(coloring, std::move(clique), e);
    return nonnested_h_matching(h).certificate;
}

std::vector<Edge> black_white_nonnested_matching(std::vector<Vertex> blacks,
                                                 std::vector<Vertex> whites, int n) {
    require(n >= 0, "matching size must be non-negative");
    if (static_cast<int>(blacks.size()) < n || static_cast<int>(whites.size()) < n)
        fail(ErrorKind::InsufficientVertices,
             "need " + std::to_string(n) + " black and " + std::to_string(n) +
                 " white vertices, got " + std::to_string(blacks.size()) + " and " +
                 std::to_string(whites.size()));
    std::sort(blacks.begin(), blacks.end());
    std::sort(whites.begin(), whites.end());
    for (auto b : blacks)
        require(!std::binary_search(whites.begin(), whites.end(), b),
                "vertex " + std::to_string(b) + " is both black and white");
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i) out.push_back(make_edge(blacks[i], whites[i]));
    sort_edges(out);
    return out;
}

Certificate find_nonnested_given_blue_biclique(const OrderedColoring& coloring,
                                               std::vector<Vertex> p, std::vector<Vertex> q) {
    require(coloring.t() == 2, "needs a 2-coloring");
    require(coloring.m() % 3 == 2, "needs m = 3n-1");
    const int n = (coloring.m() + 1) / 3;
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    require(static_cast<int>(p.size()) == 2 * n, "P must have 2n vertices");
    require(static_cast<int>(q.size()) == n - 1, "Q must have n-1 vertices");
    check_sorted_subset(p, coloring.m(), "P");
    check_sorted_subset(q, coloring.m(), "Q");
    for (auto a : p)
        for (auto b : q) {
            require(a != b, "P and Q overlap");
            if (coloring.color(a, b) != kBlue)
                fail(ErrorKind::InvalidArgument,
                     "P-Q edge " + to_string(make_edge(a, b)) + " is not blue");
        }

    for (int i = 1; i <= n; ++i) {
        const Vertex left = p[i - 1];
        const Vertex right = p[i + n - 1];
        if (coloring.color(left, right) != kBlue) continue;

        // e = (p_i, p_{i+n}) is blue. Match n-1 clique vertices to Q by the
        // sorted black-white pairing, chosen so that no edge contains e or
        // lies inside it.
        const std::vector<Vertex> a(p.begin(), p.begin() + (i - 1));
        const std::vector<Vertex> mid(p.begin() + i, p.begin() + (i + n - 1));
        const std::vector<Vertex> b(p.begin() + (i + n), p.end());
        const int q_left = static_cast<int>(std::count_if(q.begin(), q.end(), [&](Vertex v) { return v < left; }));
        const int q_mid = static_cast<int>(std::count_if(q.begin(), q.end(), [&](Vertex v) { return left < v && v < right; }));
        const int q_right = n - 1 - q_left - q_mid;
        const int na = static_cast<int>(a.size());
        const int nb = static_cast<int>(b.size());

        std::vector<Vertex> blacks;
        if (q_left <= na && na <= q_left + q_mid) {
            // A takes the first |A| of Q, B the rest.
            blacks = a;
            blacks.insert(blacks.end(), b.begin(), b.end());
        } else if (q_left > na) {
            // Too many Q-vertices left of e: the surplus crosses e into P's middle.
            blacks = a;
            blacks.insert(blacks.end(), mid.begin(), mid.begin() + (q_left - na));
            blacks.insert(blacks.end(), b.begin(), b.begin() + (n - 1 - q_left));
        } else {
            blacks.assign(a.end() - (q_left + q_mid), a.end());
            blacks.insert(blacks.end(), mid.begin(), mid.begin() + (q_right - nb));
            blacks.insert(blacks.end(), b.begin(), b.end());
        }
        auto edges = black_white_nonnested_matching(blacks, q, n - 1);
        edges.push_back({left, right});
        return make_certificate(CertificateKind::Matching, std::move(edges), kBlue, kNonNested,
                                "thm9ii-blue");
    }

    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({p[i - 1], p[i + n - 1]});
    return make_certificate(CertificateKind::Matching, std::move(edges), kRed, kNonNested,
                            "thm9ii-red");
}

}  // namespace ordram::matchings
