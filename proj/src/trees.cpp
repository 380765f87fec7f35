#include "ordram/trees.hpp"

#include <algorithm>
#include <numeric>

#include "ordram/detail/clique.hpp"

namespace ordram::trees {

namespace {

void require_two_colors(const OrderedColoring& c) {
    require(c.t() == 2, "spanning-tree solvers need a 2-coloring, got t=" + std::to_string(c.t()));
}

Certificate tree_certificate(std::vector<Edge> edges, Color color, PairRelation forbidden,
                             std::string source) {
    return make_certificate(CertificateKind::SpanningTree, std::move(edges), color,
                            RelationConstraint::forbid(forbidden), std::move(source));
}

// A coloring seen through a stack of recolorings: each layer paints every
// edge induced by [lo, hi] with one color, inner layers on top of outer ones.
class LayeredColoring {
public:
    explicit LayeredColoring(const OrderedColoring& base) : base_(base) {}

    Color color(Vertex i, Vertex j) const {
        for (auto it = layers_.rbegin(); it != layers_.rend(); ++it)
            if (it->lo <= i && j <= it->hi) return it->color;
        return base_.color(Edge{i, j});
    }
    void push(Vertex lo, Vertex hi, Color c) { layers_.push_back({lo, hi, c}); }
    void pop() { layers_.pop_back(); }

private:
    struct Layer {
        Vertex lo, hi;
        Color color;
    };
    const OrderedColoring& base_;
    std::vector<Layer> layers_;
};

struct Tree {
    std::vector<Edge> edges;
    Color color = 0;
};

// Keeps the preferred edges first, then the rest in lexicographic order,
// dropping any edge that would close a cycle.
std::vector<Edge> prune_cycles(std::vector<Edge> preferred, std::vector<Edge> rest, int m) {
    std::vector<int> parent(static_cast<std::size_t>(m) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    sort_edges(rest);
    std::vector<Edge> out;
    for (auto* list : {&preferred, &rest})
        for (const auto& e : *list) {
            const int a = find(e.lo), b = find(e.hi);
            if (a == b) continue;
            parent[a] = b;
            out.push_back(e);
        }
    return out;
}

bool induced_by(const Edge& e, Vertex lo, Vertex hi) { return lo <= e.lo && e.hi <= hi; }

// Spanning tree of [first, last] with no nested pair, valid in `view`.
Tree nonnested_on(LayeredColoring& view, Vertex first, Vertex last, int m) {
    if (first == last) return {};
    if (last == first + 1) return {{Edge{first, last}}, view.color(first, last)};

    const Color blue = view.color(first, first + 1);
    Vertex s = 0;
    for (Vertex v = first + 2; v <= last; ++v)
        if (view.color(first, v) != blue) {
            s = v;
            break;
        }
    if (s == 0) {
        Tree star{{}, blue};
        for (Vertex v = first + 1; v <= last; ++v) star.edges.push_back({first, v});
        return star;
    }

    view.push(first, s - 1, blue);
    Tree sub = nonnested_on(view, first + 1, last, m);
    view.pop();

    if (sub.color != blue) {
        sub.edges.push_back({first, s});
        return sub;
    }
    std::vector<Edge> star;
    for (Vertex v = first + 1; v < s; ++v) star.push_back({first, v});
    std::vector<Edge> kept;
    for (const auto& e : sub.edges)
        if (!induced_by(e, first + 1, s - 1)) kept.push_back(e);
    return {prune_cycles(std::move(star), std::move(kept), m), blue};
}

// Spanning tree of [first, last] with no separated pair, valid in `view`.
Tree nonseparated_on(LayeredColoring& view, Vertex first, Vertex last, int m) {
    if (first == last) return {};
    if (last == first + 1) return {{Edge{first, last}}, view.color(first, last)};

    const Color blue = view.color(first, last);
    Vertex s = 0;
    for (Vertex v = last - 1; v > first; --v)
        if (view.color(first, v) != blue) {
            s = v;
            break;
        }
    if (s == 0) {
        Tree star{{}, blue};
        for (Vertex v = first + 1; v <= last; ++v) star.edges.push_back({first, v});
        return star;
    }

    view.push(s + 1, last, blue);
    Tree sub = nonseparated_on(view, first + 1, last, m);
    view.pop();

    if (sub.color != blue) {
        sub.edges.push_back({first, s});
        return sub;
    }
    std::vector<Edge> star;
    for (Vertex v = s + 1; v <= last; ++v) star.push_back({first, v});
    std::vector<Edge> kept;
    for (const auto& e : sub.edges)
        if (!induced_by(e, s + 1, last)) kept.push_back(e);
    return {prune_cycles(std::move(star), std::move(kept), m), blue};
}

}  // namespace

Certificate find_tree_noncrossing(const OrderedColoring& coloring) {
    require_two_colors(coloring);
    std::vector<Vertex> alive(static_cast<std::size_t>(coloring.m()));
    std::iota(alive.begin(), alive.end(), 1);

    struct Removed {
        Vertex v, left, right;
    };
    std::vector<Removed> removed;

    // Peel off the smallest vertex where the consecutive path changes color
    // until the path on the remaining vertices is monochromatic.
    for (;;) {
        std::size_t pivot = 0;
        for (std::size_t k = 1; k + 1 < alive.size(); ++k)
            if (coloring.color(alive[k - 1], alive[k]) != coloring.color(alive[k], alive[k + 1])) {
                pivot = k;
                break;
            }
        if (pivot == 0) break;
        removed.push_back({alive[pivot], alive[pivot - 1], alive[pivot + 1]});
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pivot));
    }

    Color color = alive.size() >= 2 ? coloring.color(alive[0], alive[1]) : kRed;
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < alive.size(); ++k) edges.push_back({alive[k - 1], alive[k]});
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        if (coloring.color(it->left, it->v) == color)
            edges.push_back({it->left, it->v});
        else
            edges.push_back({it->v, it->right});
    }
    return tree_certificate(std::move(edges), color, PairRelation::Crossing,
                            "tree-noncrossing");
}

Certificate find_tree_nonnested(const OrderedColoring& coloring) {
    require_two_colors(coloring);
    LayeredColoring view(coloring);
    Tree t = nonnested_on(view, 1, coloring.m(), coloring.m());
    return tree_certificate(std::move(t.edges), t.color, PairRelation::Nested, "tree-nonnested");
}

Certificate find_tree_nonseparated(const OrderedColoring& coloring) {
    require_two_colors(coloring);
    LayeredColoring view(coloring);
    Tree t = nonseparated_on(view, 1, coloring.m(), coloring.m());
    return tree_certificate(std::move(t.edges), t.color, PairRelation::Separated,
                            "tree-nonseparated");
}

Certificate dense_nonseparated_subgraph(const OrderedColoring& coloring) {
    require_two_colors(coloring);
    const int m = coloring.m();
    const int half = m / 2;
    std::vector<Edge> by_color[2];
    for (Vertex i = 1; i <= half; ++i)
        for (Vertex j = half + 1; j <= m; ++j) by_color[coloring.color(i, j)].push_back({i, j});
    const Color pick = by_color[kRed].size() >= by_color[kBlue].size() ? kRed : kBlue;
    return make_certificate(CertificateKind::Subgraph, std::move(by_color[pick]), pick,
                            RelationConstraint::forbid(PairRelation::Separated),
                            "dense-nonseparated");
}

namespace {

OrderedColoring parity_coloring(int n) {
    OrderedColoring c(n, 2);
    for (const auto& e : all_edges(n)) c.set(e, (e.lo + e.hi) % 2 == 0 ? kBlue : kRed);
    return c;
}

}  // namespace

OrderedColoring construct_prop6(Prop6Variant variant, int n) {
    require(n >= 2, "construct_prop6 needs n >= 2");
    if (variant == Prop6Variant::NonNested) return parity_coloring(n);
    OrderedColoring c(n, 2, kRed);
    for (Vertex i = 1; i < n; ++i) c.set(i, i + 1, kBlue);
    return c;
}

OrderedColoring construct_thm8(Thm8Variant variant, int n) {
    if (variant != Thm8Variant::Separated) {
        require(n >= 2, "construct_thm8 needs n >= 2");
        return parity_coloring(n);
    }
    require(n >= 4, "the separated construction needs n >= 4");
    OrderedColoring c(n, 2, kBlue);
    for (Vertex i = 1; i <= n / 2; ++i)
        for (Vertex j = n / 2 + 1; j <= n; ++j) c.set(i, j, kRed);
    return c;
}

int thm8_vertex_bound(Thm8Variant variant, int n) {
    switch (variant) {
        case Thm8Variant::Separated: return (n + 1) / 2 + 1;
        case Thm8Variant::Nested: return (n + 4) / 2;
        case Thm8Variant::Crossing: return (n + 3) / 2;
    }
    return 0;
}

namespace {

bool compatible(const Edge& e, const Edge& f, const RelationConstraint& constraint) {
    return !independent(e, f) || constraint.allows(relation_of(e, f));
}

// Enumerates every monochromatic subtree once, rooted at its smallest vertex,
// by binary include/exclude branching on frontier edges.
class SubtreeSearch {
public:
    SubtreeSearch(const OrderedColoring& coloring, const RelationConstraint& constraint,
                  Color color)
        : m_(coloring.m()), constraint_(constraint), edges_(coloring.color_class(color)) {
        const auto k = edges_.size();
        compat_.assign(k * k, 0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                compat_[a * k + b] = compatible(edges_[a], edges_[b], constraint) ? 1 : 0;
        incident_.resize(static_cast<std::size_t>(m_) + 1);
        for (std::size_t a = 0; a < k; ++a) {
            incident_[edges_[a].lo].push_back(static_cast<int>(a));
            incident_[edges_[a].hi].push_back(static_cast<int>(a));
        }
        in_tree_.assign(static_cast<std::size_t>(m_) + 1, 0);
        excluded_.assign(k, 0);
    }

    std::pair<std::size_t, std::vector<Edge>> run() {
        best_size_ = m_ >= 1 ? 1 : 0;
        for (Vertex r = 1; r <= m_; ++r) {
            root_ = r;
            in_tree_[r] = 1;
            vertices_ = 1;
            std::vector<int> cands;
            for (int e : incident_[r])
                if (other(e, r) > r) cands.push_back(e);
            grow(std::move(cands));
            in_tree_[r] = 0;
        }
        std::vector<Edge> witness;
        for (int e : best_edges_) witness.push_back(edges_[e]);
        return {best_size_, std::move(witness)};
    }

private:
    Vertex other(int e, Vertex v) const { return edges_[e].lo == v ? edges_[e].hi : edges_[e].lo; }
    bool compat(int a, int b) const { return compat_[static_cast<std::size_t>(a) * edges_.size() + b]; }
    bool fits_tree(int e) const {
        return std::all_of(tree_.begin(), tree_.end(), [&](int f) { return compat(e, f); });
    }

    // Tree size plus every outside vertex reachable through edges that are
    // still compatible with the whole tree.
    std::size_t bound() const {
        std::vector<char> reached(in_tree_);
        std::vector<Vertex> queue;
        for (Vertex v = root_; v <= m_; ++v)
            if (in_tree_[v]) queue.push_back(v);
        std::size_t count = vertices_;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (int e : incident_[v]) {
                const Vertex w = other(e, v);
                if (w <= root_ || reached[w] || excluded_[e] || !fits_tree(e)) continue;
                reached[w] = 1;
                ++count;
                queue.push_back(w);
            }
        }
        return count;
    }

    void grow(std::vector<int> cands) {
        if (vertices_ > best_size_) {
            best_size_ = vertices_;
            best_edges_ = tree_;
        }
        if (cands.empty() || bound() <= best_size_) return;

        const int e = cands.back();
        cands.pop_back();
        const Vertex w = in_tree_[edges_[e].lo] ? edges_[e].hi : edges_[e].lo;

        // Include e: w joins the tree.
        std::vector<int> next;
        for (int c : cands) {
            const Vertex outside = in_tree_[edges_[c].lo] ? edges_[c].hi : edges_[c].lo;
            if (outside != w && compat(c, e)) next.push_back(c);
        }
        tree_.push_back(e);
        in_tree_[w] = 1;
        ++vertices_;
        for (int c : incident_[w]) {
            const Vertex x = other(c, w);
            if (x > root_ && !in_tree_[x] && !excluded_[c] && fits_tree(c)) next.push_back(c);
        }
        grow(std::move(next));
        --vertices_;
        in_tree_[w] = 0;
        tree_.pop_back();

        // Exclude e.
        excluded_[e] = 1;
        grow(std::move(cands));
        excluded_[e] = 0;
    }

    int m_;
    RelationConstraint constraint_;
    std::vector<Edge> edges_;
    std::vector<char> compat_;
    std::vector<std::vector<int>> incident_;
    std::vector<char> in_tree_;
    std::vector<char> excluded_;
    std::vector<int> tree_;
    Vertex root_ = 1;
    std::size_t vertices_ = 0;
    std::size_t best_size_ = 0;
    std::vector<int> best_edges_;
};

void check_limit(const OrderedColoring& c, int limit, const char* what) {
    if (c.m() > limit)
        fail(ErrorKind::OracleLimitExceeded, std::string(what) + " oracle limited to m <= " +
                                                 std::to_string(limit) + ", got m=" +
                                                 std::to_string(c.m()));
}

}  // namespace

OracleResult max_constrained_subtree(const OrderedColoring& coloring,
                                     const RelationConstraint& constraint, Color color,
                                     int limit) {
    check_limit(coloring, limit, "subtree");
    require(color >= 0 && color < coloring.t(), "color out of range");
    auto [size, edges] = SubtreeSearch(coloring, constraint, color).run();
    return {size, make_certificate(CertificateKind::Subtree, std::move(edges), color, constraint,
                                   "oracle-subtree")};
}

OracleResult max_constrained_subgraph(const OrderedColoring& coloring,
                                      const RelationConstraint& constraint, Color color,
                                      int limit) {
    check_limit(coloring, limit, "subgraph");
    require(color >= 0 && color < coloring.t(), "color out of range");
    const auto edges = coloring.color_class(color);
    detail::BitGraph g(static_cast<int>(edges.size()));
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            if (compatible(edges[a], edges[b], constraint))
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    std::vector<Edge> witness;
    for (int v : detail::max_clique(g)) witness.push_back(edges[v]);
    const auto size = witness.size();
    return {size, make_certificate(CertificateKind::Subgraph, std::move(witness), color, constraint,
                                   "oracle-subgraph")};
}

}  // namespace ordram::trees
