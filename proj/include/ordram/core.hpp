#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordram/error.hpp"

namespace ordram {

using Vertex = int;  // 1-based everywhere in the public surface
using Color = int;   // 0-based; for two colors 0 is red and 1 is blue

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;

struct Edge {
    Vertex lo = 1;
    Vertex hi = 2;

    constexpr int length() const { return hi - lo; }
    constexpr bool touches(Vertex v) const { return v == lo || v == hi; }
    constexpr bool shares_vertex(const Edge& f) const {
        return touches(f.lo) || touches(f.hi);
    }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds the edge {a, b} with its endpoints in increasing order.
Edge make_edge(Vertex a, Vertex b);

enum class PairRelation : std::uint8_t { Crossing = 0, Nested = 1, Separated = 2 };

inline constexpr PairRelation kAllRelations[] = {
    PairRelation::Crossing, PairRelation::Nested, PairRelation::Separated};

std::string_view to_string(PairRelation rel);
PairRelation parse_relation(std::string_view name);

constexpr bool independent(const Edge& e, const Edge& f) { return !e.shares_vertex(f); }

/// Unchecked classification of two vertex-disjoint edges. Hot loops use this;
/// everything else goes through classify_pair.
constexpr PairRelation relation_of(const Edge& e, const Edge& f) {
    const Edge& a = e.lo < f.lo ? e : f;
    const Edge& b = e.lo < f.lo ? f : e;
    if (a.hi < b.lo) return PairRelation::Separated;
    if (a.hi < b.hi) return PairRelation::Crossing;
    return PairRelation::Nested;
}

/// Relation between two independent edges; throws SharedVertex or
/// IdenticalEdge otherwise.
PairRelation classify_pair(const Edge& e, const Edge& f);

class RelationSet {
public:
    constexpr RelationSet() = default;
    constexpr RelationSet(std::initializer_list<PairRelation> rels) {
        for (auto r : rels) bits_ |= bit(r);
    }

    constexpr bool contains(PairRelation r) const { return (bits_ & bit(r)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr RelationSet with(PairRelation r) const {
        RelationSet s = *this;
        s.bits_ |= bit(r);
        return s;
    }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr bool operator==(RelationSet, RelationSet) = default;

private:
    static constexpr std::uint8_t bit(PairRelation r) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
    }
    std::uint8_t bits_ = 0;
};

// Either a set of forbidden relations or a single required one, never both.
// "non-nested" is forbid(Nested); "nested matching" is require(Nested).
class RelationConstraint {
public:
    static RelationConstraint none() { return {}; }
    static RelationConstraint forbid(RelationSet rels);
    static RelationConstraint forbid(PairRelation rel) { return forbid(RelationSet{rel}); }
    static RelationConstraint require(PairRelation rel);

    const RelationSet& forbidden() const { return forbidden_; }
    const std::optional<PairRelation>& required() const { return required_; }

    bool allows(PairRelation rel) const {
        if (required_) return rel == *required_;
        return !forbidden_.contains(rel);
    }

    /// Human-readable form such as "non-nested", "crossing" or "any".
    std::string describe() const;

    friend bool operator==(const RelationConstraint&, const RelationConstraint&) = default;

private:
    RelationSet forbidden_;
    std::optional<PairRelation> required_;
};

/// Parses the family names used in documents and on the command line:
/// "any", "non-crossing", "non-nested", "non-separated", "crossing",
/// "nested", "separated".
RelationConstraint parse_constraint(std::string_view name);

inline std::size_t edge_count(int m) {
    return m < 2 ? 0 : static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
}

/// Position of e in the lexicographic order of all edges on [m].
inline std::size_t edge_index(int m, const Edge& e) {
    const auto lo = static_cast<std::size_t>(e.lo - 1);
    return lo * static_cast<std::size_t>(m) - lo * (lo + 1) / 2 +
           static_cast<std::size_t>(e.hi - e.lo - 1);
}

/// All edges on [m] in lexicographic order.
std::vector<Edge> all_edges(int m);

/// A t-coloring of every edge of the ordered complete graph on [m]. Colors are
/// stored in lexicographic edge order, which is also the order used by the
/// exhaustive search for canonical forms.
class OrderedColoring {
public:
    OrderedColoring() : OrderedColoring(1, 1) {}
    OrderedColoring(int m, int t, Color fill = 0);
    OrderedColoring(int m, int t, std::vector<std::uint8_t> colors);

    int m() const { return m_; }
    int t() const { return t_; }
    std::size_t size() const { return colors_.size(); }

    bool contains(const Edge& e) const { return e.lo >= 1 && e.lo < e.hi && e.hi <= m_; }

    Color color(const Edge& e) const { return colors_[edge_index(m_, e)]; }
    Color color(Vertex i, Vertex j) const { return color(make_edge(i, j)); }
    void set(const Edge& e, Color c);
    void set(Vertex i, Vertex j, Color c) { set(make_edge(i, j), c); }

    std::span<const std::uint8_t> colors() const { return colors_; }

    /// The coloring restricted to [lo, hi], relabeled onto [1, hi-lo+1].
    OrderedColoring induced(Vertex lo, Vertex hi) const;

    /// The coloring restricted to the given sorted vertex list, relabeled so
    /// that the k-th listed vertex becomes k.
    OrderedColoring induced(std::span<const Vertex> vertices) const;

    std::vector<Edge> color_class(Color c) const;

    friend bool operator==(const OrderedColoring&, const OrderedColoring&) = default;

private:
    int m_;
    int t_;
    std::vector<std::uint8_t> colors_;
};

enum class CertificateKind : std::uint8_t { Matching, SpanningTree, Subtree, Subgraph };

std::string_view to_string(CertificateKind kind);
CertificateKind parse_certificate_kind(std::string_view name);

/// A monochromatic edge set plus the structure and relation constraint it
/// claims. Checkable against a coloring without trusting whoever built it.
struct Certificate {
    CertificateKind kind = CertificateKind::Subgraph;
    std::vector<Edge> edges;  // lexicographic order
    Color color = 0;
    RelationConstraint constraint;
    std::string source;  // the operation that produced it

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate make_certificate(CertificateKind kind, std::vector<Edge> edges, Color color,
                             RelationConstraint constraint, std::string source);

/// Result of an exact oracle: the optimum and one certificate attaining it.
struct OracleResult {
    std::size_t size = 0;  // vertices for subtrees, edges for subgraphs and matchings
    Certificate witness;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    std::optional<std::pair<Edge, Edge>> offending;

    explicit operator bool() const { return ok; }
};

/// Checks every certificate invariant against the coloring. Never throws;
/// the report names the first violated invariant.
ValidationReport validate_certificate(const OrderedColoring& coloring, const Certificate& cert);

struct RelationProfile {
    std::size_t crossing = 0;
    std::size_t nested = 0;
    std::size_t separated = 0;

    std::size_t count(PairRelation r) const;
    std::size_t total() const { return crossing + nested + separated; }
    friend bool operator==(const RelationProfile&, const RelationProfile&) = default;
};

/// Counts each relation over the independent pairs of the edge set.
RelationProfile relation_profile(std::span<const Edge> edges);

/// Order reversal i -> m+1-i.
Edge reverse(const Edge& e, int m);
std::vector<Edge> reverse(std::span<const Edge> edges, int m);
OrderedColoring reverse(const OrderedColoring& coloring);
Certificate reverse(const Certificate& cert, int m);

/// Swaps colors a and b in a copy of the coloring.
OrderedColoring swap_colors(const OrderedColoring& coloring, Color a, Color b);

std::string to_string(const Edge& e);
std::string color_name(Color c, int t);

void sort_edges(std::vector<Edge>& edges);

}  // namespace ordram
