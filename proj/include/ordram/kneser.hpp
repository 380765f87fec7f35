#pragma once

#include <string>
#include <vector>

#include "ordram/core.hpp"

namespace ordram::kneser {

/// Small undirected graph on 0..n-1 with a dense adjacency matrix.
class SimpleGraph {
public:
    explicit SimpleGraph(int n = 0);

    int size() const { return n_; }
    void add_edge(int a, int b);
    bool adjacent(int a, int b) const { return adj_[index(a, b)] != 0; }
    int degree(int v) const;
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// The graph with vertex v deleted; vertices above v shift down by one.
    SimpleGraph without(int v) const;

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }
    int n_;
    std::vector<char> adj_;
    std::vector<std::pair<int, int>> edges_;  // a < b, insertion order
};

/// Vertices are the pairs (i,j) of [t+3] with j >= i+2, except (1,t+3);
/// two are adjacent when crossing or separated.
struct KneserSubgraph {
    int t = 0;
    std::vector<Edge> vertices;  // lexicographic
    SimpleGraph graph;

    /// Index of a vertex, or -1 if the pair is not a vertex.
    int index_of(const Edge& e) const;
};

KneserSubgraph build_g(int t);

inline constexpr int kChromaticLimit = 60;

struct ChromaticResult {
    int k = 0;
    std::vector<int> colors;  // proper coloring with colors 0..k-1
};

/// Decides k-colorability by saturation-ordered backtracking; on success
/// writes a proper coloring to `witness` when given.
bool colorable(const SimpleGraph& g, int k, std::vector<int>* witness = nullptr);

/// Exact chromatic number with a witness. Throws LimitExceeded above `limit`.
ChromaticResult chromatic_number(const SimpleGraph& g, int limit = kChromaticLimit);

/// True iff the coloring is proper and uses colors 0..k-1 only.
bool is_proper(const SimpleGraph& g, const std::vector<int>& colors, int k);

struct CriticalityReport {
    int chi = 0;
    std::vector<int> chi_without;  // chi of g minus vertex v
    std::vector<int> critical;     // vertices whose removal lowers chi
};

CriticalityReport criticality(const SimpleGraph& g, int limit = kChromaticLimit);
std::vector<int> critical_vertices(const SimpleGraph& g, int limit = kChromaticLimit);

/// A monochromatic non-nested M_2 in a t-coloring of [t+3], read off as two
/// adjacent same-colored vertices of G_{t+3}. Throws NoneFound if none exists.
Certificate m2_from_edge_coloring(const OrderedColoring& coloring);

/// Plain text: a header line, one "i j" line per vertex, a blank line, then
/// one "a b" line per adjacent pair of 0-based vertex indices.
std::string export_graph(const KneserSubgraph& g);

}  // namespace ordram::kneser
