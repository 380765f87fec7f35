#pragma once

#include <cstdint>
#include <vector>

namespace ordram::detail {

// Dense undirected graph stored as adjacency bitsets. Used by the exact
// oracles: a constrained edge set is a clique in the "compatible pair" graph.
class BitGraph {
public:
    explicit BitGraph(int n);

    int size() const { return n_; }
    int words() const { return words_; }

    void add_edge(int a, int b);
    bool adjacent(int a, int b) const {
        return (row(a)[b >> 6] >> (b & 63)) & 1u;
    }
    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> adj_;
};

/// Maximum clique by branch and bound with greedy-coloring bounds. Returns
/// the vertices of one maximum clique in increasing order.
std::vector<int> max_clique(const BitGraph& g);

}  // namespace ordram::detail
