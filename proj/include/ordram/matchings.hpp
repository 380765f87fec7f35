#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/core.hpp"

namespace ordram::matchings {

/// Smallest m forcing a monochromatic M_{n_i} in color i for some i in every
/// t-coloring of K_m: sum(n_i - 1) + n_t + 1, sizes ascending.
int cockayne_lorimer_bound(std::span<const int> sizes);

// ---------------------------------------------------------------------------
// Non-crossing and non-separated matchings in 2-colorings of [3n-1].

Certificate find_matching_noncrossing(const OrderedColoring& coloring, int n);
Certificate find_matching_nonseparated(const OrderedColoring& coloring, int n);

// ---------------------------------------------------------------------------
// Non-nested matchings around a red K_{2n-1} or a blue K_{n-1,2n}.

/// The bipartite helper graph between a red clique P (|P| = 2n-1) and the
/// remaining vertices Q of [3n-1]. A pair {p_i, q_j} is an edge when the
/// number of P-vertices strictly between them is in [1, n-1], or is zero and
/// the index i of p_i in P is odd.
class HGraph {
public:
    /// Builds the graph from positions only (no coloring check).
    static HGraph from_positions(int n, std::vector<Vertex> clique);

    int n() const { return n_; }
    int m() const { return 3 * n_ - 1; }
    const std::vector<Vertex>& p() const { return p_; }
    const std::vector<Vertex>& q() const { return q_; }

    /// P vertex with 1-based index i, Q vertex with 1-based index j.
    Vertex p_at(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
    Vertex q_at(int j) const { return q_[static_cast<std::size_t>(j - 1)]; }

    /// Number of P-vertices strictly between a and b.
    int pi(Vertex a, Vertex b) const;

    /// 1-based index in P, or 0 when v is not in P.
    int p_index(Vertex v) const;

    bool has_edge(int p_idx, int q_idx) const;
    bool has_edge(const Edge& e) const;

    /// All H-edges as ordered edges, lexicographic.
    std::vector<Edge> edges() const;

private:
    int n_ = 0;
    std::vector<Vertex> p_;
    std::vector<Vertex> q_;
    std::vector<int> prefix_;  // prefix_[v] = |P ∩ [1, v]|
};

/// HGraph for a red clique P in a 2-coloring of [3n-1]; throws NotARedClique.
HGraph build_h_graph(const OrderedColoring& coloring, std::vector<Vertex> clique);

/// Turns a red H-edge into a red non-nested M_n inside P plus that edge.
Certificate expand_red_h_edge(const OrderedColoring& coloring, std::vector<Vertex> clique,
                              const Edge& h_edge);

struct HMatchingTrace {
    std::vector<int> j;     // j[i-1] = P-index paired with q_i
    std::vector<int> step;  // which step (3, 4 or 5) fixed j(i)
};

struct HMatchingResult {
    Certificate certificate;  // blue, non-nested
    HMatchingTrace trace;
};

/// Pairs q_i with p_{j(i)} by the stepwise rule (advance by one when the pair
/// is an H-edge, skip an even index at zero distance, otherwise jump to the
/// first P-vertex fewer than n positions away). Assumes every H-edge is blue.
HMatchingResult nonnested_h_matching(const HGraph& h);

/// Monochromatic non-nested M_n given that P spans a red K_{2n-1}.
Certificate find_nonnested_given_red_clique(const OrderedColoring& coloring,
                                            std::vector<Vertex> clique);

/// Pairs the i-th smallest black with the i-th smallest white vertex; the
/// result has no nested pair.
std::vector<Edge> black_white_nonnested_matching(std::vector<Vertex> blacks,
                                                 std::vector<Vertex> whites, int n);

/// Monochromatic non-nested M_n given that every P-Q edge is blue, with
/// |P| = 2n and |Q| = n-1 partitioning [3n-1].
Certificate find_nonnested_given_blue_biclique(const OrderedColoring& coloring,
                                               std::vector<Vertex> p, std::vector<Vertex> q);

// ---------------------------------------------------------------------------
// Small asymmetric cases: red non-nested M_2 / M_3 or blue non-nested M_n.

Certificate solve_r_star_2(const OrderedColoring& coloring, int n);
Certificate solve_r_star_3(const OrderedColoring& coloring, int n);

// ---------------------------------------------------------------------------
// Nested, crossing and separated matchings in t-colorings.

Certificate extract_nested_matching(const OrderedColoring& coloring, int n);
Certificate extract_crossing_matching(const OrderedColoring& coloring, int n);
Certificate extract_separated_matching(const OrderedColoring& coloring, int n);

// Lower-bound colorings.
OrderedColoring construct_nested_lb(int t, int n);
OrderedColoring construct_crossing_lb(int t, int n);
OrderedColoring construct_separated_lb(int t, int n);
OrderedColoring construct_prop15(int t);
OrderedColoring construct_rstar2_lb(int n);
OrderedColoring construct_rstar3_lb(int n);

/// Partition of the edges of K_{2t} into t spanning double stars, each free
/// of crossing pairs.
std::vector<std::vector<Edge>> double_star_decomposition(int t);

/// Generator names accepted by construct_named, in display order.
std::span<const std::string_view> construction_names();

/// Looks a generator up by name: prop6i, prop6ii, thm8-sep, thm8-nested,
/// thm8-crossing, rstar2-lb, rstar3-lb, nested-lb, crossing-lb,
/// separated-lb, prop15. Parameters a generator does not use are ignored.
OrderedColoring construct_named(std::string_view name, int t, int n);

inline constexpr int kMatchingOracleLimit = 24;

/// Exact maximum size of a monochromatic matching of the given color whose
/// pairs satisfy the constraint.
OracleResult max_constrained_matching(const OrderedColoring& coloring,
                                      const RelationConstraint& constraint, Color color,
                                      int limit = kMatchingOracleLimit);

}  // namespace ordram::matchings
