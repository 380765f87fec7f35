#pragma once

#include "ordram/core.hpp"

namespace ordram::trees {

// Monochromatic spanning trees in 2-colorings. Each solver returns a
// SpanningTree certificate whose constraint forbids the named relation.
Certificate find_tree_noncrossing(const OrderedColoring& coloring);
Certificate find_tree_nonnested(const OrderedColoring& coloring);
Certificate find_tree_nonseparated(const OrderedColoring& coloring);

/// The majority color class among edges (i,j) with i <= floor(m/2) < j.
/// No two of these edges are separated, and there are at least floor(m^2/8).
Certificate dense_nonseparated_subgraph(const OrderedColoring& coloring);

enum class Prop6Variant { NonCrossing, NonNested };
enum class Thm8Variant { Separated, Nested, Crossing };

/// Extremal 2-colorings: no monochromatic non-crossing (resp. non-nested)
/// subgraph with n edges.
OrderedColoring construct_prop6(Prop6Variant variant, int n);

/// Extremal 2-colorings bounding monochromatic separated / nested / crossing
/// subtrees by ceil(n/2)+1, (n+4)/2 and (n+3)/2 vertices.
OrderedColoring construct_thm8(Thm8Variant variant, int n);

/// Upper bound on the vertex count of a monochromatic subtree realizing
/// construct_thm8(variant, n).
int thm8_vertex_bound(Thm8Variant variant, int n);

inline constexpr int kSubtreeOracleLimit = 14;
inline constexpr int kSubgraphOracleLimit = 12;

/// Exact maximum vertex count of a monochromatic subtree of the given color
/// whose independent pairs satisfy the constraint.
OracleResult max_constrained_subtree(const OrderedColoring& coloring,
                                     const RelationConstraint& constraint, Color color,
                                     int limit = kSubtreeOracleLimit);

/// Exact maximum edge count of a monochromatic edge set satisfying the
/// constraint.
OracleResult max_constrained_subgraph(const OrderedColoring& coloring,
                                      const RelationConstraint& constraint, Color color,
                                      int limit = kSubgraphOracleLimit);

}  // namespace ordram::trees
