#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordram/core.hpp"

namespace ordram::search {

/// "Some color i contains a matching with sizes[i] edges whose pairs satisfy
/// the constraint." t is sizes.size().
struct Query {
    std::string family;  // constraint name, e.g. "non-nested"
    RelationConstraint constraint;
    std::vector<int> sizes;

    int t() const { return static_cast<int>(sizes.size()); }
    bool symmetric() const;
};

Query make_query(std::string_view family, std::vector<int> sizes);
Query make_query(std::string_view family, int t, int n);

struct Symmetry {
    bool color_permutation = true;
    bool reversal = true;
};

struct Shard {
    int index = 0;
    int count = 1;
};

struct SearchSpec {
    int m = 1;
    int t = 2;
    Symmetry symmetry;
    Shard shard;
    std::uint64_t budget = 0;  // maximum search nodes per shard; 0 = unlimited
};

struct SearchStats {
    std::uint64_t nodes = 0;   // partial colorings expanded
    std::uint64_t leaves = 0;  // complete colorings reached
    std::uint64_t visited = 0; // complete colorings handed to the visitor / predicate
    std::uint64_t pruned = 0;  // subtrees cut because the target already appeared
    bool complete = true;

    SearchStats& operator+=(const SearchStats& o);
};

/// Exhaustive search supports m(m-1)/2 <= 64 edges.
inline constexpr int kMaxSearchVertices = 11;

using Visitor = std::function<void(const OrderedColoring&)>;

/// Visits one representative (its canonical form) per orbit of the enabled
/// symmetry group, in lexicographic order within the shard. Stops with
/// complete = false when the budget runs out.
SearchStats enumerate_colorings(const SearchSpec& spec, const Visitor& visit);

/// Lexicographically smallest color vector among the images of the coloring.
OrderedColoring canonical_form(const OrderedColoring& coloring, const Symmetry& symmetry);

/// Number of distinct images of the coloring under the enabled symmetries.
std::size_t orbit_size(const OrderedColoring& coloring, const Symmetry& symmetry);

/// Restricted growth string: colors relabeled by order of first appearance.
std::vector<std::uint8_t> relabel_by_first_use(std::span<const std::uint8_t> colors);

enum class Verdict { Holds, Counterexample, Unresolved };
std::string_view to_string(Verdict v);

struct VerifyResult {
    Verdict verdict = Verdict::Unresolved;
    std::optional<OrderedColoring> counterexample;
    SearchStats stats;
};

using Predicate = std::function<bool(const OrderedColoring&)>;

/// Checks the predicate on every representative; the counterexample is the
/// smallest failing canonical form. The predicate must be invariant under
/// the enabled symmetries.
VerifyResult verify_all(const SearchSpec& spec, const Predicate& predicate);

/// Fast path for matching queries on the single shard named in the spec:
/// prunes every branch in which a target matching has already appeared.
/// Color permutation is ignored unless the query is symmetric.
VerifyResult verify_query(const SearchSpec& spec, const Query& query);

/// Runs shards 0..shards-1 of the spec on `jobs` threads and merges them.
/// The verdict and counterexample do not depend on `shards` or `jobs`.
VerifyResult verify_sharded(const SearchSpec& spec, const Query& query, int shards, int jobs);

/// Merge of per-shard results: the smallest counterexample wins, otherwise
/// any incomplete shard makes the result Unresolved.
VerifyResult merge_results(std::span<const VerifyResult> parts);

/// The query's predicate evaluated directly on one coloring.
bool has_target(const OrderedColoring& coloring, const Query& query);

/// Greedily recolors edges toward color 0 while keeping the coloring free of
/// the target, then canonicalizes.
OrderedColoring minimize_counterexample(const OrderedColoring& coloring, const Query& query);

struct RamseyStep {
    int m = 0;
    Verdict verdict = Verdict::Unresolved;
    SearchStats stats;
};

struct RamseyResult {
    Query query;
    std::optional<int> value;           // the threshold, when resolved
    std::optional<OrderedColoring> witness;  // on value - 1 vertices
    std::vector<RamseyStep> steps;
};

struct RunOptions {
    int jobs = 1;
    int shards = 1;
    std::uint64_t budget = 0;
    Symmetry symmetry;
};

RamseyResult ramsey_number(const Query& query, int max_m, const RunOptions& options = {});

struct ConjectureReport {
    std::string name;
    int m = 0;
    Query query;
    VerifyResult result;
};

/// nonnested-CL and nonseparated-CL take (t, n) with m = (t-1)(n-1)+2n;
/// asymmetric-nonnested takes ascending sizes with the Cockayne-Lorimer m.
ConjectureReport verify_conjecture(std::string_view name, std::vector<int> sizes,
                                   const RunOptions& options = {});

/// Uniform independent colors from a seeded 64-bit Mersenne twister.
OrderedColoring random_coloring(int m, int t, std::uint64_t seed);

}  // namespace ordram::search
