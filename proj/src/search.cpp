#include "ordram/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "ordram/matchings.hpp"

namespace ordram::search {

namespace {

using Colors = std::vector<std::uint8_t>;

// Position of reverse(e_k) for every edge index k.
std::vector<std::size_t> reversal_map(int m) {
    std::vector<std::size_t> map;
    for (const auto& e : all_edges(m)) map.push_back(edge_index(m, reverse(e, m)));
    return map;
}

Colors reversed(const Colors& c, const std::vector<std::size_t>& map) {
    Colors r(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) r[map[k]] = c[k];
    return r;
}

constexpr int kShardDepth = 10;

// Lexicographic depth-first enumeration of color vectors, restricted to
// first-use order when colors may be permuted. Leaves that are not the
// smallest in their orbit under reversal are skipped.
class Enumerator {
public:
    using Assign = std::function<bool(std::size_t k, int c)>;  // true prunes the branch
    using Unassign = std::function<void(std::size_t k, int c)>;
    using Leaf = std::function<bool(const Colors&)>;           // false stops the search

    Enumerator(const SearchSpec& spec, Assign assign, Unassign unassign, Leaf leaf)
        : spec_(spec), edges_(edge_count(spec.m)), colors_(edges_, 0),
          rev_(spec.symmetry.reversal ? reversal_map(spec.m) : std::vector<std::size_t>{}),
          assign_(std::move(assign)), unassign_(std::move(unassign)), leaf_(std::move(leaf)) {
        require(spec.m >= 1, "m must be at least 1");
        require(spec.t >= 1 && spec.t <= 255, "t must be in [1, 255]");
        require(spec.shard.count >= 1 && spec.shard.index >= 0 && spec.shard.index < spec.shard.count,
                "shard index must lie in [0, count)");
        depth_ = std::min<std::size_t>(edges_, kShardDepth);
    }

    SearchStats run() {
        dfs(0, 0);
        return stats_;
    }

private:
    bool dfs(std::size_t k, int used) {
        if (k == depth_ && prefix_++ % static_cast<std::uint64_t>(spec_.shard.count) !=
                               static_cast<std::uint64_t>(spec_.shard.index))
            return true;
        if (spec_.budget && stats_.nodes >= spec_.budget) {
            stats_.complete = false;
            return false;
        }
        ++stats_.nodes;
        if (k == edges_) {
            ++stats_.leaves;
            if (!rev_.empty()) {
                Colors r = reversed(colors_, rev_);
                if (spec_.symmetry.color_permutation) r = relabel_by_first_use(r);
                if (r < colors_) return true;
            }
            ++stats_.visited;
            return leaf_(colors_);
        }
        const int top = spec_.symmetry.color_permutation ? std::min(spec_.t - 1, used) : spec_.t - 1;
        for (int c = 0; c <= top; ++c) {
            colors_[k] = static_cast<std::uint8_t>(c);
            if (assign_ && assign_(k, c)) {
                ++stats_.pruned;
                if (unassign_) unassign_(k, c);
                continue;
            }
            const bool go = dfs(k + 1, std::max(used, c + 1));
            if (unassign_) unassign_(k, c);
            if (!go) return false;
        }
        colors_[k] = 0;
        return true;
    }

    const SearchSpec& spec_;
    std::size_t edges_;
    std::size_t depth_ = 0;
    std::uint64_t prefix_ = 0;
    Colors colors_;
    std::vector<std::size_t> rev_;
    Assign assign_;
    Unassign unassign_;
    Leaf leaf_;
    SearchStats stats_;
};

// Bitmask form of a matching query on [m]: compat[e] holds the edges that may
// share a matching with e.
struct MaskQuery {
    std::vector<std::uint64_t> compat;
    std::vector<int> sizes;

    MaskQuery(int m, const Query& q) : sizes(q.sizes) {
        if (m > kMaxSearchVertices)
            fail(ErrorKind::LimitExceeded, "exhaustive search supports m <= " +
                                               std::to_string(kMaxSearchVertices));
        const auto edges = all_edges(m);
        compat.assign(edges.size(), 0);
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = 0; b < edges.size(); ++b)
                if (a != b && independent(edges[a], edges[b]) &&
                    q.constraint.allows(relation_of(edges[a], edges[b])))
                    compat[a] |= std::uint64_t{1} << b;
    }

    bool clique(std::uint64_t cand, int need) const {
        if (need <= 0) return true;
        while (std::popcount(cand) >= need) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (clique(cand & compat[static_cast<std::size_t>(v)], need - 1)) return true;
        }
        return false;
    }

    // Does color class `mask` (which contains k) hold a target matching through k?
    bool closes(std::uint64_t mask, std::size_t k, int color) const {
        return clique(mask & compat[k], sizes[static_cast<std::size_t>(color)] - 1);
    }

    bool holds(std::span<const std::uint8_t> colors) const {
        std::vector<std::uint64_t> masks(sizes.size(), 0);
        for (std::size_t k = 0; k < colors.size(); ++k) masks[colors[k]] |= std::uint64_t{1} << k;
        for (std::size_t c = 0; c < sizes.size(); ++c)
            if (clique(masks[c], sizes[c])) return true;
        return false;
    }
};

SearchSpec effective(const SearchSpec& spec, const Query& query) {
    SearchSpec s = spec;
    s.t = query.t();
    if (!query.symmetric()) s.symmetry.color_permutation = false;
    return s;
}

}  // namespace

bool Query::symmetric() const {
    return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>{}) == sizes.end();
}

Query make_query(std::string_view family, std::vector<int> sizes) {
    require(!sizes.empty(), "at least one color is needed");
    for (int s : sizes) require(s >= 1, "target sizes must be positive");
    return Query{std::string(family), parse_constraint(family), std::move(sizes)};
}

Query make_query(std::string_view family, int t, int n) {
    require(t >= 1, "t must be positive");
    return make_query(family, std::vector<int>(static_cast<std::size_t>(t), n));
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    visited += o.visited;
    pruned += o.pruned;
    complete = complete && o.complete;
    return *this;
}

std::vector<std::uint8_t> relabel_by_first_use(std::span<const std::uint8_t> colors) {
    std::vector<int> label(256, -1);
    int next = 0;
    std::vector<std::uint8_t> out(colors.size());
    for (std::size_t k = 0; k < colors.size(); ++k) {
        int& l = label[colors[k]];
        if (l < 0) l = next++;
        out[k] = static_cast<std::uint8_t>(l);
    }
    return out;
}

OrderedColoring canonical_form(const OrderedColoring& coloring, const Symmetry& symmetry) {
    const auto raw = coloring.colors();
    Colors best(raw.begin(), raw.end());
    if (symmetry.color_permutation) best = relabel_by_first_use(best);
    if (symmetry.reversal) {
        Colors r = reversed(Colors(raw.begin(), raw.end()), reversal_map(coloring.m()));
        if (symmetry.color_permutation) r = relabel_by_first_use(r);
        best = std::min(best, r);
    }
    return OrderedColoring(coloring.m(), coloring.t(), std::move(best));
}

std::size_t orbit_size(const OrderedColoring& coloring, const Symmetry& symmetry) {
    const auto raw = coloring.colors();
    std::vector<Colors> bases{Colors(raw.begin(), raw.end())};
    if (symmetry.reversal) bases.push_back(reversed(bases.front(), reversal_map(coloring.m())));
    std::set<Colors> images;
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(coloring.t()));
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    do {
        for (const auto& b : bases) {
            Colors img(b.size());
            for (std::size_t k = 0; k < b.size(); ++k) img[k] = perm[b[k]];
            images.insert(std::move(img));
        }
    } while (symmetry.color_permutation && std::next_permutation(perm.begin(), perm.end()));
    return images.size();
}

SearchStats enumerate_colorings(const SearchSpec& spec, const Visitor& visit) {
    Enumerator e(spec, nullptr, nullptr, [&](const Colors& c) {
        visit(OrderedColoring(spec.m, spec.t, c));
        return true;
    });
    return e.run();
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::Unresolved: return "unresolved";
    }
    return "?";
}

VerifyResult verify_all(const SearchSpec& spec, const Predicate& predicate) {
    VerifyResult r;
    Enumerator e(spec, nullptr, nullptr, [&](const Colors& c) {
        OrderedColoring coloring(spec.m, spec.t, c);
        if (predicate(coloring)) return true;
        r.counterexample = std::move(coloring);
        return false;
    });
    r.stats = e.run();
    r.verdict = r.counterexample ? Verdict::Counterexample
                                 : (r.stats.complete ? Verdict::Holds : Verdict::Unresolved);
    return r;
}

VerifyResult verify_query(const SearchSpec& spec, const Query& query) {
    const SearchSpec s = effective(spec, query);
    const MaskQuery mq(s.m, query);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(s.t), 0);
    VerifyResult r;
    Enumerator e(
        s,
        [&](std::size_t k, int c) {
            auto& mask = masks[static_cast<std::size_t>(c)];
            mask |= std::uint64_t{1} << k;
            return mq.closes(mask, k, c);
        },
        [&](std::size_t k, int c) { masks[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << k); },
        [&](const Colors& c) {
            r.counterexample = OrderedColoring(s.m, s.t, c);
            return false;
        });
    r.stats = e.run();
    r.verdict = r.counterexample ? Verdict::Counterexample
                                 : (r.stats.complete ? Verdict::Holds : Verdict::Unresolved);
    return r;
}

VerifyResult merge_results(std::span<const VerifyResult> parts) {
    VerifyResult out;
    for (const auto& p : parts) {
        out.stats += p.stats;
        if (p.counterexample &&
            (!out.counterexample || std::ranges::lexicographical_compare(p.counterexample->colors(),
                                                                         out.counterexample->colors())))
            out.counterexample = p.counterexample;
    }
    if (out.counterexample)
        out.verdict = Verdict::Counterexample;
    else
        out.verdict = out.stats.complete ? Verdict::Holds : Verdict::Unresolved;
    return out;
}

VerifyResult verify_sharded(const SearchSpec& spec, const Query& query, int shards, int jobs) {
    require(shards >= 1, "shard count must be positive");
    jobs = std::clamp(jobs, 1, shards);
    std::vector<VerifyResult> parts(static_cast<std::size_t>(shards));
    auto run_shard = [&](int index) {
        SearchSpec s = spec;
        s.shard = {index, shards};
        parts[static_cast<std::size_t>(index)] = verify_query(s, query);
    };
    if (jobs == 1) {
        for (int i = 0; i < shards; ++i) run_shard(i);
    } else {
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (int i = w; i < shards; i += jobs) run_shard(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }
    return merge_results(parts);
}

bool has_target(const OrderedColoring& coloring, const Query& query) {
    require(coloring.t() <= query.t(), "coloring uses more colors than the query");
    if (coloring.m() <= kMaxSearchVertices) return MaskQuery(coloring.m(), query).holds(coloring.colors());
    for (int c = 0; c < coloring.t(); ++c)
        if (matchings::max_constrained_matching(coloring, query.constraint, c).size >=
            static_cast<std::size_t>(query.sizes[static_cast<std::size_t>(c)]))
            return true;
    return false;
}

OrderedColoring minimize_counterexample(const OrderedColoring& coloring, const Query& query) {
    require(!has_target(coloring, query), "not a counterexample");
    OrderedColoring best = coloring;
    const auto edges = all_edges(coloring.m());
    for (const auto& e : edges) {
        const Color current = best.color(e);
        for (Color c = 0; c < current; ++c) {
            best.set(e, c);
            if (!has_target(best, query)) break;
            best.set(e, current);
        }
    }
    Symmetry sym;
    sym.color_permutation = query.symmetric();
    return canonical_form(best, sym);
}

RamseyResult ramsey_number(const Query& query, int max_m, const RunOptions& options) {
    require(max_m >= 2, "max m must be at least 2");
    RamseyResult result;
    result.query = query;
    std::optional<OrderedColoring> last = OrderedColoring(1, query.t());
    for (int m = 2; m <= max_m; ++m) {
        SearchSpec spec;
        spec.m = m;
        spec.t = query.t();
        spec.symmetry = options.symmetry;
        spec.budget = options.budget;
        const VerifyResult r = verify_sharded(spec, query, options.shards, options.jobs);
        result.steps.push_back({m, r.verdict, r.stats});
        if (r.verdict == Verdict::Unresolved) return result;
        if (r.verdict == Verdict::Holds) {
            result.value = m;
            result.witness = std::move(last);
            return result;
        }
        last = minimize_counterexample(*r.counterexample, query);
    }
    return result;
}

ConjectureReport verify_conjecture(std::string_view name, std::vector<int> sizes, const RunOptions& options) {
    std::string family;
    if (name == "nonnested-CL" || name == "nonseparated-CL") {
        require(!sizes.empty() && std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>{}) == sizes.end(),
                std::string(name) + " takes equal sizes (t copies of n)");
        family = name == "nonnested-CL" ? "non-nested" : "non-separated";
    } else if (name == "asymmetric-nonnested") {
        family = "non-nested";
    } else {
        fail(ErrorKind::InvalidArgument, "unknown conjecture '" + std::string(name) + "'");
    }
    std::sort(sizes.begin(), sizes.end());
    ConjectureReport rep;
    rep.name = std::string(name);
    rep.query = make_query(family, sizes);
    rep.m = matchings::cockayne_lorimer_bound(rep.query.sizes);
    SearchSpec spec;
    spec.m = rep.m;
    spec.t = rep.query.t();
    spec.symmetry = options.symmetry;
    spec.budget = options.budget;
    rep.result = verify_sharded(spec, rep.query, options.shards, options.jobs);
    if (rep.result.counterexample)
        rep.result.counterexample = minimize_counterexample(*rep.result.counterexample, rep.query);
    return rep;
}

OrderedColoring random_coloring(int m, int t, std::uint64_t seed) {
    require(m >= 1 && t >= 1 && t <= 255, "needs m >= 1 and 1 <= t <= 255");
    std::mt19937_64 rng(seed);
    const std::uint64_t range = static_cast<std::uint64_t>(t);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::vector<std::uint8_t> colors(edge_count(m));
    for (auto& c : colors) {
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        c = static_cast<std::uint8_t>(x % range);
    }
    return OrderedColoring(m, t, std::move(colors));
}

}  // namespace ordram::search
