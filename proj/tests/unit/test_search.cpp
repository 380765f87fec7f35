#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ordram/matchings.hpp"
#include "ordram/search.hpp"

using namespace ordram;
using namespace ordram::search;

namespace {

SearchSpec spec_for(int m, int t, bool perm, bool rev) {
    SearchSpec s;
    s.m = m;
    s.t = t;
    s.symmetry = {perm, rev};
    return s;
}

std::vector<std::vector<std::uint8_t>> visit_all(const SearchSpec& s) {
    std::vector<std::vector<std::uint8_t>> out;
    enumerate_colorings(s, [&](const OrderedColoring& c) { out.emplace_back(c.colors().begin(), c.colors().end()); });
    return out;
}

bool naive_has(const OrderedColoring& c, const Query& q) {
    for (int col = 0; col < c.t(); ++col)
        if (oracle::max_matching(c, q.constraint, col) >= q.sizes[static_cast<std::size_t>(col)]) return true;
    return false;
}

}  // namespace

TEST(Enumerate, Counts) {
    EXPECT_EQ(visit_all(spec_for(3, 2, false, false)).size(), 8u);
    EXPECT_EQ(visit_all(spec_for(3, 2, true, false)).size(), 4u);
    EXPECT_EQ(visit_all(spec_for(1, 2, true, true)).size(), 1u);
}

TEST(Enumerate, OrbitCountsMatchBurnside) {
    for (int m = 2; m <= 5; ++m)
        for (int t = 1; t <= 3; ++t) {
            if (m == 5 && t == 3) continue;
            for (bool perm : {false, true})
                for (bool rev : {false, true}) {
                    const Symmetry sym{perm, rev};
                    const auto reps = visit_all(spec_for(m, t, perm, rev));
                    // Each orbit contributes orbit_size colorings to the full space.
                    std::uint64_t covered = 0;
                    for (const auto& r : reps) {
                        const OrderedColoring c(m, t, r);
                        EXPECT_EQ(canonical_form(c, sym), c);
                        covered += orbit_size(c, sym);
                    }
                    EXPECT_EQ(covered, oracle::power(t, m * (m - 1) / 2)) << m << ' ' << t;
                    // Direct orbit count: distinct canonical forms over the full space.
                    std::set<std::vector<std::uint8_t>> forms;
                    for (std::uint64_t code = 0; code < oracle::power(t, m * (m - 1) / 2); ++code) {
                        const auto cf = canonical_form(oracle::coloring_from_code(m, t, code), sym);
                        forms.emplace(cf.colors().begin(), cf.colors().end());
                    }
                    EXPECT_EQ(forms.size(), reps.size());
                }
        }
}

TEST(Enumerate, ShardsPartitionTheSpace) {
    for (int m : {4, 5, 6}) {
        auto base = spec_for(m, 2, true, true);
        const auto whole = visit_all(base);
        std::multiset<std::vector<std::uint8_t>> merged;
        for (int i = 0; i < 4; ++i) {
            base.shard = {i, 4};
            for (auto& v : visit_all(base)) merged.insert(v);
        }
        EXPECT_EQ(merged, std::multiset<std::vector<std::uint8_t>>(whole.begin(), whole.end()));
    }
}

TEST(Enumerate, Budget) {
    auto s = spec_for(6, 2, false, false);
    s.budget = 100;
    const auto stats = enumerate_colorings(s, [](const OrderedColoring&) {});
    EXPECT_FALSE(stats.complete);
    EXPECT_LE(stats.nodes, 100u);
}

TEST(Verify, SmallThresholds) {
    const auto q = make_query("non-nested", 2, 2);
    EXPECT_EQ(verify_query(spec_for(5, 2, true, true), q).verdict, Verdict::Holds);
    const auto four = verify_query(spec_for(4, 2, true, true), q);
    ASSERT_EQ(four.verdict, Verdict::Counterexample);
    EXPECT_FALSE(has_target(*four.counterexample, q));
    const auto generic = verify_all(spec_for(4, 2, true, true), [&](const OrderedColoring& c) { return has_target(c, q); });
    ASSERT_EQ(generic.verdict, Verdict::Counterexample);
    EXPECT_EQ(*generic.counterexample, *four.counterexample);
}

TEST(Verify, ThreeColorNonSeparated) {
    const auto q = make_query("non-separated", 3, 2);
    EXPECT_EQ(verify_query(spec_for(6, 3, true, true), q).verdict, Verdict::Holds);
}

TEST(Verify, ShardAndJobIndependence) {
    for (const char* fam : {"non-nested", "crossing", "separated"}) {
        const auto q = make_query(fam, 2, 2);
        for (int m = 4; m <= 6; ++m) {
            const auto one = verify_sharded(spec_for(m, 2, true, true), q, 1, 1);
            const auto four = verify_sharded(spec_for(m, 2, true, true), q, 4, 1);
            const auto threads = verify_sharded(spec_for(m, 2, true, true), q, 4, 3);
            EXPECT_EQ(one.verdict, four.verdict);
            EXPECT_EQ(one.counterexample, four.counterexample);
            EXPECT_EQ(one.counterexample, threads.counterexample);
        }
    }
}

TEST(Verify, FastPathAgreesWithOracles) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 3 + static_cast<int>(rng() % 6);
        const int t = 2 + static_cast<int>(rng() % 2);
        const int n = 2 + static_cast<int>(rng() % 2);
        const char* fams[] = {"non-nested", "non-crossing", "non-separated", "crossing", "nested", "separated"};
        const auto q = make_query(fams[rng() % 6], t, n);
        const auto c = oracle::coloring_from_code(m, t, rng());
        ASSERT_EQ(has_target(c, q), naive_has(c, q));
    }
}

TEST(Verify, SymmetrySoundness) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const auto q = make_query("non-nested", 3, 2);
        const auto c = random_coloring(6, 3, rng());
        const bool base = has_target(c, q);
        EXPECT_EQ(has_target(reverse(c), q), base);
        EXPECT_EQ(has_target(swap_colors(c, 0, 2), q), base);
    }
}

TEST(Ramsey, SmallValues) {
    EXPECT_EQ(ramsey_number(make_query("crossing", 2, 2), 8).value, 5);
    EXPECT_EQ(ramsey_number(make_query("nested", 2, 2), 8).value, 6);
    EXPECT_EQ(ramsey_number(make_query("separated", 2, 2), 8).value, 6);
    const auto r = ramsey_number(make_query("non-nested", std::vector<int>{2, 2}), 8);
    ASSERT_EQ(r.value, 5);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->m(), 4);
    EXPECT_FALSE(has_target(*r.witness, r.query));
    const auto asym = ramsey_number(make_query("non-nested", std::vector<int>{2, 3}), 8);
    ASSERT_EQ(asym.value, 7);
    EXPECT_FALSE(has_target(*asym.witness, asym.query));
}

TEST(Ramsey, Unresolved) {
    RunOptions opts;
    opts.budget = 10;
    const auto r = ramsey_number(make_query("non-nested", 2, 3), 8, opts);
    EXPECT_FALSE(r.value);
    ASSERT_FALSE(r.steps.empty());
    EXPECT_EQ(r.steps.back().verdict, Verdict::Unresolved);
    EXPECT_FALSE(ramsey_number(make_query("non-nested", 2, 3), 5).value);
}

TEST(Conjecture, SmallInstances) {
    const auto a = verify_conjecture("nonnested-CL", {2, 2});
    EXPECT_EQ(a.m, 5);
    EXPECT_EQ(a.result.verdict, Verdict::Holds);
    const auto b = verify_conjecture("nonseparated-CL", {2, 2});
    EXPECT_EQ(b.result.verdict, Verdict::Holds);
    const auto c = verify_conjecture("asymmetric-nonnested", {3, 2});
    EXPECT_EQ(c.m, 7);
    EXPECT_EQ(c.result.verdict, Verdict::Holds);
    EXPECT_THROW(verify_conjecture("nonnested-CL", {2, 3}), Error);
    EXPECT_THROW(verify_conjecture("goldbach", {2}), Error);
}

TEST(Minimize, StaysCounterexample) {
    const auto q = make_query("non-nested", 2, 2);
    const auto c = matchings::construct_rstar2_lb(2);
    const auto mn = minimize_counterexample(c, q);
    EXPECT_FALSE(has_target(mn, q));
    EXPECT_EQ(mn.m(), 4);
}

TEST(Random, Determinism) {
    EXPECT_EQ(random_coloring(5, 2, 42), random_coloring(5, 2, 42));
    EXPECT_NE(random_coloring(9, 2, 42), random_coloring(9, 2, 43));
    EXPECT_EQ(random_coloring(2, 1, 7).color(1, 2), 0);
}

TEST(Random, Uniformity) {
    std::map<int, std::uint64_t> freq;
    std::uint64_t total = 0;
    for (std::uint64_t seed = 0; total < 100000; ++seed) {
        const auto c = random_coloring(20, 3, seed);
        for (auto x : c.colors()) ++freq[x];
        total += c.size();
    }
    const double p = 1.0 / 3;
    const double sigma = std::sqrt(static_cast<double>(total) * p * (1 - p));
    for (int col = 0; col < 3; ++col)
        EXPECT_LT(std::abs(static_cast<double>(freq[col]) - static_cast<double>(total) * p), 3 * sigma);
}
