#include "lateops/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include <gtest/gtest.h>

#include "lateops/generators.hpp"

using namespace lateops;

namespace {

GraphSnapshot snap(int n, std::vector<Edge> edges) {
    LabeledGraph g{n, std::move(edges)};
    return build_snapshot(vertex_sequence(g));
}

GraphSnapshot cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1});
    return snap(n, std::move(es));
}

GraphSnapshot path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
    return snap(n, std::move(es));
}

GraphSnapshot star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i, 1});
    return snap(leaves + 1, std::move(es));
}

GraphSnapshot petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) es.push_back({i, (i + 1) % 5, 1});         // outer cycle
    for (int i = 0; i < 5; ++i) es.push_back({i, i + 5, 1});               // spokes
    for (int i = 0; i < 5; ++i) es.push_back({5 + i, 5 + (i + 2) % 5, 1}); // inner pentagram
    return snap(10, std::move(es));
}

GraphSnapshot random_graph(int n, double p, DetRng& rng) {
    return snap(n, gen_gnp(n, p, rng).edges);
}

}  // namespace

TEST(IndependentSetOracle, FrozenValues) {
    EXPECT_EQ(opt_independent_set(cycle(5)).value, 2);
    EXPECT_EQ(opt_independent_set(path(7)).value, 4);
    EXPECT_EQ(opt_independent_set(star(4)).value, 4);
    EXPECT_EQ(opt_independent_set(petersen()).value, 4);
    EXPECT_EQ(opt_independent_set(snap(3, {})).value, 3);  // no edges: take everything
}

TEST(IndependentSetOracle, WitnessIsSortedFeasibleAndSized) {
    for (const GraphSnapshot& g : {cycle(5), path(7), petersen()}) {
        const OracleResult res = opt_independent_set(g);
        EXPECT_TRUE(std::is_sorted(res.witness.begin(), res.witness.end()));
        EXPECT_TRUE(is_independent_set(g, res.witness));
        EXPECT_EQ(static_cast<long long>(res.witness.size()), res.value);
        EXPECT_GT(res.nodes_explored, 0u);
    }
}

TEST(IndependentSetOracle, BranchAndBoundMatchesEnumeration) {
    DetRng rng(11);
    for (int it = 0; it < 300; ++it) {
        const int n = 1 + static_cast<int>(rng.bounded(12));
        const GraphSnapshot g = random_graph(n, rng.unit(), rng);
        const OracleResult fast = opt_independent_set(g);
        const OracleResult slow = opt_independent_set_enum(g);
        ASSERT_EQ(fast.value, slow.value) << "n=" << n;
        EXPECT_TRUE(is_independent_set(g, slow.witness));
    }
}

TEST(IndependentSetOracle, CapEnforced) {
    OracleCaps caps;
    caps.max_is_vertices = 5;
    EXPECT_THROW(opt_independent_set(path(6), caps), OracleCapExceeded);
    EXPECT_EQ(opt_independent_set(path(5), caps).value, 3);
}

TEST(MatchingOracle, FrozenValues) {
    EXPECT_EQ(opt_matching(cycle(5)).value, 2);
    EXPECT_EQ(opt_matching(path(7)).value, 3);
    EXPECT_EQ(opt_matching(star(4)).value, 1);
    EXPECT_EQ(opt_matching(petersen()).value, 5);  // perfect matching
}

TEST(MatchingOracle, WitnessChecksOut) {
    const GraphSnapshot g = petersen();
    const OracleResult res = opt_matching(g);
    EXPECT_TRUE(std::is_sorted(res.witness.begin(), res.witness.end()));
    EXPECT_TRUE(is_matching(g, res.witness));
    EXPECT_EQ(static_cast<long long>(res.witness.size()), res.value);
}

TEST(MatchingOracle, CapEnforced) {
    OracleCaps caps;
    caps.max_matching_edges = 3;
    EXPECT_THROW(opt_matching(cycle(5), caps), OracleCapExceeded);
    EXPECT_EQ(opt_matching(cycle(3), caps).value, 1);
}

TEST(VertexCoverOracle, FrozenValuesAndDuality) {
    EXPECT_EQ(opt_vertex_cover(cycle(5)).value, 3);
    EXPECT_EQ(opt_vertex_cover(path(7)).value, 3);
    EXPECT_EQ(opt_vertex_cover(star(4)).value, 1);
    EXPECT_EQ(opt_vertex_cover(petersen()).value, 6);
    DetRng rng(23);
    for (int it = 0; it < 100; ++it) {
        const int n = 1 + static_cast<int>(rng.bounded(12));
        const GraphSnapshot g = random_graph(n, rng.unit(), rng);
        const OracleResult vc = opt_vertex_cover(g);
        const OracleResult is = opt_independent_set(g);
        EXPECT_EQ(vc.value + is.value, n);
        EXPECT_TRUE(is_vertex_cover(g, vc.witness));
    }
}

TEST(SpanningForestOracle, WeightedFrozenValue) {
    // square with a light diagonal: MST keeps the diagonal, drops the 9
    GraphSnapshot g;
    g.apply(ArrivalEvent::edge_arrival(0, 1, 4));
    g.apply(ArrivalEvent::edge_arrival(1, 2, 9));
    g.apply(ArrivalEvent::edge_arrival(2, 3, 3));
    g.apply(ArrivalEvent::edge_arrival(0, 3, 7));
    g.apply(ArrivalEvent::edge_arrival(0, 2, 1));
    const OracleResult res = opt_spanning_forest(g);
    EXPECT_EQ(res.value, 8);  // 1 + 3 + 4
    EXPECT_EQ(res.witness, (std::vector<int>{0, 2, 4}));
    EXPECT_TRUE(is_spanning_forest(g, res.witness));
}

TEST(SpanningForestOracle, SpansEveryComponent) {
    const GraphSnapshot g = snap(6, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});  // vertex 5 isolated
    const OracleResult res = opt_spanning_forest(g);
    EXPECT_EQ(res.witness.size(), 3u);
    EXPECT_TRUE(is_spanning_forest(g, res.witness));
    EXPECT_FALSE(is_spanning_forest(g, {}));                   // misses components
    EXPECT_FALSE(is_spanning_forest(cycle(3), {0, 1, 2}));     // cycle
    EXPECT_TRUE(is_spanning_forest(cycle(3), {0, 1}));
}

TEST(SpanningForestOracle, WeightTiesBreakByArrivalId) {
    GraphSnapshot g;
    g.apply(ArrivalEvent::edge_arrival(0, 1, 5));
    g.apply(ArrivalEvent::edge_arrival(1, 2, 5));
    g.apply(ArrivalEvent::edge_arrival(0, 2, 5));
    EXPECT_EQ(opt_spanning_forest(g).witness, (std::vector<int>{0, 1}));
}

TEST(ForestIndependentSetOracle, MatchesGeneralOracleOnRandomTrees) {
    DetRng rng(31);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng.bounded(40));
        std::vector<Edge> es;
        for (int v = 1; v < n; ++v)
            es.push_back({static_cast<int>(rng.bounded(static_cast<std::uint64_t>(v))), v, 1});
        const GraphSnapshot g = snap(n, std::move(es));
        const OracleResult fast = max_is_forest(g);
        OracleCaps caps;
        caps.max_is_vertices = 64;
        EXPECT_EQ(fast.value, opt_independent_set(g, caps).value) << "n=" << n;
        EXPECT_TRUE(is_independent_set(g, fast.witness));
        EXPECT_EQ(static_cast<long long>(fast.witness.size()), fast.value);
    }
}

TEST(ForestIndependentSetOracle, HandlesForestsAndRejectsCycles) {
    const GraphSnapshot g = snap(5, {{0, 1, 1}, {2, 3, 1}});  // forest with an isolated vertex
    EXPECT_EQ(max_is_forest(g).value, 3);
    EXPECT_THROW(max_is_forest(cycle(3)), std::invalid_argument);
}

TEST(FeasibilityPredicates, RejectOutOfRangeAndConflicts) {
    const GraphSnapshot g = path(4);
    EXPECT_TRUE(is_independent_set(g, {0, 2}));
    EXPECT_FALSE(is_independent_set(g, {0, 1}));
    EXPECT_FALSE(is_independent_set(g, {0, 0}));
    EXPECT_FALSE(is_independent_set(g, {-1}));
    EXPECT_FALSE(is_independent_set(g, {4}));
    EXPECT_TRUE(is_matching(g, {0, 2}));
    EXPECT_FALSE(is_matching(g, {0, 1}));  // share vertex 1
    EXPECT_FALSE(is_matching(g, {9}));
    EXPECT_TRUE(is_vertex_cover(g, {1, 2}));
    EXPECT_FALSE(is_vertex_cover(g, {0, 3}));
    EXPECT_FALSE(is_vertex_cover(g, {7}));
}

TEST(OracleCaps, EnvOverride) {
    ASSERT_EQ(setenv("LATEOPS_CAP", "12", 1), 0);
    const OracleCaps caps = OracleCaps::from_env();
    EXPECT_EQ(caps.max_is_vertices, 12);
    EXPECT_EQ(caps.max_matching_edges, 12);
    ASSERT_EQ(setenv("LATEOPS_CAP", "0", 1), 0);
    EXPECT_THROW(OracleCaps::from_env(), std::invalid_argument);
    ASSERT_EQ(setenv("LATEOPS_CAP", "abc", 1), 0);
    EXPECT_THROW(OracleCaps::from_env(), std::invalid_argument);
    ASSERT_EQ(unsetenv("LATEOPS_CAP"), 0);
    EXPECT_EQ(OracleCaps::from_env().max_is_vertices, 30);
}
