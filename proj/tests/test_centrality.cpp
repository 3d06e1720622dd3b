// Distinctiveness and shortest-path betweenness on weighted word graphs.
#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semascore/centrality.hpp"
#include "semascore/graph.hpp"

namespace {

using semascore::WordGraph;

// Builds a graph from (name, name, weight) triples; isolated extras can be
// added up front so node ids stay predictable.
WordGraph graph_of(std::initializer_list<std::string> isolated,
                   std::initializer_list<std::tuple<std::string, std::string,
                                                    long long>> edges) {
  WordGraph g;
  for (const auto& n : isolated) g.add_node(n);
  for (const auto& [a, b, w] : edges)
    g.add_edge(g.add_node(a), g.add_node(b), w);
  return g;
}

TEST(Distinctiveness, StarCenterAndLeaves) {
  auto g = graph_of({}, {{"c", "l1", 1}, {"c", "l2", 1}, {"c", "l3", 1}});
  EXPECT_NEAR(semascore::distinctiveness(g, "c"), 3.0 * std::log10(3.0),
              1e-12);
  EXPECT_NEAR(semascore::distinctiveness(g, "l1"), 0.0, 1e-12);
}

TEST(Distinctiveness, BiggerStar) {
  auto g = graph_of({}, {{"c", "l1", 1},
                         {"c", "l2", 1},
                         {"c", "l3", 1},
                         {"c", "l4", 1}});
  EXPECT_NEAR(semascore::distinctiveness(g, "c"), 4.0 * std::log10(4.0),
              1e-12);
}

TEST(Distinctiveness, CliqueScoresZero) {
  auto g = graph_of({}, {{"a", "b", 1},
                         {"a", "c", 1},
                         {"a", "d", 1},
                         {"b", "c", 1},
                         {"b", "d", 1},
                         {"c", "d", 1}});
  for (const auto* name : {"a", "b", "c", "d"})
    EXPECT_NEAR(semascore::distinctiveness(g, name), 0.0, 1e-12);
}

TEST(Distinctiveness, EdgeWeightsMultiply) {
  auto g = graph_of({}, {{"c", "l1", 1}, {"c", "l2", 2}, {"c", "l3", 3}});
  EXPECT_NEAR(semascore::distinctiveness(g, "c"), 6.0 * std::log10(3.0),
              1e-12);
  EXPECT_NEAR(semascore::distinctiveness(g, "l3"), 0.0, 1e-12);
}

TEST(Distinctiveness, IsolatedNodesCountTowardTotal) {
  // Same star, but one isolated bystander raises n from 4 to 5, so each
  // leaf's degree-1 neighbors become rarer and the center's score grows.
  auto g = graph_of({"z"}, {{"c", "l1", 1}, {"c", "l2", 1}, {"c", "l3", 1}});
  EXPECT_NEAR(semascore::distinctiveness(g, "c"), 3.0 * std::log10(4.0),
              1e-12);
  EXPECT_NEAR(semascore::distinctiveness(g, "z"), 0.0, 1e-12);
}

TEST(Distinctiveness, UnknownTermThrows) {
  auto g = graph_of({}, {{"a", "b", 1}});
  EXPECT_THROW(semascore::distinctiveness(g, "nope"), semascore::LookupError);
}

TEST(SameLength, ToleranceAndInfinities) {
  using semascore::detail::same_length;
  EXPECT_TRUE(same_length(1.0, 1.0));
  EXPECT_TRUE(same_length(1.0, 1.0 + 5e-13));
  EXPECT_FALSE(same_length(1.0, 1.0 + 5e-12));
  EXPECT_TRUE(same_length(0.0, 0.0));
  constexpr double inf = std::numeric_limits<double>::infinity();
  EXPECT_FALSE(same_length(inf, inf));
  EXPECT_FALSE(same_length(1.0, inf));
}

TEST(Betweenness, PathMiddleNode) {
  auto g = graph_of({}, {{"a", "b", 1}, {"b", "c", 1}});
  EXPECT_NEAR(semascore::weighted_betweenness(g, "b"), 1.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "a"), 0.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "c"), 0.0, 1e-12);
}

TEST(Betweenness, LongerPath) {
  auto g = graph_of({}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}});
  EXPECT_NEAR(semascore::weighted_betweenness(g, "b"), 2.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "c"), 2.0, 1e-12);
}

TEST(Betweenness, StarCenterCarriesAllLeafPairs) {
  auto g = graph_of({}, {{"c", "l1", 1},
                         {"c", "l2", 2},
                         {"c", "l3", 3},
                         {"c", "l4", 1}});
  // Spoke weights are irrelevant here: every leaf pair has exactly one
  // path, through the center.
  EXPECT_NEAR(semascore::weighted_betweenness(g, "c"), 6.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "l2"), 0.0, 1e-12);
}

TEST(Betweenness, CliqueScoresZero) {
  auto g = graph_of({}, {{"a", "b", 1},
                         {"a", "c", 1},
                         {"b", "c", 1}});
  for (const auto* name : {"a", "b", "c"})
    EXPECT_NEAR(semascore::weighted_betweenness(g, name), 0.0, 1e-12);
}

TEST(Betweenness, TiedPathsSplitCredit) {
  // Square a-b-d-c-a: the two a..d geodesics pass through b and c, and the
  // two b..c geodesics pass through a and d. Everyone ends up with 1/2.
  auto g = graph_of({}, {{"a", "b", 1},
                         {"a", "c", 1},
                         {"b", "d", 1},
                         {"c", "d", 1}});
  for (const auto* name : {"a", "b", "c", "d"})
    EXPECT_NEAR(semascore::weighted_betweenness(g, name), 0.5, 1e-12);
}

TEST(Betweenness, ParallelTwoHopRoutes) {
  // Three internally disjoint s..t routes of two hops each.
  auto g = graph_of({}, {{"s", "x1", 1},
                         {"x1", "t", 1},
                         {"s", "x2", 1},
                         {"x2", "t", 1},
                         {"s", "x3", 1},
                         {"x3", "t", 1}});
  EXPECT_NEAR(semascore::weighted_betweenness(g, "x1"), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "x2"), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "s"), 1.5, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "t"), 1.5, 1e-12);
}

TEST(Betweenness, HeavyEdgesAreShortcuts) {
  // Edge length is 1/weight: the two heavy edges through b (total length
  // 2/3) beat the direct light edge (length 1), so b carries the a..c pair.
  auto g = graph_of({}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 1}});
  EXPECT_NEAR(semascore::weighted_betweenness(g, "b"), 1.0, 1e-12);
  // Flip the balance: now the direct edge wins and b carries nothing.
  auto g2 = graph_of({}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 3}});
  EXPECT_NEAR(semascore::weighted_betweenness(g2, "b"), 0.0, 1e-12);
}

TEST(Betweenness, DisconnectedPairsContributeNothing) {
  auto g = graph_of({"d"}, {{"a", "b", 1}, {"b", "c", 1}});
  EXPECT_NEAR(semascore::weighted_betweenness(g, "b"), 1.0, 1e-12);
  EXPECT_NEAR(semascore::weighted_betweenness(g, "d"), 0.0, 1e-12);
}

TEST(Betweenness, UnknownTermThrows) {
  auto g = graph_of({}, {{"a", "b", 1}});
  EXPECT_THROW(semascore::weighted_betweenness(g, "nope"),
               semascore::LookupError);
}

TEST(Betweenness, EmptyTargetListGivesEmptyResult) {
  auto g = graph_of({}, {{"a", "b", 1}});
  auto adj = semascore::make_adjacency(g);
  EXPECT_TRUE(semascore::betweenness_scores(adj, g.node_count(), {}).empty());
}

TEST(Betweenness, TargetSubsetMatchesFullComputation) {
  std::mt19937 rng(424242);
  auto tg = oracle::random_connected_graph(rng, 6, 10);
  auto g = oracle::to_word_graph(tg);
  auto all = semascore::betweenness_all(g);
  auto adj = semascore::make_adjacency(g);
  std::vector<WordGraph::NodeId> targets = {2, 0, 4};
  auto some = semascore::betweenness_scores(adj, g.node_count(), targets);
  ASSERT_EQ(some.size(), 3u);
  EXPECT_EQ(some[0], all[2]);
  EXPECT_EQ(some[1], all[0]);
  EXPECT_EQ(some[2], all[4]);
}

TEST(Betweenness, MatchesPathEnumerationOnRandomGraphs) {
  std::mt19937 rng(90210);
  for (int round = 0; round < 25; ++round) {
    auto tg = oracle::random_connected_graph(rng, 4, 12);
    auto expected = oracle::betweenness_by_enumeration(tg);
    auto g = oracle::to_word_graph(tg);
    auto actual = semascore::betweenness_all(g);
    ASSERT_EQ(actual.size(), expected.per_node.size());
    for (std::size_t v = 0; v < actual.size(); ++v)
      EXPECT_NEAR(actual[v], expected.per_node[v], 1e-9)
          << "node " << v << " in round " << round;
    // Independent identity: the scores of all nodes sum to the total of
    // per-pair average interior-node counts.
    double total = 0.0;
    for (double b : actual) total += b;
    EXPECT_NEAR(total, expected.sum_avg_interior, 1e-9) << "round " << round;
  }
}

TEST(Betweenness, ParallelRunIsBitIdentical) {
  std::mt19937 rng(31337);
  for (int round = 0; round < 5; ++round) {
    auto tg = oracle::random_connected_graph(rng, 8, 14);
    auto g = oracle::to_word_graph(tg);
    auto seq = semascore::betweenness_all(g, 1);
    auto par = semascore::betweenness_all(g, 4);
    ASSERT_EQ(seq.size(), par.size());
    EXPECT_EQ(std::memcmp(seq.data(), par.data(), seq.size() * sizeof(double)),
              0)
        << "round " << round;
  }
}

TEST(Betweenness, UniformWeightScalingDoesNotChangeScores) {
  std::mt19937 rng(8086);
  auto tg = oracle::random_connected_graph(rng, 5, 9);
  auto scaled = tg;
  for (auto& [a, b, w] : scaled.edges) w *= 7;
  auto base = semascore::betweenness_all(oracle::to_word_graph(tg));
  auto times7 = semascore::betweenness_all(oracle::to_word_graph(scaled));
  ASSERT_EQ(base.size(), times7.size());
  for (std::size_t v = 0; v < base.size(); ++v)
    EXPECT_NEAR(base[v], times7[v], 1e-12);
}

}  // namespace
