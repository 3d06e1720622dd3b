// Co-occurrence network construction, pruning, and cluster contraction.
#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semascore/graph.hpp"
#include "semascore/text.hpp"
#include "temp_files.hpp"

namespace {

using semascore::build_graph;
using semascore::ClusterSpec;
using semascore::WordGraph;

using Docs = std::vector<std::vector<std::string>>;

// Edge weights keyed by lexicographically ordered name pairs, so graphs can
// be compared independently of node-id assignment.
std::map<std::pair<std::string, std::string>, long long> edge_map(
    const WordGraph& g) {
  std::map<std::pair<std::string, std::string>, long long> out;
  for (const auto& e : g.sorted_edges()) {
    std::string a = g.name(e.a), b = g.name(e.b);
    if (b < a) std::swap(a, b);
    out[{a, b}] = e.weight;
  }
  return out;
}

long long weight_between(const WordGraph& g, const std::string& a,
                         const std::string& b) {
  auto va = g.find(a), vb = g.find(b);
  if (!va || !vb) return 0;
  return g.edge_weight(*va, *vb);
}

TEST(BuildGraph, RunningExampleSentence) {
  semascore::PreprocessConfig cfg;
  cfg.stopwords = {"are", "for", "to", "in"};
  auto tokens = semascore::preprocess(
      "Community energy initiatives are offering new opportunities for "
      "citizens to get actively involved in energy matters",
      cfg);
  ASSERT_EQ(tokens.size(), 12u);

  auto g = build_graph({tokens}, 3);
  EXPECT_EQ(g.node_count(), 11u);   // "energy" appears twice
  EXPECT_EQ(g.edge_count(), 30u);
  EXPECT_EQ(g.total_edge_weight(), 30);
  for (const auto& e : g.sorted_edges()) EXPECT_EQ(e.weight, 1);

  EXPECT_EQ(g.frequency(*g.find("energy")), 2);
  EXPECT_EQ(g.frequency(*g.find("community")), 1);
  EXPECT_EQ(g.frequency(*g.find("matters")), 1);

  // Both occurrences of "energy" contribute edges: the first links the
  // sentence opening, the second links the closing words.
  EXPECT_EQ(weight_between(g, "community", "energy"), 1);
  EXPECT_EQ(weight_between(g, "energy", "initiatives"), 1);
  EXPECT_EQ(weight_between(g, "energy", "new"), 1);
  EXPECT_EQ(weight_between(g, "get", "energy"), 1);
  EXPECT_EQ(weight_between(g, "actively", "energy"), 1);
  EXPECT_EQ(weight_between(g, "involved", "energy"), 1);
  EXPECT_EQ(weight_between(g, "energy", "matters"), 1);
  // Distance 4 in the token stream: outside the window.
  EXPECT_EQ(weight_between(g, "community", "new"), 0);
  EXPECT_EQ(weight_between(g, "opportunities", "involved"), 0);
}

TEST(BuildGraph, RepeatedTermAccumulatesWeight) {
  auto g = build_graph({{"a", "b", "a"}}, 2);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(weight_between(g, "a", "b"), 2);  // positions (0,1) and (1,2)
  EXPECT_EQ(g.frequency(*g.find("a")), 2);
}

TEST(BuildGraph, SameTermPairsSkipped) {
  auto g = build_graph({{"x", "x", "x"}}, 3);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.frequency(*g.find("x")), 3);
}

TEST(BuildGraph, SingleTokenDocument) {
  auto g = build_graph({{"solo"}}, 3);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.frequency(*g.find("solo")), 1);
}

TEST(BuildGraph, WindowOnePairsOnlyAdjacent) {
  auto g = build_graph({{"a", "b", "c"}}, 1);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(weight_between(g, "a", "b"), 1);
  EXPECT_EQ(weight_between(g, "b", "c"), 1);
  EXPECT_EQ(weight_between(g, "a", "c"), 0);
}

TEST(BuildGraph, WindowLargerThanDocument) {
  auto g = build_graph({{"a", "b", "c"}}, 50);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.total_edge_weight(), 3);
}

TEST(BuildGraph, NoPairsAcrossDocuments) {
  auto g = build_graph({{"a", "b"}, {"c", "d"}}, 5);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(weight_between(g, "a", "b"), 1);
  EXPECT_EQ(weight_between(g, "c", "d"), 1);
  EXPECT_EQ(weight_between(g, "b", "c"), 0);
}

TEST(BuildGraph, EmptyAndNoDocs) {
  auto g = build_graph({}, 3);
  EXPECT_EQ(g.node_count(), 0u);
  auto g2 = build_graph({{}, {}}, 3);
  EXPECT_EQ(g2.node_count(), 0u);
  EXPECT_EQ(g2.edge_count(), 0u);
}

TEST(BuildGraph, InvalidWindowRejected) {
  EXPECT_THROW(build_graph({{"a", "b"}}, 0), semascore::ValidationError);
  EXPECT_THROW(build_graph({{"a", "b"}}, -3), semascore::ValidationError);
}

TEST(BuildGraph, DocumentOrderDoesNotChangeWeights) {
  Docs docs = {{"a", "b", "c", "a"}, {"c", "d"}, {"b", "b", "e", "a"}};
  Docs reversed(docs.rbegin(), docs.rend());
  auto g1 = build_graph(docs, 2);
  auto g2 = build_graph(reversed, 2);
  EXPECT_EQ(edge_map(g1), edge_map(g2));
  for (const auto& name : {"a", "b", "c", "d", "e"})
    EXPECT_EQ(g1.frequency(*g1.find(name)), g2.frequency(*g2.find(name)));
}

TEST(BuildGraph, WeightConservationOnRandomInput) {
  std::mt19937 rng(7101);
  for (int round = 0; round < 40; ++round) {
    int window = std::uniform_int_distribution<int>(1, 10)(rng);
    auto docs = oracle::random_token_docs(rng, 5, 120, 12);
    auto g = build_graph(docs, window);
    EXPECT_EQ(g.total_edge_weight(), oracle::count_window_pairs(docs, window));
    long long freq_total = 0;
    for (WordGraph::NodeId v = 0; v < g.node_count(); ++v)
      freq_total += g.frequency(v);
    long long token_total = 0;
    for (const auto& d : docs) token_total += static_cast<long long>(d.size());
    EXPECT_EQ(freq_total, token_total);
  }
}

TEST(Adjacency, MirrorsEdgesSymmetricallySorted) {
  auto g = build_graph({{"a", "b", "c", "a"}}, 3);
  auto adj = semascore::make_adjacency(g);
  ASSERT_EQ(adj.offsets.size(), g.node_count() + 1);
  long long half_sum = 0;
  for (WordGraph::NodeId v = 0; v < g.node_count(); ++v) {
    for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
      if (k > adj.offsets[v]) EXPECT_LT(adj.targets[k - 1], adj.targets[k]);
      EXPECT_EQ(adj.weights[k], g.edge_weight(v, adj.targets[k]));
      half_sum += adj.weights[k];
    }
  }
  EXPECT_EQ(half_sum, 2 * g.total_edge_weight());
  EXPECT_EQ(adj.degree(*g.find("a")), 2u);  // neighbors b and c
}

TEST(FilterEdges, ThresholdOneIsIdentity) {
  auto g = build_graph({{"a", "b", "a", "c"}}, 2);
  auto f = semascore::filter_edges(g, 1);
  EXPECT_EQ(edge_map(f), edge_map(g));
  EXPECT_EQ(f.node_count(), g.node_count());
}

TEST(FilterEdges, DropsLightEdgesKeepsNodes) {
  // a-b has weight 2, b-c and a-c weight 1.
  auto g = build_graph({{"a", "b"}, {"a", "b", "c"}}, 2);
  ASSERT_EQ(weight_between(g, "a", "b"), 2);
  auto f = semascore::filter_edges(g, 2);
  EXPECT_EQ(f.edge_count(), 1u);
  EXPECT_EQ(weight_between(f, "a", "b"), 2);
  EXPECT_EQ(weight_between(f, "b", "c"), 0);
  // Isolated nodes survive with their frequencies intact.
  EXPECT_EQ(f.node_count(), 3u);
  EXPECT_EQ(f.frequency(*f.find("c")), 1);
}

TEST(FilterEdges, InvalidThresholdRejected) {
  auto g = build_graph({{"a", "b"}}, 1);
  EXPECT_THROW(semascore::filter_edges(g, 0), semascore::ValidationError);
}

TEST(MergeClusters, PathEndpointsCollapse) {
  auto g = build_graph({{"a", "b", "c"}}, 1);  // path a - b - c
  auto m = semascore::merge_clusters(g, {{"S", {"a", "c"}}});
  EXPECT_EQ(m.node_count(), 2u);
  EXPECT_EQ(m.edge_count(), 1u);
  EXPECT_EQ(weight_between(m, "S", "b"), 2);  // a-b and b-c fold together
  EXPECT_EQ(m.frequency(*m.find("S")), 2);
  EXPECT_FALSE(m.is_absent(*m.find("S")));
}

TEST(MergeClusters, IntraClusterEdgesVanish) {
  auto g = build_graph({{"a", "b", "c"}}, 2);  // triangle
  auto m = semascore::merge_clusters(g, {{"S", {"a", "b"}}});
  EXPECT_EQ(m.node_count(), 2u);
  EXPECT_EQ(weight_between(m, "S", "c"), 2);
  EXPECT_EQ(m.total_edge_weight(), 2);  // the a-b edge disappeared
}

TEST(MergeClusters, SingleTermClusterIsARename) {
  auto g = build_graph({{"a", "b", "c"}}, 1);
  auto m = semascore::merge_clusters(g, {{"R", {"b"}}});
  EXPECT_EQ(m.node_count(), 3u);
  EXPECT_EQ(weight_between(m, "a", "R"), 1);
  EXPECT_EQ(weight_between(m, "R", "c"), 1);
  EXPECT_EQ(m.frequency(*m.find("R")), 1);
  EXPECT_FALSE(m.find("b").has_value());
}

TEST(MergeClusters, AbsentClusterBecomesIsolatedFlaggedNode) {
  auto g = build_graph({{"a", "b"}}, 1);
  auto m = semascore::merge_clusters(g, {{"X", {"zzz", "qqq"}}});
  auto x = m.find("X");
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(m.is_absent(*x));
  EXPECT_EQ(m.frequency(*x), 0);
  auto adj = semascore::make_adjacency(m);
  EXPECT_EQ(adj.degree(*x), 0u);
}

TEST(MergeClusters, SimultaneousMergeOfSeveralClusters) {
  // a-b, b-c, c-d, d-a ring; contract {a,c} and {b,d}: every ring edge runs
  // between the two supernodes, none inside one.
  auto g = build_graph({{"a", "b", "c"}, {"c", "d", "a"}}, 1);
  auto m = semascore::merge_clusters(g, {{"P", {"a", "c"}}, {"Q", {"b", "d"}}});
  EXPECT_EQ(m.node_count(), 2u);
  EXPECT_EQ(weight_between(m, "P", "Q"), 4);
  EXPECT_EQ(m.frequency(*m.find("P")), 4);  // a twice, c twice
  EXPECT_EQ(m.frequency(*m.find("Q")), 2);  // b once, d once
}

TEST(MergeClusters, WeightAndFrequencyConservation) {
  std::mt19937 rng(5150);
  auto docs = oracle::random_token_docs(rng, 8, 60, 10);
  auto g = build_graph(docs, 3);
  std::vector<ClusterSpec> clusters = {{"C1", {"t0", "t1", "t2"}},
                                       {"C2", {"t3", "t4"}}};
  auto m = semascore::merge_clusters(g, clusters);

  long long intra = 0;
  auto in_c1 = [](const std::string& s) {
    return s == "t0" || s == "t1" || s == "t2";
  };
  auto in_c2 = [](const std::string& s) { return s == "t3" || s == "t4"; };
  for (const auto& e : g.sorted_edges()) {
    const std::string &a = g.name(e.a), &b = g.name(e.b);
    if ((in_c1(a) && in_c1(b)) || (in_c2(a) && in_c2(b))) intra += e.weight;
  }
  EXPECT_EQ(m.total_edge_weight(), g.total_edge_weight() - intra);

  long long before = 0, after = 0;
  for (WordGraph::NodeId v = 0; v < g.node_count(); ++v)
    before += g.frequency(v);
  for (WordGraph::NodeId v = 0; v < m.node_count(); ++v)
    after += m.frequency(v);
  EXPECT_EQ(before, after);
}

TEST(MergeClusters, NonMemberOrderPreservedSupernodesLast) {
  auto g = build_graph({{"x", "y", "z", "w"}}, 1);
  auto m = semascore::merge_clusters(g, {{"C", {"y"}}});
  ASSERT_EQ(m.node_count(), 4u);
  EXPECT_EQ(m.name(0), "x");
  EXPECT_EQ(m.name(1), "z");
  EXPECT_EQ(m.name(2), "w");
  EXPECT_EQ(m.name(3), "C");
}

TEST(MergeClusters, ClusterNameCollidingWithSurvivingTermRejected) {
  auto g = build_graph({{"brand", "other"}}, 1);
  EXPECT_THROW(semascore::merge_clusters(g, {{"brand", {"something"}}}),
               semascore::ValidationError);
  // Naming the cluster after one of its own members is fine: the term is
  // contracted away, so nothing collides.
  auto m = semascore::merge_clusters(g, {{"brand", {"brand"}}});
  EXPECT_EQ(m.node_count(), 2u);
}

TEST(ValidateClusters, CollectsAllProblems) {
  using semascore::validate_clusters;
  EXPECT_THROW(validate_clusters({}), semascore::ValidationError);
  EXPECT_THROW(validate_clusters({{"", {"a"}}}), semascore::ValidationError);
  EXPECT_THROW(validate_clusters({{"A", {"a"}}, {"A", {"b"}}}),
               semascore::ValidationError);
  EXPECT_THROW(validate_clusters({{"A", {}}}), semascore::ValidationError);
  EXPECT_THROW(validate_clusters({{"A", {"x"}}, {"B", {"x"}}}),
               semascore::ValidationError);
  EXPECT_NO_THROW(validate_clusters({{"A", {"a"}}, {"B", {"b"}}}));
  try {
    validate_clusters({{"", {}}, {"B", {"x"}}, {"C", {"x"}}});
    FAIL() << "expected ValidationError";
  } catch (const semascore::ValidationError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("empty name"), std::string::npos);
    EXPECT_NE(msg.find("no terms"), std::string::npos);
    EXPECT_NE(msg.find("disjoint"), std::string::npos);
  }
}

TEST(LoadClusters, FileOrderAndNormalization) {
  testing_support::TempDir dir;
  auto path = dir.write("clusters.json",
                        R"({
    "zeta": ["Gamma", "DELTA", "gamma"],
    "alpha": ["smart_grid"]
  })");
  auto clusters = semascore::load_clusters(path);
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[0].name, "zeta");  // file order, not alphabetical
  EXPECT_EQ(clusters[0].terms,
            (std::vector<std::string>{"gamma", "delta"}));  // deduped
  EXPECT_EQ(clusters[1].terms, (std::vector<std::string>{"smart_grid"}));
}

TEST(LoadClusters, MultiTokenTermRejectedWithHint) {
  testing_support::TempDir dir;
  auto path = dir.write("bad.json", R"({"a": ["smart grid"]})");
  try {
    semascore::load_clusters(path);
    FAIL() << "expected ValidationError";
  } catch (const semascore::ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("underscores"), std::string::npos);
  }
}

TEST(LoadClusters, StructuralErrors) {
  testing_support::TempDir dir;
  EXPECT_THROW(semascore::load_clusters(dir.file("missing.json")),
               semascore::IoError);
  EXPECT_THROW(semascore::load_clusters(dir.write("l.json", "[1,2]")),
               semascore::ParseError);
  EXPECT_THROW(semascore::load_clusters(dir.write("j.json", "{broken")),
               semascore::ParseError);
  EXPECT_THROW(
      semascore::load_clusters(dir.write("na.json", R"({"a": "not-array"})")),
      semascore::ValidationError);
  EXPECT_THROW(
      semascore::load_clusters(dir.write("ns.json", R"({"a": [1, 2]})")),
      semascore::ValidationError);
  EXPECT_THROW(semascore::load_clusters(
                   dir.write("ov.json", R"({"a": ["x"], "b": ["x"]})")),
               semascore::ValidationError);
}

}  // namespace
