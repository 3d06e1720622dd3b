// Undirected weighted word co-occurrence network and cluster contraction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "semascore/error.hpp"
#include "semascore/text.hpp"

namespace semascore {

// Undirected weighted graph over interned term names. Node ids are dense
// and assigned in first-seen order, which keeps every downstream artifact
// (exports, centrality batches) deterministic for a given input order.
class WordGraph {
 public:
  using NodeId = std::uint32_t;

  // Returns the id for `name`, creating the node (frequency 0) if new.
  NodeId add_node(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(names_.size());
    index_.emplace(name, id);
    names_.push_back(name);
    freq_.push_back(0);
    absent_.push_back(false);
    return id;
  }

  std::optional<NodeId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add_frequency(NodeId v, long long count) { freq_.at(v) += count; }

  // Accumulates weight on the unordered edge {a, b}.
  void add_edge(NodeId a, NodeId b, long long weight) {
    if (a == b)
      throw Error("internal: self-loop on node '" + names_.at(a) + "'");
    if (weight <= 0) throw Error("internal: non-positive edge weight");
    edges_[edge_key(a, b)] += weight;
  }

  void mark_absent(NodeId v) { absent_.at(v) = true; }

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name(NodeId v) const { return names_.at(v); }
  long long frequency(NodeId v) const { return freq_.at(v); }
  bool is_absent(NodeId v) const { return absent_.at(v); }

  long long edge_weight(NodeId a, NodeId b) const {
    auto it = edges_.find(edge_key(a, b));
    return it == edges_.end() ? 0 : it->second;
  }

  long long total_edge_weight() const {
    long long sum = 0;
    for (const auto& [key, w] : edges_) sum += w;
    return sum;
  }

  const std::unordered_map<std::uint64_t, long long>& edges() const {
    return edges_;
  }

  struct Edge {
    NodeId a, b;  // a < b
    long long weight;
  };

  // All edges sorted by (a, b) — the canonical order for exports.
  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [key, w] : edges_)
      out.push_back({static_cast<NodeId>(key >> 32),
                     static_cast<NodeId>(key & 0xffffffffu), w});
    std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
      return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return out;
  }

  static std::uint64_t edge_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<long long> freq_;
  std::vector<char> absent_;  // true only for contracted-but-missing clusters
  std::unordered_map<std::uint64_t, long long> edges_;
};

// Compressed adjacency view of a WordGraph, neighbors sorted by id.
// Build once, then share read-only across threads.
struct Adjacency {
  std::vector<std::size_t> offsets;        // node_count + 1 entries
  std::vector<WordGraph::NodeId> targets;
  std::vector<long long> weights;

  std::size_t degree(WordGraph::NodeId v) const {
    return offsets[v + 1] - offsets[v];
  }
};

inline Adjacency make_adjacency(const WordGraph& g) {
  const std::size_t n = g.node_count();
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (const auto& [key, w] : g.edges()) {
    ++adj.offsets[(key >> 32) + 1];
    ++adj.offsets[(key & 0xffffffffu) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) adj.offsets[v + 1] += adj.offsets[v];
  adj.targets.resize(adj.offsets[n]);
  adj.weights.resize(adj.offsets[n]);
  std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [key, w] : g.edges()) {
    auto a = static_cast<WordGraph::NodeId>(key >> 32);
    auto b = static_cast<WordGraph::NodeId>(key & 0xffffffffu);
    adj.targets[cursor[a]] = b;
    adj.weights[cursor[a]++] = w;
    adj.targets[cursor[b]] = a;
    adj.weights[cursor[b]++] = w;
  }
  // Sort each neighbor run by target id so traversal order is canonical.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t lo = adj.offsets[v], hi = adj.offsets[v + 1];
    std::vector<std::pair<WordGraph::NodeId, long long>> run;
    run.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k)
      run.emplace_back(adj.targets[k], adj.weights[k]);
    std::sort(run.begin(), run.end());
    for (std::size_t k = lo; k < hi; ++k) {
      adj.targets[k] = run[k - lo].first;
      adj.weights[k] = run[k - lo].second;
    }
  }
  return adj;
}

// Builds the co-occurrence network: within each document, every ordered
// position pair (i, j) with 0 < j - i <= window adds 1 to edge
// {token_i, token_j}; pairs holding the same term are skipped, and pairs
// never cross document boundaries. Node frequency = total token count.
inline WordGraph build_graph(const std::vector<std::vector<std::string>>& docs,
                             int window = 3) {
  if (window < 1) throw ValidationError("window must be >= 1");
  WordGraph g;
  std::vector<WordGraph::NodeId> ids;
  for (const auto& doc : docs) {
    ids.clear();
    ids.reserve(doc.size());
    for (const auto& token : doc) {
      WordGraph::NodeId v = g.add_node(token);
      g.add_frequency(v, 1);
      ids.push_back(v);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::size_t stop = std::min(ids.size(), i + std::size_t(window) + 1);
      for (std::size_t j = i + 1; j < stop; ++j)
        if (ids[i] != ids[j]) g.add_edge(ids[i], ids[j], 1);
    }
  }
  return g;
}

// Drops edges below min_weight. Nodes (and their frequencies) survive even
// when isolated, so prevalence is unaffected by pruning.
inline WordGraph filter_edges(const WordGraph& g, long long min_weight) {
  if (min_weight < 1) throw ValidationError("min edge weight must be >= 1");
  WordGraph out;
  for (WordGraph::NodeId v = 0; v < g.node_count(); ++v) {
    WordGraph::NodeId nv = out.add_node(g.name(v));
    out.add_frequency(nv, g.frequency(v));
    if (g.is_absent(v)) out.mark_absent(nv);
  }
  for (const auto& [key, w] : g.edges())
    if (w >= min_weight)
      out.add_edge(static_cast<WordGraph::NodeId>(key >> 32),
                   static_cast<WordGraph::NodeId>(key & 0xffffffffu), w);
  return out;
}

// A named keyword cluster: one semantic actor defined by member terms.
// Terms are stored post-normalization (lowercase single tokens) in file
// order with duplicates removed.
struct ClusterSpec {
  std::string name;
  std::vector<std::string> terms;
};

// Shared sanity rules for any cluster set scored together. Collects every
// problem before throwing so users can fix a cluster file in one pass.
inline void validate_clusters(const std::vector<ClusterSpec>& clusters) {
  std::vector<std::string> problems;
  std::unordered_set<std::string> names;
  std::unordered_map<std::string, std::string> owner;  // term -> cluster
  for (const auto& c : clusters) {
    if (c.name.empty()) problems.push_back("cluster with empty name");
    if (!names.insert(c.name).second)
      problems.push_back("duplicate cluster name '" + c.name + "'");
    if (c.terms.empty())
      problems.push_back("cluster '" + c.name + "' has no terms");
    for (const auto& t : c.terms) {
      auto [it, fresh] = owner.emplace(t, c.name);
      if (!fresh)
        problems.push_back("term '" + t + "' appears in clusters '" +
                           it->second + "' and '" + c.name +
                           "' (term sets must be disjoint)");
    }
  }
  if (clusters.empty()) problems.push_back("no clusters defined");
  if (!problems.empty()) {
    std::string msg = "invalid cluster set:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
}

// Contracts every cluster into a single supernode, all at once: member
// terms collapse to one node named cluster.name, parallel edges sum their
// weights, intra-cluster edges vanish, and the supernode's frequency is
// the sum of its members'. A cluster with no member in the graph becomes
// an isolated zero-frequency supernode flagged absent, so downstream
// scores stay defined (and minimal) instead of failing.
inline WordGraph merge_clusters(const WordGraph& g,
                                const std::vector<ClusterSpec>& clusters) {
  validate_clusters(clusters);
  std::unordered_map<std::string, std::size_t> member_of;  // term -> cluster idx
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (const auto& t : clusters[c].terms) member_of.emplace(t, c);

  WordGraph out;
  const WordGraph::NodeId none = static_cast<WordGraph::NodeId>(-1);
  std::vector<WordGraph::NodeId> remap(g.node_count(), none);

  // Untouched vocabulary first, in original order; a surviving term that
  // shares a cluster's name would make the supernode ambiguous.
  for (WordGraph::NodeId v = 0; v < g.node_count(); ++v) {
    if (member_of.count(g.name(v))) continue;
    for (const auto& c : clusters)
      if (g.name(v) == c.name)
        throw ValidationError("cluster name '" + c.name +
                              "' collides with a vocabulary term; rename the "
                              "cluster or add the term to it");
    WordGraph::NodeId nv = out.add_node(g.name(v));
    out.add_frequency(nv, g.frequency(v));
    if (g.is_absent(v)) out.mark_absent(nv);
    remap[v] = nv;
  }

  // Then one supernode per cluster, in cluster order.
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    WordGraph::NodeId sv = out.add_node(clusters[c].name);
    bool present = false;
    for (WordGraph::NodeId v = 0; v < g.node_count(); ++v) {
      if (!member_of.count(g.name(v)) || member_of.at(g.name(v)) != c) continue;
      out.add_frequency(sv, g.frequency(v));
      remap[v] = sv;
      present = true;
    }
    if (!present) out.mark_absent(sv);
  }

  for (const auto& [key, w] : g.edges()) {
    WordGraph::NodeId a = remap[key >> 32];
    WordGraph::NodeId b = remap[key & 0xffffffffu];
    if (a != b) out.add_edge(a, b, w);
  }
  return out;
}

inline WordGraph merge_cluster(const WordGraph& g, const ClusterSpec& cluster) {
  return merge_clusters(g, {cluster});
}

// Reads a cluster file: a JSON object mapping cluster name -> array of
// terms, kept in file order. Terms are lowercased and must normalize to a
// single token (join multi-word expressions with underscores).
inline std::vector<ClusterSpec> load_clusters(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cluster file: " + path);
  nlohmann::ordered_json obj;
  try {
    obj = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid cluster file JSON: ") + e.what());
  }
  if (!obj.is_object())
    throw ParseError("cluster file must be a JSON object of name -> terms");

  std::vector<ClusterSpec> clusters;
  std::vector<std::string> problems;
  for (const auto& [name, value] : obj.items()) {
    ClusterSpec spec;
    spec.name = name;
    if (!value.is_array()) {
      problems.push_back("cluster '" + name + "' is not an array of terms");
      continue;
    }
    std::unordered_set<std::string> seen;
    for (const auto& item : value) {
      if (!item.is_string()) {
        problems.push_back("cluster '" + name + "' has a non-string term");
        continue;
      }
      auto raw = item.get<std::string>();
      auto tokens = tokenize(raw);
      if (tokens.size() != 1) {
        problems.push_back("cluster '" + name + "' term '" + raw +
                           "' does not normalize to a single token (join "
                           "phrases with underscores, e.g. smart_grid)");
        continue;
      }
      if (seen.insert(tokens[0]).second) spec.terms.push_back(tokens[0]);
    }
    clusters.push_back(std::move(spec));
  }
  if (!problems.empty()) {
    std::string msg = "invalid cluster file:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
  validate_clusters(clusters);
  return clusters;
}

}  // namespace semascore
