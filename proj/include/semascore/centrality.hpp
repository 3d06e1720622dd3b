// Node centralities on the co-occurrence network: distinctiveness
// (diversity dimension) and weighted betweenness (connectivity dimension).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "semascore/error.hpp"
#include "semascore/graph.hpp"
#include "semascore/parallel.hpp"

namespace semascore {

inline WordGraph::NodeId require_node(const WordGraph& g,
                                      const std::string& term) {
  auto id = g.find(term);
  if (!id) throw LookupError("unknown node '" + term + "'");
  return *id;
}

// Distinctiveness of v: sum over neighbors j of w_vj * log10((n-1)/deg(j)),
// with n the total node count (isolated nodes included) and deg unweighted.
// Connections to hub words contribute little; an isolated node scores 0.
inline double distinctiveness(const Adjacency& adj, std::size_t node_count,
                              WordGraph::NodeId v) {
  double total = 0.0;
  for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
    auto deg = static_cast<double>(adj.degree(adj.targets[k]));
    total += static_cast<double>(adj.weights[k]) *
             std::log10(static_cast<double>(node_count - 1) / deg);
  }
  return total;
}

inline double distinctiveness(const WordGraph& g, const std::string& term) {
  return distinctiveness(make_adjacency(g), g.node_count(),
                         require_node(g, term));
}

namespace detail {

// Shortest-path ties: lengths are sums of reciprocal weights, so exact
// equality is not reliable; two path lengths within this relative
// tolerance are treated as equal.
inline bool same_length(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= 1e-12 * std::max(a, b);
}

// Reusable per-thread state for single-source shortest-path counting.
// Reset cost is proportional to the nodes actually reached, so sweeping
// many sources over a sparse graph stays cheap.
struct BrandesScratch {
  std::vector<double> dist, sigma, delta;
  std::vector<unsigned char> settled;
  std::vector<WordGraph::NodeId> order;    // settle order
  std::vector<WordGraph::NodeId> touched;  // nodes needing reset
  std::vector<std::pair<double, WordGraph::NodeId>> heap;

  void ensure(std::size_t n) {
    if (dist.size() >= n) return;
    dist.resize(n, std::numeric_limits<double>::infinity());
    sigma.resize(n, 0.0);
    delta.resize(n, 0.0);
    settled.resize(n, 0);
  }
  void reset() {
    for (auto v : touched) {
      dist[v] = std::numeric_limits<double>::infinity();
      sigma[v] = 0.0;
      delta[v] = 0.0;
      settled[v] = 0;
    }
    touched.clear();
    order.clear();
    heap.clear();
  }
};

// One Brandes (2001) source sweep: Dijkstra with edge length 1/weight and
// path counting, then dependency accumulation in reverse settle order.
// Predecessors are re-derived from final distances with the same tie rule
// used during relaxation, so no predecessor lists are stored. Dependencies
// land in `row`, indexed by target_slot (-1 entries are not tracked).
inline void brandes_source(const Adjacency& adj, WordGraph::NodeId s,
                           const std::vector<std::int32_t>& target_slot,
                           double* row, BrandesScratch& ws) {
  constexpr auto inf = std::numeric_limits<double>::infinity();
  const auto cmp = std::greater<>{};

  ws.reset();
  ws.dist[s] = 0.0;
  ws.sigma[s] = 1.0;
  ws.touched.push_back(s);
  ws.heap.emplace_back(0.0, s);

  while (!ws.heap.empty()) {
    std::pop_heap(ws.heap.begin(), ws.heap.end(), cmp);
    auto [d, v] = ws.heap.back();
    ws.heap.pop_back();
    if (ws.settled[v]) continue;  // stale heap entry
    ws.settled[v] = 1;
    ws.order.push_back(v);
    for (std::size_t k = adj.offsets[v]; k < adj.offsets[v + 1]; ++k) {
      WordGraph::NodeId u = adj.targets[k];
      if (ws.settled[u]) continue;
      double nd = ws.dist[v] + 1.0 / static_cast<double>(adj.weights[k]);
      if (same_length(nd, ws.dist[u])) {
        ws.sigma[u] += ws.sigma[v];  // another shortest path into u
      } else if (nd < ws.dist[u]) {
        if (ws.dist[u] == inf) ws.touched.push_back(u);
        ws.dist[u] = nd;
        ws.sigma[u] = ws.sigma[v];
        ws.heap.emplace_back(nd, u);
        std::push_heap(ws.heap.begin(), ws.heap.end(), cmp);
      }
    }
  }

  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    WordGraph::NodeId w = *it;
    double coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
    for (std::size_t k = adj.offsets[w]; k < adj.offsets[w + 1]; ++k) {
      WordGraph::NodeId v = adj.targets[k];
      if (!ws.settled[v]) continue;
      double len = 1.0 / static_cast<double>(adj.weights[k]);
      if (same_length(ws.dist[v] + len, ws.dist[w]))
        ws.delta[v] += ws.sigma[v] * coeff;
    }
    if (w != s && target_slot[w] >= 0) row[target_slot[w]] += ws.delta[w];
  }
}

}  // namespace detail

// Weighted betweenness of each target node: over all unordered pairs
// {s, t} (s, t distinct from the node), the fraction of shortest paths —
// edge length 1/weight, all ties counted — passing through it.
// Unnormalized; disconnected pairs contribute nothing.
//
// Source sweeps run in parallel, each writing a private result row;
// rows are then reduced in fixed source order, so results are identical
// bit for bit at every thread count.
inline std::vector<double> betweenness_scores(
    const Adjacency& adj, std::size_t node_count,
    const std::vector<WordGraph::NodeId>& targets, int threads = 1) {
  const std::size_t n = node_count, k = targets.size();
  if (k == 0) return {};
  std::vector<std::int32_t> target_slot(n, -1);
  for (std::size_t i = 0; i < k; ++i)
    target_slot[targets[i]] = static_cast<std::int32_t>(i);

  std::vector<double> rows(n * k, 0.0);
  parallel_for(n, threads, [&](std::size_t s) {
    thread_local detail::BrandesScratch scratch;
    scratch.ensure(n);
    detail::brandes_source(adj, static_cast<WordGraph::NodeId>(s), target_slot,
                           &rows[s * k], scratch);
  });

  std::vector<double> out(k, 0.0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < k; ++i) out[i] += rows[s * k + i];
  // Each unordered pair was seen from both endpoints' sweeps.
  for (auto& b : out) b *= 0.5;
  return out;
}

// Betweenness of every node; intended for small graphs and tests (memory
// grows with node_count squared).
inline std::vector<double> betweenness_all(const WordGraph& g,
                                           int threads = 1) {
  std::vector<WordGraph::NodeId> targets(g.node_count());
  for (std::size_t v = 0; v < targets.size(); ++v)
    targets[v] = static_cast<WordGraph::NodeId>(v);
  return betweenness_scores(make_adjacency(g), g.node_count(), targets,
                            threads);
}

inline double weighted_betweenness(const WordGraph& g, const std::string& term,
                                   int threads = 1) {
  return betweenness_scores(make_adjacency(g), g.node_count(),
                            {require_node(g, term)}, threads)
      .front();
}

}  // namespace semascore
