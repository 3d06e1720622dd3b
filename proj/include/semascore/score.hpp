// The composite importance score: prevalence + diversity + connectivity,
// standardized across the cluster set per timeframe and summed.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "semascore/centrality.hpp"
#include "semascore/error.hpp"
#include "semascore/graph.hpp"
#include "semascore/timebin.hpp"

namespace semascore {

// Raw per-cluster measurements on one timeframe's graph.
struct DimensionScores {
  long long prevalence = 0;   // total token frequency of the cluster
  double diversity = 0.0;     // distinctiveness centrality
  double connectivity = 0.0;  // weighted betweenness centrality
};

struct StandardizedScores {
  double prevalence = 0.0;
  double diversity = 0.0;
  double connectivity = 0.0;
};

struct SbsResult {
  std::string cluster;
  TimeBin bin;
  DimensionScores raw;
  StandardizedScores standardized;
  double sbs = 0.0;  // sum of the three standardized values, no re-rounding
  bool absent = false;  // no cluster term occurred in this timeframe
};

// (v - mean)/std element-wise with the population standard deviation.
// A degenerate sample (all values equal, including the singleton case)
// standardizes to all zeros rather than dividing by ~0.
inline std::vector<double> standardize(const std::vector<double>& values) {
  if (values.empty())
    throw ValidationError("standardize: input must be non-empty");
  const std::size_t n = values.size();

  bool all_equal = true;
  for (double v : values)
    if (v != values.front()) {
      all_equal = false;
      break;
    }
  if (all_equal) return std::vector<double>(n, 0.0);

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  // Corrected two-pass: fold the rounding residue of the first pass back
  // into the mean so the standardized values sum to ~0 exactly.
  double residue = 0.0;
  for (double v : values) residue += v - mean;
  mean += residue / static_cast<double>(n);

  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  double std_dev = std::sqrt(var);
  if (std_dev == 0.0) return std::vector<double>(n, 0.0);

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (values[i] - mean) / std_dev;
  return out;
}

// Total token frequency of a node (for a supernode: the sum over members).
inline long long prevalence(const WordGraph& g, const std::string& term) {
  return g.frequency(require_node(g, term));
}

// Full per-timeframe scoring: contract all clusters into supernodes, read
// the three raw dimensions off the merged graph, standardize each across
// the cluster set, and sum. Results follow cluster input order.
inline std::vector<SbsResult> score_clusters(
    const WordGraph& g, const std::vector<ClusterSpec>& clusters,
    const TimeBin& bin, int threads = 1) {
  WordGraph merged = merge_clusters(g, clusters);
  Adjacency adj = make_adjacency(merged);
  const std::size_t k = clusters.size();

  std::vector<WordGraph::NodeId> supernodes(k);
  for (std::size_t i = 0; i < k; ++i)
    supernodes[i] = require_node(merged, clusters[i].name);

  std::vector<double> connectivity =
      betweenness_scores(adj, merged.node_count(), supernodes, threads);

  std::vector<double> p(k), d(k);
  for (std::size_t i = 0; i < k; ++i) {
    p[i] = static_cast<double>(merged.frequency(supernodes[i]));
    d[i] = distinctiveness(adj, merged.node_count(), supernodes[i]);
  }
  std::vector<double> zp = standardize(p);
  std::vector<double> zd = standardize(d);
  std::vector<double> zc = standardize(connectivity);

  std::vector<SbsResult> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i].cluster = clusters[i].name;
    out[i].bin = bin;
    out[i].raw.prevalence = merged.frequency(supernodes[i]);
    out[i].raw.diversity = d[i];
    out[i].raw.connectivity = connectivity[i];
    out[i].standardized = {zp[i], zd[i], zc[i]};
    out[i].sbs = zp[i] + zd[i] + zc[i];
    out[i].absent = merged.is_absent(supernodes[i]);
  }
  return out;
}

}  // namespace semascore
