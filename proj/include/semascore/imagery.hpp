// Cluster "image" analysis: association vectors read off the merged graph,
// their pairwise cosine similarities, and a 2D classical MDS embedding.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "semascore/centrality.hpp"
#include "semascore/error.hpp"
#include "semascore/graph.hpp"

namespace semascore {

// Frequency-weighted neighbor profile of one cluster supernode.
struct AssociationVector {
  std::string cluster;
  // (term, weight) sorted by weight descending, term ascending — the
  // canonical order for exports and top-k truncation.
  std::vector<std::pair<std::string, long long>> associations;
  bool absent = false;  // cluster had no member in the underlying corpus
};

// Reads all incident edge weights of the cluster's supernode. With top_k
// set, keeps the top_k heaviest (ties broken lexicographically). An
// isolated supernode yields an empty profile.
inline AssociationVector association_vector(const WordGraph& g,
                                            const std::string& cluster,
                                            std::size_t top_k = 0) {
  WordGraph::NodeId v = require_node(g, cluster);
  AssociationVector out;
  out.cluster = cluster;
  out.absent = g.is_absent(v);
  for (const auto& [key, w] : g.edges()) {
    auto a = static_cast<WordGraph::NodeId>(key >> 32);
    auto b = static_cast<WordGraph::NodeId>(key & 0xffffffffu);
    if (a == v)
      out.associations.emplace_back(g.name(b), w);
    else if (b == v)
      out.associations.emplace_back(g.name(a), w);
  }
  std::sort(out.associations.begin(), out.associations.end(),
            [](const auto& x, const auto& y) {
              if (x.second != y.second) return x.second > y.second;
              return x.first < y.first;
            });
  if (top_k > 0 && out.associations.size() > top_k)
    out.associations.resize(top_k);
  return out;
}

// Pairwise cluster-image similarities plus (after classical_mds) their 2D
// embedding.
struct SimilarityMap {
  std::vector<std::string> clusters;
  std::vector<std::vector<double>> matrix;      // symmetric, entries in [0,1]
  std::vector<std::array<double, 2>> coords;    // empty until classical_mds
  std::vector<bool> degenerate;                 // zero vector: similarity
                                                // undefined, reported as 0
  std::array<bool, 2> axis_zeroed = {false, false};  // negative eigenvalue
};

// Cosine similarity over the union vocabulary (missing terms count as 0).
// A zero vector has no direction, so its similarities — diagonal included —
// are reported as 0 and the cluster is flagged degenerate; every other
// diagonal entry is exactly 1.
inline SimilarityMap cosine_similarity_matrix(
    const std::vector<AssociationVector>& vectors) {
  const std::size_t k = vectors.size();
  if (k < 2)
    throw ValidationError("cosine_similarity_matrix: need >= 2 vectors");

  SimilarityMap map;
  map.clusters.reserve(k);
  std::vector<std::unordered_map<std::string, double>> sparse(k);
  std::vector<double> norm(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    map.clusters.push_back(vectors[i].cluster);
    double sq = 0.0;
    for (const auto& [term, w] : vectors[i].associations) {
      double x = static_cast<double>(w);
      sparse[i].emplace(term, x);
      sq += x * x;
    }
    norm[i] = std::sqrt(sq);
  }
  map.degenerate.resize(k);
  for (std::size_t i = 0; i < k; ++i) map.degenerate[i] = norm[i] == 0.0;

  map.matrix.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    if (map.degenerate[i]) continue;  // row stays all zero
    map.matrix[i][i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (map.degenerate[j]) continue;
      const auto& small = sparse[i].size() <= sparse[j].size() ? sparse[i]
                                                               : sparse[j];
      const auto& large = sparse[i].size() <= sparse[j].size() ? sparse[j]
                                                               : sparse[i];
      double dot = 0.0;
      for (const auto& [term, w] : small) {
        auto it = large.find(term);
        if (it != large.end()) dot += w * it->second;
      }
      double s = dot / (norm[i] * norm[j]);
      s = std::clamp(s, 0.0, 1.0);  // shave off rounding overshoot
      map.matrix[i][j] = s;
      map.matrix[j][i] = s;
    }
  }
  return map;
}

namespace detail {

// Cyclic Jacobi eigendecomposition of a symmetric matrix (row-major).
// Small inputs only (one row per cluster); trades speed for robustness.
// On return `a` is near-diagonal (eigenvalues on the diagonal) and column
// j of `vecs` is the j-th eigenvector.
inline void jacobi_eigen(std::vector<double>& a, std::size_t n,
                         std::vector<double>& vecs) {
  vecs.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vecs[i * n + i] = 1.0;
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off < 1e-20) return;  // off-diagonal Frobenius norm below 1e-10

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (apq == 0.0) continue;
        double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          double aip = a[i * n + p], aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[p * n + i] = a[i * n + p];
          a[i * n + q] = s * aip + c * aiq;
          a[q * n + i] = a[i * n + q];
        }
        for (std::size_t i = 0; i < n; ++i) {
          double vip = vecs[i * n + p], viq = vecs[i * n + q];
          vecs[i * n + p] = c * vip - s * viq;
          vecs[i * n + q] = s * vip + c * viq;
        }
      }
    }
  }
  throw Error("internal: Jacobi eigendecomposition did not converge");
}

}  // namespace detail

struct MdsResult {
  std::vector<std::array<double, 2>> coords;     // centered at the origin
  std::array<bool, 2> axis_zeroed = {false, false};
};

// Classical (Torgerson) MDS onto 2 dimensions: double-center -1/2 d^2,
// take the two largest-eigenvalue eigenvectors scaled by sqrt(eigenvalue).
// A negative eigenvalue among the top two means the distances do not embed
// in that dimension; its coordinates are zeroed and flagged. Eigenvector
// signs are fixed by making each one's first nonzero component positive.
inline MdsResult classical_mds_points(
    const std::vector<std::vector<double>>& distances) {
  const std::size_t n = distances.size();
  if (n < 2) throw ValidationError("classical_mds: need >= 2 points");
  for (const auto& row : distances)
    if (row.size() != n)
      throw ValidationError("classical_mds: distance matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(distances[i][j] - distances[j][i]) > 1e-9)
        throw ValidationError(
            "classical_mds: distance matrix must be symmetric");

  // b = -1/2 * J d^2 J via the row/grand-mean identity.
  std::vector<double> d2(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double d = 0.5 * (distances[i][j] + distances[j][i]);  // exact symmetry
      d2[i * n + j] = d * d;
    }
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += d2[i * n + j];
    row_mean[i] /= static_cast<double>(n);
    grand += row_mean[i];
  }
  grand /= static_cast<double>(n);
  std::vector<double> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b[i * n + j] = -0.5 * (d2[i * n + j] - row_mean[i] - row_mean[j] + grand);

  std::vector<double> vecs;
  detail::jacobi_eigen(b, n, vecs);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    double lx = b[x * n + x], ly = b[y * n + y];
    if (lx != ly) return lx > ly;
    return x < y;
  });

  MdsResult out;
  out.coords.assign(n, {0.0, 0.0});
  for (std::size_t dim = 0; dim < 2 && dim < n; ++dim) {
    std::size_t col = order[dim];
    double lambda = b[col * n + col];
    if (lambda < 0.0) {
      out.axis_zeroed[dim] = true;
      continue;
    }
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double x = vecs[i * n + col];
      if (x != 0.0) {
        sign = x > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    double scale = sign * std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i)
      out.coords[i][dim] = scale * vecs[i * n + col];
    // Eigenvectors of the centered matrix are already mean-free up to
    // rounding; subtract the residue so the centering is exact.
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += out.coords[i][dim];
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out.coords[i][dim] -= mean;
  }
  return out;
}

// MDS over cluster images: distance = 1 - similarity.
inline SimilarityMap classical_mds(SimilarityMap map) {
  const std::size_t k = map.clusters.size();
  if (map.matrix.size() != k)
    throw ValidationError("classical_mds: matrix/cluster size mismatch");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (std::abs(map.matrix[i][j] - map.matrix[j][i]) > 1e-9)
        throw ValidationError("classical_mds: similarity matrix must be "
                              "symmetric");
  std::vector<std::vector<double>> dist(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) dist[i][j] = 1.0 - map.matrix[i][j];
  MdsResult mds = classical_mds_points(dist);
  map.coords = std::move(mds.coords);
  map.axis_zeroed = mds.axis_zeroed;
  return map;
}

}  // namespace semascore
