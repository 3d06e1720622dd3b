// TF-IDF keyword suggestion: surfaces terms that are frequent overall yet
// concentrated in a subset of documents, as candidates for cluster curation.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semascore/error.hpp"

namespace semascore {

struct KeywordScore {
  std::string term;
  double score = 0.0;               // sum over docs of tf * ln(N/df_count)
  double document_frequency = 0.0;  // fraction of documents containing term
};

// Ranks terms by score(t) = total_count(t) * ln(N / df_count(t)) over the
// N documents, excluding terms present in more than df_ceiling of them.
// Ties break lexicographically. The IDF uses a natural log with no
// smoothing; df_count >= 1 for every candidate, so the log is always
// defined. All-empty input yields an empty ranking rather than an error.
inline std::vector<KeywordScore> suggest_keywords(
    const std::vector<std::vector<std::string>>& docs, std::size_t top_k,
    double df_ceiling = 0.5) {
  if (top_k < 1) throw ValidationError("top_k must be >= 1");
  if (!(df_ceiling > 0.0 && df_ceiling <= 1.0))
    throw ValidationError("df_ceiling must be in (0, 1]");

  const double n_docs = static_cast<double>(docs.size());
  std::unordered_map<std::string, long long> total_count;
  std::unordered_map<std::string, long long> doc_count;
  std::unordered_set<std::string> in_this_doc;
  for (const auto& doc : docs) {
    in_this_doc.clear();
    for (const auto& t : doc) {
      ++total_count[t];
      if (in_this_doc.insert(t).second) ++doc_count[t];
    }
  }

  std::vector<KeywordScore> ranked;
  ranked.reserve(total_count.size());
  for (const auto& [term, count] : total_count) {
    double df = static_cast<double>(doc_count[term]) / n_docs;
    if (df > df_ceiling) continue;
    KeywordScore k;
    k.term = term;
    k.score = static_cast<double>(count) *
              std::log(n_docs / static_cast<double>(doc_count[term]));
    k.document_frequency = df;
    ranked.push_back(std::move(k));
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const KeywordScore& a, const KeywordScore& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.term < b.term;
            });
  if (ranked.size() > top_k) ranked.resize(top_k);
  return ranked;
}

}  // namespace semascore
