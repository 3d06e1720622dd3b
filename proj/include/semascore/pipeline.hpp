// End-to-end runs: ingest -> preprocess -> bin -> graph -> scores and the
// derived trend/similarity/association outputs, driven by one RunConfig.
#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semascore/corpus.hpp"
#include "semascore/error.hpp"
#include "semascore/exports.hpp"
#include "semascore/graph.hpp"
#include "semascore/imagery.hpp"
#include "semascore/keywords.hpp"
#include "semascore/score.hpp"
#include "semascore/stemmer.hpp"
#include "semascore/text.hpp"
#include "semascore/timebin.hpp"

namespace semascore {

// Declarative description of one run. Defaults match the CLI defaults.
struct RunConfig {
  std::string corpus;     // input path (required)
  CorpusFormat format = CorpusFormat::jsonl;
  std::string clusters;   // cluster file path (required unless suggesting)
  std::string stopwords;  // optional stopword list path
  int window = 3;
  long long min_edge_weight = 1;
  Granularity bin = Granularity::month;
  bool stem = false;
  std::string language = "english";  // stemmer language (with stem = true)
  double df_ceiling = 0.5;
  int top_k = 50;         // keyword suggestions / associations per cluster
  std::string out = ".";  // output directory
  bool strict = false;    // abort on first malformed corpus record
  int threads = 0;        // worker threads; 0 = all hardware threads
  int min_token_length = 2;
  bool dump_graph = false;  // also write the merged-graph edge list (score)
};

// Checks paths and numeric ranges, reporting every problem at once so a
// config can be fixed in a single pass.
inline void validate_config(const RunConfig& cfg, bool needs_clusters) {
  namespace fs = std::filesystem;
  std::vector<std::string> problems;
  auto check_file = [&](const std::string& path, const char* what) {
    if (!fs::exists(path))
      problems.push_back(std::string(what) + " does not exist: " + path);
    else if (fs::is_directory(path))
      problems.push_back(std::string(what) + " is a directory: " + path);
  };
  if (cfg.corpus.empty())
    problems.push_back("corpus path is required");
  else
    check_file(cfg.corpus, "corpus file");
  if (needs_clusters) {
    if (cfg.clusters.empty())
      problems.push_back("cluster file is required for this command");
    else
      check_file(cfg.clusters, "cluster file");
  } else if (!cfg.clusters.empty()) {
    check_file(cfg.clusters, "cluster file");
  }
  if (!cfg.stopwords.empty()) check_file(cfg.stopwords, "stopword file");
  if (cfg.window < 1) problems.push_back("window must be >= 1");
  if (cfg.min_edge_weight < 1)
    problems.push_back("min edge weight must be >= 1");
  if (cfg.bin == Granularity::period)
    problems.push_back("bin must be day, week, or month");
  if (!(cfg.df_ceiling > 0.0 && cfg.df_ceiling <= 1.0))
    problems.push_back("df ceiling must be in (0, 1]");
  if (cfg.top_k < 1) problems.push_back("top-k must be >= 1");
  if (cfg.threads < 0) problems.push_back("threads must be >= 0");
  if (cfg.min_token_length < 1)
    problems.push_back("min token length must be >= 1");
  if (cfg.stem && !stemmer_available(cfg.language))
    problems.push_back("no stemmer for language '" + cfg.language + "'");
  if (cfg.out.empty()) problems.push_back("output directory is required");
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
}

// Merges a JSON config file into `cfg`. Keys mirror the CLI flag names
// (hyphens or underscores both accepted); unknown keys are reported so
// typos do not silently fall back to defaults.
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid config JSON: ") + e.what());
  }
  if (!obj.is_object())
    throw ParseError("config file must be a JSON object");

  std::vector<std::string> problems;
  auto bad_type = [&](const std::string& key, const char* want) {
    problems.push_back("config key '" + key + "' must be " + want);
  };
  for (const auto& [raw_key, value] : obj.items()) {
    std::string key = raw_key;
    for (auto& c : key)
      if (c == '-') c = '_';
    try {
      if (key == "corpus" || key == "clusters" || key == "stopwords" ||
          key == "out" || key == "language") {
        if (!value.is_string()) {
          bad_type(raw_key, "a string");
          continue;
        }
        auto s = value.get<std::string>();
        if (key == "corpus") cfg.corpus = s;
        else if (key == "clusters") cfg.clusters = s;
        else if (key == "stopwords") cfg.stopwords = s;
        else if (key == "out") cfg.out = s;
        else cfg.language = s;
      } else if (key == "format") {
        if (!value.is_string()) bad_type(raw_key, "\"jsonl\" or \"csv\"");
        else cfg.format = parse_format(value.get<std::string>());
      } else if (key == "bin") {
        if (!value.is_string()) bad_type(raw_key, "\"day\", \"week\", or \"month\"");
        else cfg.bin = parse_granularity(value.get<std::string>());
      } else if (key == "window" || key == "min_edge_weight" ||
                 key == "top_k" || key == "threads" ||
                 key == "min_token_length") {
        if (!value.is_number_integer()) {
          bad_type(raw_key, "an integer");
          continue;
        }
        auto n = value.get<long long>();
        if (key == "window") cfg.window = static_cast<int>(n);
        else if (key == "min_edge_weight") cfg.min_edge_weight = n;
        else if (key == "top_k") cfg.top_k = static_cast<int>(n);
        else if (key == "threads") cfg.threads = static_cast<int>(n);
        else cfg.min_token_length = static_cast<int>(n);
      } else if (key == "df_ceiling") {
        if (!value.is_number()) bad_type(raw_key, "a number");
        else cfg.df_ceiling = value.get<double>();
      } else if (key == "stem" || key == "strict" || key == "dump_graph") {
        if (!value.is_boolean()) {
          bad_type(raw_key, "a boolean");
          continue;
        }
        bool b = value.get<bool>();
        if (key == "stem") cfg.stem = b;
        else if (key == "strict") cfg.strict = b;
        else cfg.dump_graph = b;
      } else {
        problems.push_back("unknown config key '" + raw_key + "'");
      }
    } catch (const ValidationError& e) {
      problems.push_back("config key '" + raw_key + "': " + e.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "invalid config file " + path + ":";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
}

// Corpus after ingestion and preprocessing; tokens[i] belongs to docs[i].
struct PreparedCorpus {
  std::vector<Document> docs;
  std::vector<std::vector<std::string>> tokens;
  LoadReport load_report;
};

inline PreparedCorpus prepare_corpus(const RunConfig& cfg) {
  PreprocessConfig pre;
  if (!cfg.stopwords.empty()) pre.stopwords = load_stopwords(cfg.stopwords);
  pre.stem = cfg.stem;
  pre.language = cfg.language;
  pre.min_token_length = cfg.min_token_length;

  PreparedCorpus out;
  out.docs = load_corpus(cfg.corpus, cfg.format,
                         cfg.strict ? Strictness::strict : Strictness::lenient,
                         &out.load_report);
  if (out.docs.empty())
    throw DataError("corpus contains no usable documents: " + cfg.corpus);
  out.tokens.reserve(out.docs.size());
  for (const auto& doc : out.docs) out.tokens.push_back(preprocess(doc.text, pre));
  return out;
}

// Loads clusters and, when stemming is on, maps cluster terms through the
// same stemmer as the corpus so they still match graph nodes. Stemming can
// merge two spellings; duplicates collapse within a cluster, but a
// cross-cluster collapse breaks disjointness and is rejected.
inline std::vector<ClusterSpec> prepare_clusters(const RunConfig& cfg) {
  auto clusters = load_clusters(cfg.clusters);
  if (!cfg.stem) return clusters;
  PorterStemmer stemmer;
  for (auto& c : clusters) {
    std::vector<std::string> stemmed;
    std::unordered_set<std::string> seen;
    for (const auto& t : c.terms) {
      std::string s = stemmer.stem(t);
      if (seen.insert(s).second) stemmed.push_back(std::move(s));
    }
    c.terms = std::move(stemmed);
  }
  validate_clusters(clusters);
  return clusters;
}

inline TimeBin period_bin(const std::vector<Document>& docs) {
  Date lo = docs.front().date, hi = docs.front().date;
  for (const auto& d : docs) {
    if (d.date < lo) lo = d.date;
    if (hi < d.date) hi = d.date;
  }
  return TimeBin{Granularity::period, lo, hi};
}

namespace detail {

inline std::filesystem::path ensure_out_dir(const RunConfig& cfg) {
  std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out + ": " +
                        ec.message());
  return dir;
}

inline WordGraph period_graph(const PreparedCorpus& corpus,
                              const RunConfig& cfg) {
  return filter_edges(build_graph(corpus.tokens, cfg.window),
                      cfg.min_edge_weight);
}

}  // namespace detail

// -- suggest ---------------------------------------------------------------

// Writes keywords.csv; returns the ranking. Every run_* function reports
// lenient-mode record skips through the optional `report` out-param.
inline std::vector<KeywordScore> run_suggest(const RunConfig& cfg,
                                             LoadReport* report = nullptr) {
  validate_config(cfg, /*needs_clusters=*/false);
  auto corpus = prepare_corpus(cfg);
  if (report) *report = corpus.load_report;
  auto ranked = suggest_keywords(corpus.tokens,
                                 static_cast<std::size_t>(cfg.top_k),
                                 cfg.df_ceiling);
  auto dir = detail::ensure_out_dir(cfg);
  write_text_file((dir / "keywords.csv").string(), keywords_csv(ranked));
  return ranked;
}

// -- score -----------------------------------------------------------------

// Scores the whole corpus as a single timeframe. Writes scores.csv and
// scores.json (plus graph.csv when dump_graph is set); returns the scores.
inline std::vector<SbsResult> run_score(const RunConfig& cfg,
                                        LoadReport* report = nullptr) {
  validate_config(cfg, /*needs_clusters=*/true);
  auto corpus = prepare_corpus(cfg);
  if (report) *report = corpus.load_report;
  auto clusters = prepare_clusters(cfg);
  WordGraph g = detail::period_graph(corpus, cfg);
  auto results =
      score_clusters(g, clusters, period_bin(corpus.docs), cfg.threads);
  auto dir = detail::ensure_out_dir(cfg);
  write_text_file((dir / "scores.csv").string(), scores_csv(results));
  write_text_file((dir / "scores.json").string(), scores_json(results));
  if (cfg.dump_graph)
    write_text_file((dir / "graph.csv").string(),
                    graph_csv(merge_clusters(g, clusters)));
  return results;
}

// -- trends ----------------------------------------------------------------

struct TrendSeries {
  std::string cluster;
  std::vector<SbsResult> points;  // one per bin, chronological
};

struct TrendsOutput {
  std::vector<TimeBin> bins;
  std::vector<TrendSeries> series;   // one per cluster, input order
  std::vector<SbsResult> breakdown;  // whole-period scores per cluster
};

// Scores every calendar bin independently (standardization within each
// bin's cluster set) and also the whole period on one union graph. Bins
// with no documents still appear, carrying raw zeros and standardized-zero
// scores. Writes trends.csv/.json and breakdown.csv/.json.
inline TrendsOutput run_trends(const RunConfig& cfg,
                               LoadReport* report = nullptr) {
  validate_config(cfg, /*needs_clusters=*/true);
  auto corpus = prepare_corpus(cfg);
  if (report) *report = corpus.load_report;
  auto clusters = prepare_clusters(cfg);
  auto binned = bin_documents(corpus.docs, cfg.bin);

  TrendsOutput out;
  out.bins = binned.bins;
  out.series.resize(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i)
    out.series[i].cluster = clusters[i].name;

  std::vector<std::vector<std::string>> bin_tokens;
  for (std::size_t b = 0; b < binned.bins.size(); ++b) {
    bin_tokens.clear();
    bin_tokens.reserve(binned.docs[b].size());
    for (std::size_t idx : binned.docs[b]) bin_tokens.push_back(corpus.tokens[idx]);
    WordGraph g =
        filter_edges(build_graph(bin_tokens, cfg.window), cfg.min_edge_weight);
    auto results = score_clusters(g, clusters, binned.bins[b], cfg.threads);
    for (std::size_t i = 0; i < results.size(); ++i)
      out.series[i].points.push_back(std::move(results[i]));
  }

  WordGraph whole = detail::period_graph(corpus, cfg);
  out.breakdown =
      score_clusters(whole, clusters, period_bin(corpus.docs), cfg.threads);

  std::string csv = kScoreCsvHeader;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t b = 0; b < out.bins.size(); ++b)
    for (const auto& s : out.series) {
      append_score_row(csv, s.points[b]);
      arr.push_back(score_json_row(s.points[b]));
    }
  auto dir = detail::ensure_out_dir(cfg);
  write_text_file((dir / "trends.csv").string(), csv);
  write_text_file((dir / "trends.json").string(), arr.dump(2) + "\n");
  write_text_file((dir / "breakdown.csv").string(), scores_csv(out.breakdown));
  write_text_file((dir / "breakdown.json").string(), scores_json(out.breakdown));
  return out;
}

// -- similarity ------------------------------------------------------------

// Whole-period graph -> association vectors -> cosine matrix -> 2D MDS.
// Writes similarity.csv and similarity.json; returns the map with coords.
inline SimilarityMap run_similarity(const RunConfig& cfg,
                                    LoadReport* report = nullptr) {
  validate_config(cfg, /*needs_clusters=*/true);
  auto clusters = prepare_clusters(cfg);
  if (clusters.size() < 2)
    throw ValidationError("similarity needs at least 2 clusters");
  auto corpus = prepare_corpus(cfg);
  if (report) *report = corpus.load_report;
  WordGraph merged =
      merge_clusters(detail::period_graph(corpus, cfg), clusters);
  std::vector<AssociationVector> vectors;
  vectors.reserve(clusters.size());
  for (const auto& c : clusters)
    vectors.push_back(association_vector(merged, c.name));
  SimilarityMap map = classical_mds(cosine_similarity_matrix(vectors));
  auto dir = detail::ensure_out_dir(cfg);
  write_text_file((dir / "similarity.csv").string(), similarity_csv(map));
  write_text_file((dir / "similarity.json").string(), similarity_json(map));
  return map;
}

// -- associations ----------------------------------------------------------

// Top-k association profile per cluster on the whole-period graph.
// Writes associations.json (word-cloud data); returns the vectors.
inline std::vector<AssociationVector> run_associations(
    const RunConfig& cfg, LoadReport* report = nullptr) {
  validate_config(cfg, /*needs_clusters=*/true);
  auto corpus = prepare_corpus(cfg);
  if (report) *report = corpus.load_report;
  auto clusters = prepare_clusters(cfg);
  WordGraph merged =
      merge_clusters(detail::period_graph(corpus, cfg), clusters);
  std::vector<AssociationVector> vectors;
  vectors.reserve(clusters.size());
  for (const auto& c : clusters)
    vectors.push_back(
        association_vector(merged, c.name, static_cast<std::size_t>(cfg.top_k)));
  auto dir = detail::ensure_out_dir(cfg);
  write_text_file((dir / "associations.json").string(),
                  associations_json(vectors));
  return vectors;
}

}  // namespace semascore
