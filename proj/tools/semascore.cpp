// Command-line front end: suggest | score | trends | similarity |
// associations, configured by flags and/or a JSON config file (flags win).
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "semascore/semascore.hpp"

namespace {

using namespace semascore;

// Flag values captured separately from RunConfig so that only flags the
// user actually passed override the config file.
struct FlagValues {
  std::string config;
  std::string corpus, format, clusters, stopwords, out, bin, language;
  int window = 0;
  long long min_edge_weight = 0;
  bool stem = false, strict = false, dump_graph = false;
  double df_ceiling = 0.0;
  int top_k = 0, threads = 0, min_token_length = 0;
};

void add_common_options(CLI::App* cmd, FlagValues& f) {
  cmd->add_option("--config", f.config,
                  "JSON config file; explicit flags override its values");
  cmd->add_option("--corpus", f.corpus, "corpus file to ingest");
  cmd->add_option("--format", f.format, "corpus format: jsonl|csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  cmd->add_option("--clusters", f.clusters,
                  "JSON file mapping cluster name -> array of terms");
  cmd->add_option("--stopwords", f.stopwords,
                  "stopword list, one lowercase word per line");
  cmd->add_option("--window", f.window, "co-occurrence window (default 3)");
  cmd->add_option("--min-edge-weight", f.min_edge_weight,
                  "drop edges below this weight (default 1)");
  cmd->add_option("--bin", f.bin, "time bin: day|week|month (default month)")
      ->check(CLI::IsMember({"day", "week", "month"}));
  cmd->add_flag("--stem", f.stem, "apply a stemmer to tokens and clusters");
  cmd->add_option("--language", f.language,
                  "stemmer language (default english)");
  cmd->add_option("--df-ceiling", f.df_ceiling,
                  "exclude terms above this document frequency (default 0.5)");
  cmd->add_option("--top-k", f.top_k,
                  "keywords to suggest / associations per cluster (default 50)");
  cmd->add_option("--out", f.out, "output directory (default .)");
  cmd->add_flag("--strict", f.strict,
                "abort on the first malformed corpus record");
  cmd->add_option("--threads", f.threads,
                  "worker threads; 0 = all hardware threads (default)");
  cmd->add_option("--min-token-length", f.min_token_length,
                  "drop tokens shorter than this (default 2)");
  cmd->add_flag("--dump-graph", f.dump_graph,
                "score only: also write the merged graph edge list");
}

// Config file first, then any flag the user passed on top of it.
RunConfig build_config(const CLI::App* cmd, const FlagValues& f) {
  RunConfig cfg;
  if (!f.config.empty()) apply_config_file(cfg, f.config);
  auto passed = [&](const char* name) { return cmd->count(name) > 0; };
  if (passed("--corpus")) cfg.corpus = f.corpus;
  if (passed("--format")) cfg.format = parse_format(f.format);
  if (passed("--clusters")) cfg.clusters = f.clusters;
  if (passed("--stopwords")) cfg.stopwords = f.stopwords;
  if (passed("--window")) cfg.window = f.window;
  if (passed("--min-edge-weight")) cfg.min_edge_weight = f.min_edge_weight;
  if (passed("--bin")) cfg.bin = parse_granularity(f.bin);
  if (passed("--stem")) cfg.stem = f.stem;
  if (passed("--language")) cfg.language = f.language;
  if (passed("--df-ceiling")) cfg.df_ceiling = f.df_ceiling;
  if (passed("--top-k")) cfg.top_k = f.top_k;
  if (passed("--out")) cfg.out = f.out;
  if (passed("--strict")) cfg.strict = f.strict;
  if (passed("--threads")) cfg.threads = f.threads;
  if (passed("--min-token-length")) cfg.min_token_length = f.min_token_length;
  if (passed("--dump-graph")) cfg.dump_graph = f.dump_graph;
  return cfg;
}

void report_skips(const LoadReport& report) {
  if (report.skipped == 0) return;
  std::fprintf(stderr, "warning: skipped %zu malformed record%s\n",
               report.skipped, report.skipped == 1 ? "" : "s");
  for (const auto& reason : report.skip_reasons)
    std::fprintf(stderr, "  %s\n", reason.c_str());
}

int run(const std::string& command, const RunConfig& cfg) {
  LoadReport report;
  if (command == "suggest") {
    auto ranked = run_suggest(cfg, &report);
    report_skips(report);
    std::printf("wrote %s/keywords.csv (%zu terms)\n", cfg.out.c_str(),
                ranked.size());
  } else if (command == "score") {
    auto results = run_score(cfg, &report);
    report_skips(report);
    std::printf("wrote %s/scores.csv and scores.json (%zu clusters)\n",
                cfg.out.c_str(), results.size());
  } else if (command == "trends") {
    auto trends = run_trends(cfg, &report);
    report_skips(report);
    std::printf(
        "wrote %s/trends.csv, trends.json, breakdown.csv, breakdown.json "
        "(%zu clusters x %zu bins)\n",
        cfg.out.c_str(), trends.series.size(), trends.bins.size());
  } else if (command == "similarity") {
    auto map = run_similarity(cfg, &report);
    report_skips(report);
    std::printf("wrote %s/similarity.csv and similarity.json (%zu clusters)\n",
                cfg.out.c_str(), map.clusters.size());
  } else if (command == "associations") {
    auto vectors = run_associations(cfg, &report);
    report_skips(report);
    std::printf("wrote %s/associations.json (%zu clusters)\n", cfg.out.c_str(),
                vectors.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic importance scores for keyword clusters in "
               "timestamped text corpora"};
  app.require_subcommand(1);

  FlagValues flags;
  const char* names[] = {"suggest", "score", "trends", "similarity",
                         "associations"};
  const char* blurbs[] = {
      "rank candidate keywords by TF-IDF",
      "score clusters over the whole corpus as one timeframe",
      "score clusters per time bin, plus a whole-period breakdown",
      "cosine similarity of cluster images with a 2D embedding",
      "top associations per cluster (word-cloud data)"};
  for (int i = 0; i < 5; ++i)
    add_common_options(app.add_subcommand(names[i], blurbs[i]), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends: print and exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the parser's message and usage hint
    return 1;     // command-line misuse is a validation failure
  }

  CLI::App* cmd = app.get_subcommands().front();
  try {
    return run(cmd->get_name(), build_config(cmd, flags));
  } catch (const semascore::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const semascore::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const semascore::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const semascore::DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const semascore::LookupError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
