// Score, graph, keyword, association, and similarity exports.
// All numeric CSV text goes through one %.12g formatter so identical
// inputs render to identical bytes regardless of thread count or platform
// locale.
#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semascore/error.hpp"
#include "semascore/graph.hpp"
#include "semascore/imagery.hpp"
#include "semascore/keywords.hpp"
#include "semascore/score.hpp"
#include "semascore/timebin.hpp"

namespace semascore {

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // never print the sign of a negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Quotes a CSV field when it holds a delimiter, quote, or line break.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline double json_double(double v) { return v == 0.0 ? 0.0 : v; }

inline const char* kScoreCsvHeader =
    "bin_start,bin_end,cluster,prevalence,diversity,connectivity,"
    "z_prevalence,z_diversity,z_connectivity,sbs\n";

inline void append_score_row(std::string& out, const SbsResult& r) {
  out += format_date(r.bin.start);
  out += ',';
  out += format_date(r.bin.end);
  out += ',';
  out += csv_field(r.cluster);
  out += ',';
  out += std::to_string(r.raw.prevalence);
  out += ',';
  out += format_double(r.raw.diversity);
  out += ',';
  out += format_double(r.raw.connectivity);
  out += ',';
  out += format_double(r.standardized.prevalence);
  out += ',';
  out += format_double(r.standardized.diversity);
  out += ',';
  out += format_double(r.standardized.connectivity);
  out += ',';
  out += format_double(r.sbs);
  out += '\n';
}

inline std::string scores_csv(const std::vector<SbsResult>& results) {
  std::string out = kScoreCsvHeader;
  for (const auto& r : results) append_score_row(out, r);
  return out;
}

inline nlohmann::ordered_json score_json_row(const SbsResult& r) {
  nlohmann::ordered_json row;
  row["bin_start"] = format_date(r.bin.start);
  row["bin_end"] = format_date(r.bin.end);
  row["cluster"] = r.cluster;
  row["prevalence"] = r.raw.prevalence;
  row["diversity"] = json_double(r.raw.diversity);
  row["connectivity"] = json_double(r.raw.connectivity);
  row["z_prevalence"] = json_double(r.standardized.prevalence);
  row["z_diversity"] = json_double(r.standardized.diversity);
  row["z_connectivity"] = json_double(r.standardized.connectivity);
  row["sbs"] = json_double(r.sbs);
  return row;
}

inline std::string scores_json(const std::vector<SbsResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) arr.push_back(score_json_row(r));
  return arr.dump(2) + "\n";
}

// Debug edge list, canonical (id-sorted) edge order.
inline std::string graph_csv(const WordGraph& g) {
  std::string out = "term_a,term_b,weight\n";
  for (const auto& e : g.sorted_edges()) {
    out += csv_field(g.name(e.a));
    out += ',';
    out += csv_field(g.name(e.b));
    out += ',';
    out += std::to_string(e.weight);
    out += '\n';
  }
  return out;
}

inline std::string keywords_csv(const std::vector<KeywordScore>& ranked) {
  std::string out = "term,score,document_frequency\n";
  for (const auto& k : ranked) {
    out += csv_field(k.term);
    out += ',';
    out += format_double(k.score);
    out += ',';
    out += format_double(k.document_frequency);
    out += '\n';
  }
  return out;
}

// Word-cloud data: one row per (cluster, association). A cluster with no
// associations at all still appears, as a single marker row with an empty
// term, so consumers can tell "absent" from "dropped".
inline std::string associations_json(
    const std::vector<AssociationVector>& vectors) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : vectors) {
    if (v.associations.empty()) {
      nlohmann::ordered_json row;
      row["cluster"] = v.cluster;
      row["term"] = "";
      row["weight"] = 0;
      row["absent"] = v.absent;
      arr.push_back(std::move(row));
      continue;
    }
    for (const auto& [term, w] : v.associations) {
      nlohmann::ordered_json row;
      row["cluster"] = v.cluster;
      row["term"] = term;
      row["weight"] = w;
      arr.push_back(std::move(row));
    }
  }
  return arr.dump(2) + "\n";
}

inline std::string similarity_csv(const SimilarityMap& map) {
  std::string out = "cluster";
  for (const auto& name : map.clusters) {
    out += ',';
    out += csv_field(name);
  }
  out += '\n';
  for (std::size_t i = 0; i < map.clusters.size(); ++i) {
    out += csv_field(map.clusters[i]);
    for (double s : map.matrix[i]) {
      out += ',';
      out += format_double(s);
    }
    out += '\n';
  }
  return out;
}

inline std::string similarity_json(const SimilarityMap& map) {
  nlohmann::ordered_json obj;
  obj["clusters"] = map.clusters;
  auto matrix = nlohmann::ordered_json::array();
  for (const auto& row : map.matrix) {
    auto r = nlohmann::ordered_json::array();
    for (double s : row) r.push_back(json_double(s));
    matrix.push_back(std::move(r));
  }
  obj["matrix"] = std::move(matrix);
  auto coords = nlohmann::ordered_json::array();
  for (const auto& c : map.coords)
    coords.push_back({json_double(c[0]), json_double(c[1])});
  obj["coords"] = std::move(coords);
  obj["degenerate"] = map.degenerate;
  obj["axes_zeroed"] = map.axis_zeroed;
  return obj.dump(2) + "\n";
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace semascore
