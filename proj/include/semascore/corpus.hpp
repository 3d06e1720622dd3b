// Timestamped document ingestion (JSONL and RFC-4180 CSV) and time binning.
#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "semascore/error.hpp"
#include "semascore/timebin.hpp"

namespace semascore {

// One timestamped text unit (e.g. a news article).
struct Document {
  std::string id;
  Date date;
  std::string text;
  std::string source;  // optional label, empty if unset
};

enum class CorpusFormat { jsonl, csv };

inline CorpusFormat parse_format(std::string_view s) {
  if (s == "jsonl") return CorpusFormat::jsonl;
  if (s == "csv") return CorpusFormat::csv;
  throw ValidationError("invalid corpus format '" + std::string(s) +
                        "' (want jsonl|csv)");
}

enum class Strictness { strict, lenient };

struct LoadReport {
  std::size_t skipped = 0;                // lenient mode: malformed records
  std::vector<std::string> skip_reasons;  // one message per skipped record
};

namespace detail {

// Reads one RFC-4180 record (quoted fields may contain commas, quotes,
// and newlines). Returns false at end of input. `line` tracks the
// physical line the record started on.
inline bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                            std::size_t& line, std::size_t& record_line) {
  fields.clear();
  int c = in.peek();
  if (c == EOF) return false;
  record_line = line;
  std::string field;
  bool quoted = false;
  for (;;) {
    c = in.get();
    if (quoted) {
      if (c == EOF) throw ParseError("unterminated quoted field", record_line);
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += char(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {  // quotes open only at field start
      quoted = true;
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      continue;
    }
    if (c == '\r') {
      if (in.peek() == '\n') in.get();
      ++line;
      break;
    }
    if (c == '\n') {
      ++line;
      break;
    }
    if (c == EOF) break;
    field += char(c);
  }
  fields.push_back(std::move(field));
  return true;
}

inline Document parse_jsonl_record(const std::string& text, std::size_t line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!obj.is_object()) throw ParseError("record is not a JSON object", line);
  for (const char* key : {"id", "date", "text"}) {
    if (!obj.contains(key))
      throw ParseError(std::string("missing required field '") + key + "'",
                       line);
    if (!obj[key].is_string())
      throw ParseError(std::string("field '") + key + "' is not a string",
                       line);
  }
  Document doc;
  doc.id = obj["id"].get<std::string>();
  if (doc.id.empty()) throw ParseError("empty id", line);
  doc.date = parse_date(obj["date"].get<std::string>(), line);
  doc.text = obj["text"].get<std::string>();
  if (obj.contains("source") && obj["source"].is_string())
    doc.source = obj["source"].get<std::string>();
  return doc;
}

}  // namespace detail

// Loads a corpus in file order. Strict mode aborts on the first malformed
// record with its line number; lenient mode skips it and reports via
// `report`. Duplicate ids are record-level errors (ids must be unique).
inline std::vector<Document> load_corpus(const std::string& path,
                                         CorpusFormat format,
                                         Strictness strictness = Strictness::strict,
                                         LoadReport* report = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);

  std::vector<Document> docs;
  std::unordered_set<std::string> seen_ids;
  LoadReport local;
  LoadReport& rep = report ? *report : local;

  auto admit = [&](Document&& doc, std::size_t line) {
    if (!seen_ids.insert(doc.id).second)
      throw ParseError("duplicate id '" + doc.id + "'", line);
    docs.push_back(std::move(doc));
  };
  auto record_failure = [&](const ParseError& e) {
    if (strictness == Strictness::strict) throw e;
    ++rep.skipped;
    rep.skip_reasons.push_back(e.what());
  };

  if (format == CorpusFormat::jsonl) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        admit(detail::parse_jsonl_record(line, lineno), lineno);
      } catch (const ParseError& e) {
        record_failure(e);
      }
    }
    return docs;
  }

  // CSV: header row names the columns; order is free, extras are ignored.
  std::vector<std::string> fields;
  std::size_t line = 1, record_line = 1;
  if (!detail::read_csv_record(in, fields, line, record_line))
    return docs;  // empty file: empty corpus
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < fields.size(); ++i) col[fields[i]] = i;
  for (const char* key : {"id", "date", "text"})
    if (!col.count(key))
      throw ParseError(std::string("CSV header missing column '") + key + "'",
                       record_line);
  bool has_source = col.count("source") > 0;

  while (detail::read_csv_record(in, fields, line, record_line)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    try {
      if (fields.size() < col.size())
        throw ParseError("record has " + std::to_string(fields.size()) +
                             " fields, header has " + std::to_string(col.size()),
                         record_line);
      Document doc;
      doc.id = fields[col["id"]];
      if (doc.id.empty()) throw ParseError("empty id", record_line);
      doc.date = parse_date(fields[col["date"]], record_line);
      doc.text = fields[col["text"]];
      if (has_source) doc.source = fields[col["source"]];
      admit(std::move(doc), record_line);
    } catch (const ParseError& e) {
      record_failure(e);
    }
  }
  return docs;
}

// Documents partitioned into gap-free calendar bins.
struct BinnedCorpus {
  std::vector<TimeBin> bins;                    // ascending, tiling the range
  std::vector<std::vector<std::size_t>> docs;   // per-bin indices into input
};

// Partitions documents by calendar period. Every document lands in exactly
// one bin; empty periods inside the covered range are materialized so trend
// series have no gaps.
inline BinnedCorpus bin_documents(const std::vector<Document>& documents,
                                  Granularity granularity) {
  if (granularity == Granularity::period)
    throw ValidationError("bin_documents: granularity must be day, week, or month");
  BinnedCorpus out;
  if (documents.empty()) return out;

  Date lo = documents.front().date, hi = documents.front().date;
  for (const auto& d : documents) {
    if (d.date < lo) lo = d.date;
    if (hi < d.date) hi = d.date;
  }

  TimeBin bin = bin_containing(lo, granularity);
  TimeBin last = bin_containing(hi, granularity);
  std::map<Date, std::size_t> index_of;
  for (;;) {
    index_of[bin.start] = out.bins.size();
    out.bins.push_back(bin);
    if (bin == last) break;
    bin = next_bin(bin);
  }
  out.docs.resize(out.bins.size());
  for (std::size_t i = 0; i < documents.size(); ++i) {
    TimeBin b = bin_containing(documents[i].date, granularity);
    out.docs[index_of.at(b.start)].push_back(i);
  }
  return out;
}

}  // namespace semascore
