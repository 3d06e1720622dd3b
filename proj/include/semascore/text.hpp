// Text normalization: UTF-8 tokenizer, lowercasing, stop-word removal,
// optional stemming. A token is a maximal run of letters (underscore counts
// as a letter so multi-word expressions can be pre-joined upstream);
// punctuation, digits, and symbols separate tokens, so digit-only and
// special-character tokens never survive.
#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "semascore/error.hpp"
#include "semascore/stemmer.hpp"

namespace semascore {

namespace utf8 {

// Decodes one codepoint starting at `i`, advancing `i`. Malformed bytes
// decode as U+FFFD and advance by one byte.
inline char32_t decode(std::string_view s, std::size_t& i) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t off) {
    return i + off < s.size() &&
           (static_cast<unsigned char>(s[i + off]) & 0xC0) == 0x80;
  };
  if (c0 < 0x80) {
    ++i;
    return c0;
  }
  if ((c0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = (char32_t(c0 & 0x1F) << 6) |
                  (static_cast<unsigned char>(s[i + 1]) & 0x3F);
    i += 2;
    return cp >= 0x80 ? cp : 0xFFFD;
  }
  if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = (char32_t(c0 & 0x0F) << 12) |
                  (char32_t(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3F);
    i += 3;
    return cp >= 0x800 ? cp : 0xFFFD;
  }
  if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (char32_t(c0 & 0x07) << 18) |
                  (char32_t(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
                  (char32_t(static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
                  (static_cast<unsigned char>(s[i + 3]) & 0x3F);
    i += 4;
    return cp >= 0x10000 && cp <= 0x10FFFF ? cp : 0xFFFD;
  }
  ++i;
  return 0xFFFD;
}

inline void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += char(cp);
  } else if (cp < 0x800) {
    out += char(0xC0 | (cp >> 6));
    out += char(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += char(0xE0 | (cp >> 12));
    out += char(0x80 | ((cp >> 6) & 0x3F));
    out += char(0x80 | (cp & 0x3F));
  } else {
    out += char(0xF0 | (cp >> 18));
    out += char(0x80 | ((cp >> 12) & 0x3F));
    out += char(0x80 | ((cp >> 6) & 0x3F));
    out += char(0x80 | (cp & 0x3F));
  }
}

}  // namespace utf8

// Letter coverage: ASCII, Latin-1 Supplement, Latin Extended-A/B, IPA,
// Greek, Cyrillic. Everything else separates tokens.
inline bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x2AF) return true;
  if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x374 && cp != 0x375 &&
                                         cp != 0x37E && cp != 0x387;
  if (cp >= 0x400 && cp <= 0x52F) return true;
  return false;
}

inline bool is_token_char(char32_t cp) {
  return cp == '_' || is_letter(cp);
}

// Lowercase mapping for ASCII, Latin-1, Latin Extended-A, Greek, Cyrillic.
// Unmapped codepoints pass through unchanged.
inline char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) return (cp & 1) ? cp : cp + 1;
  if (cp >= 0x139 && cp <= 0x148) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp & 1) ? cp : cp + 1;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

// Lowercases a UTF-8 string (used for stop-word and cluster-term files so
// they match preprocessed tokens).
inline std::string lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) utf8::encode(to_lower(utf8::decode(text, i)), out);
  return out;
}

// Splits into lowercase letter-run tokens. No stop-word/length filtering.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  std::size_t current_len = 0;
  while (i < text.size()) {
    char32_t cp = utf8::decode(text, i);
    if (is_token_char(cp)) {
      utf8::encode(to_lower(cp), current);
      ++current_len;
    } else if (current_len) {
      tokens.push_back(std::move(current));
      current.clear();
      current_len = 0;
    }
  }
  if (current_len) tokens.push_back(std::move(current));
  return tokens;
}

struct PreprocessConfig {
  std::unordered_set<std::string> stopwords;  // lowercase, no whitespace
  bool stem = false;
  std::string language = "english";  // stemmer selector, used only when stem
  int min_token_length = 2;          // in codepoints; 1 disables
};

inline bool stemmer_available(std::string_view language) {
  return language == "english" || language == "en";
}

// Codepoint count of a valid UTF-8 token.
inline std::size_t codepoint_length(std::string_view s) {
  std::size_t n = 0, i = 0;
  while (i < s.size()) {
    utf8::decode(s, i);
    ++n;
  }
  return n;
}

// Raw text -> lowercase tokens, with punctuation/digit runs as separators,
// stop-words and short tokens dropped, stems extracted only on request.
// Token order and duplicates are preserved.
inline std::vector<std::string> preprocess(std::string_view text,
                                           const PreprocessConfig& config) {
  if (config.min_token_length < 1)
    throw ValidationError("min_token_length must be >= 1");
  if (config.stem && !stemmer_available(config.language))
    throw ValidationError("no stemmer for language '" + config.language + "'");

  std::vector<std::string> tokens;
  PorterStemmer stemmer;
  std::string current;
  std::size_t current_len = 0;
  std::size_t i = 0;

  auto flush = [&] {
    if (current_len >= static_cast<std::size_t>(config.min_token_length) &&
        !config.stopwords.contains(current)) {
      tokens.push_back(config.stem ? stemmer.stem(current)
                                   : std::move(current));
    }
    current.clear();
    current_len = 0;
  };

  while (i < text.size()) {
    char32_t cp = utf8::decode(text, i);
    if (is_token_char(cp)) {
      utf8::encode(to_lower(cp), current);
      ++current_len;
    } else if (current_len) {
      flush();
    }
  }
  if (current_len) flush();
  return tokens;
}

// Stop-word file: UTF-8, one term per line, `#` starts a comment line.
// Entries are lowercased on load.
inline std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open stop-word file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t");
    std::string term = line.substr(a, b - a + 1);
    if (term.empty() || term[0] == '#') continue;
    words.insert(lowercase(term));
  }
  return words;
}

}  // namespace semascore
