// core/src/rareword.cc

// Copyright 2026  Rarewer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "rarewer/rareword.h"

#include <unicode/uchar.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "rarewer/error.h"

namespace rarewer {

namespace {

constexpr const char kSourceManual[] = "manual";
constexpr const char kSourceFrequency[] = "frequency";

// Codepoint count of a UTF-8 string (continuation bytes don't count).
size_t Utf8Length(const std::string &s) {
  size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool IsPureNumeral(const std::string &s) {
  if (s.empty()) return false;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    UChar32 cp;
    size_t len;
    if (b < 0x80) {
      cp = b;
      len = 1;
    } else if ((b & 0xE0) == 0xC0 && i + 1 < s.size()) {
      cp = ((b & 0x1F) << 6) | (s[i + 1] & 0x3F);
      len = 2;
    } else if ((b & 0xF0) == 0xE0 && i + 2 < s.size()) {
      cp = ((b & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
      len = 3;
    } else if ((b & 0xF8) == 0xF0 && i + 3 < s.size()) {
      cp = ((b & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
           ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
      len = 4;
    } else {
      return false;
    }
    if (u_charType(cp) != U_DECIMAL_DIGIT_NUMBER) return false;
    i += len;
  }
  return true;
}

bool ConsumeHeader(const std::string &line, const char *key,
                   std::string *value) {
  std::string prefix = std::string("# ") + key + "=";
  if (line.rfind(prefix, 0) != 0) return false;
  *value = line.substr(prefix.size());
  return true;
}

}  // namespace

const char *RareWordSourceName(RareWordSource source) {
  return source == RareWordSource::kManualList ? kSourceManual
                                               : kSourceFrequency;
}

RareWordSet RareWordSet::Create(std::string name, std::set<std::string> words,
                                RareWordSource source,
                                std::optional<int64_t> threshold) {
  if (words.empty()) {
    throw Error(ErrorCode::kEmptyRareSet, "rare-word set has no words");
  }
  if (name.find('\n') != std::string::npos ||
      name.find('\r') != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "rare-word set name must not contain line breaks");
  }
  if (threshold.has_value() != (source == RareWordSource::kFrequencyDerived)) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold is present iff the set is frequency-derived");
  }
  for (const std::string &word : words) {
    TokenSeq norm = Tokenize(word, NormalizationMode::kNormalized);
    if (norm.tokens.size() != 1 || norm.tokens[0] != word) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rare word is not normalization-closed: \"" + word + "\"");
    }
  }
  RareWordSet set;
  set.name_ = std::move(name);
  set.words_ = std::move(words);
  set.source_ = source;
  set.threshold_ = threshold;
  return set;
}

RareWordSet LoadRareList(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable, "cannot open rare list: " + path);
  }

  std::string name = std::filesystem::path(path).stem().string();
  RareWordSource source = RareWordSource::kManualList;
  std::optional<int64_t> threshold;
  std::set<std::string> words;

  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string value;
      if (ConsumeHeader(line, "name", &value)) {
        name = value;
      } else if (ConsumeHeader(line, "source", &value)) {
        if (value == kSourceManual) {
          source = RareWordSource::kManualList;
        } else if (value == kSourceFrequency) {
          source = RareWordSource::kFrequencyDerived;
        } else {
          throw Error(ErrorCode::kMalformedEntry,
                      path + ":" + std::to_string(line_number) +
                          ": unknown source \"" + value + "\"");
        }
      } else if (ConsumeHeader(line, "threshold", &value)) {
        try {
          threshold = std::stoll(value);
        } catch (const std::exception &) {
          throw Error(ErrorCode::kMalformedEntry,
                      path + ":" + std::to_string(line_number) +
                          ": threshold is not an integer");
        }
      }
      continue;
    }
    TokenSeq norm = Tokenize(line, NormalizationMode::kNormalized);
    if (norm.tokens.size() != 1) {
      throw Error(ErrorCode::kMalformedEntry,
                  path + ":" + std::to_string(line_number) + ": \"" + line +
                      "\" normalizes to " + std::to_string(norm.tokens.size()) +
                      " tokens, expected 1");
    }
    words.insert(norm.tokens[0]);
  }

  if (words.empty()) {
    throw Error(ErrorCode::kEmptyList, "rare list has no words: " + path);
  }
  return RareWordSet::Create(std::move(name), std::move(words), source,
                             threshold);
}

void SaveRareList(const RareWordSet &set, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kFileUnwritable, "cannot write rare list: " + path);
  }
  out << "# name=" << set.name() << "\n";
  out << "# source=" << RareWordSourceName(set.source()) << "\n";
  if (set.threshold()) {
    out << "# threshold=" << *set.threshold() << "\n";
  }
  for (const std::string &word : set.words()) {
    out << word << "\n";
  }
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kFileUnwritable, "cannot write rare list: " + path);
  }
}

RareWordSet ExtractByFrequency(std::span<const TokenSeq> corpus_refs,
                               const FrequencyExtractOptions &options) {
  if (corpus_refs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "corpus is empty");
  }
  if (options.max_occurrences < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_occurrences must be >= 1");
  }

  std::map<std::string, int64_t> freq;
  for (const TokenSeq &seq : corpus_refs) {
    for (const std::string &token : seq.tokens) ++freq[token];
  }

  std::set<std::string> words;
  for (const auto &[token, count] : freq) {
    if (count > options.max_occurrences) continue;
    if (options.min_length > 0 &&
        Utf8Length(token) < static_cast<size_t>(options.min_length)) {
      continue;
    }
    if (!options.keep_numerals && IsPureNumeral(token)) continue;
    words.insert(token);
  }

  if (words.empty()) {
    throw Error(ErrorCode::kEmptyResult,
                "no token qualifies under max_occurrences=" +
                    std::to_string(options.max_occurrences));
  }
  return RareWordSet::Create(options.name, std::move(words),
                             RareWordSource::kFrequencyDerived,
                             options.max_occurrences);
}

}  // namespace rarewer
