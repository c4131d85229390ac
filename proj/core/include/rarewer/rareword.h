// core/include/rarewer/rareword.h

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

#ifndef RAREWER_RAREWORD_H_
#define RAREWER_RAREWORD_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "rarewer/text_norm.h"

namespace rarewer {

enum class RareWordSource { kManualList, kFrequencyDerived };

const char *RareWordSourceName(RareWordSource source);

// Named set of normalized rare words.  Immutable once constructed; every
// word must equal its own normalized form (tokenize(word) == [word]), and
// threshold is present iff the set is frequency-derived.
class RareWordSet {
 public:
  static RareWordSet Create(std::string name, std::set<std::string> words,
                            RareWordSource source,
                            std::optional<int64_t> threshold = std::nullopt);

  const std::string &name() const { return name_; }
  const std::set<std::string> &words() const { return words_; }
  RareWordSource source() const { return source_; }
  std::optional<int64_t> threshold() const { return threshold_; }

  bool Contains(const std::string &token) const {
    return words_.count(token) > 0;
  }
  size_t size() const { return words_.size(); }

  friend bool operator==(const RareWordSet &, const RareWordSet &) = default;

 private:
  RareWordSet() = default;

  std::string name_;
  std::set<std::string> words_;
  RareWordSource source_ = RareWordSource::kManualList;
  std::optional<int64_t> threshold_;
};

// File format: UTF-8, one word per line, `#` comments and blank lines
// ignored.  Header comments `# name=`, `# source=` (manual|frequency) and
// `# threshold=` restore metadata; without them the file stem names the set
// and source defaults to manual.  Each word is normalized on load and
// duplicates collapse.
// Throws kFileUnreadable, kMalformedEntry (with line number), kEmptyList.
RareWordSet LoadRareList(const std::string &path);

// Writes header comments then words sorted lexicographically, one per line.
// LoadRareList(SaveRareList(s)) reproduces s exactly.
void SaveRareList(const RareWordSet &set, const std::string &path);

struct FrequencyExtractOptions {
  int64_t max_occurrences = 1;
  // Tokens shorter than this many codepoints are dropped; 0 disables.
  int min_length = 3;
  bool keep_numerals = false;
  std::string name = "frequency";
};

// Collects every token whose total corpus frequency is <= max_occurrences,
// subject to the length and numeral screens.  Deterministic and
// order-independent.  Throws kEmptyResult when nothing qualifies.
RareWordSet ExtractByFrequency(std::span<const TokenSeq> corpus_refs,
                               const FrequencyExtractOptions &options);

}  // namespace rarewer

#endif  // RAREWER_RAREWORD_H_
