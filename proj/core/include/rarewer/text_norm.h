// core/include/rarewer/text_norm.h

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

#ifndef RAREWER_TEXT_NORM_H_
#define RAREWER_TEXT_NORM_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rarewer {

// Two tokenization bases. Orthographic keeps casing and punctuation as
// written (whitespace split of composed text); Normalized applies the full
// rule pipeline below and is the basis for rare-word matching.
enum class NormalizationMode { kOrthographic, kNormalized };

const char *NormalizationModeName(NormalizationMode mode);

// Pure data; equal configs produce identical tokenizations for identical
// input.  Orthographic mode ignores lowercase/strip_punctuation/expansion
// flags by definition.
struct NormalizationConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool collapse_whitespace = true;
  bool unicode_compose = true;
  bool expand_common_abbreviations = false;
  bool remove_disfluency_markers = false;

  friend bool operator==(const NormalizationConfig &,
                         const NormalizationConfig &) = default;
};

// Ordered word tokens plus the mode that produced them.  Invariants: no
// token is empty, no token contains whitespace.
struct TokenSeq {
  std::vector<std::string> tokens;
  NormalizationMode mode = NormalizationMode::kNormalized;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  friend bool operator==(const TokenSeq &, const TokenSeq &) = default;
};

// Abbreviation expansion table.  File format: UTF-8, one mapping per line,
// `abbrev<TAB>expansion`, `#` starts a comment line.  Keys are stored
// lowercased; a key must end with '.' (lookup fires only on tokens whose
// trailing punctuation carries a period, e.g. "Dr." but not "Dr").
class AbbreviationTable {
 public:
  static AbbreviationTable FromFile(const std::string &path);
  static AbbreviationTable FromText(std::string_view text);

  // Table compiled into the library; byte-for-byte the contents of
  // data/abbreviations.tsv shipped with the repo.
  static const AbbreviationTable &Builtin();

  // Returns the expansion for an exact key match, or nullptr.
  const std::string *Find(const std::string &key) const;

  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string> entries_;
};

// Tokenization markers removed by the disfluency rule when enabled.
inline constexpr const char *kDisfluencyMarkers[] = {"uh", "um"};

// Converts raw text to tokens.  Rules apply in fixed order.
//   Orthographic: R0 Unicode canonical composition (NFC); R1 trim and split
//   on whitespace runs.
//   Normalized: R0; R2 lowercase; R3 delete punctuation and symbol
//   characters except intra-word apostrophes and hyphens; R4 expand
//   abbreviations from the table when enabled; R5 drop disfluency markers
//   when enabled; R6 split on whitespace runs.
// `abbreviations` of nullptr selects the builtin table.
TokenSeq Tokenize(std::string_view text, NormalizationMode mode,
                  const NormalizationConfig &config = {},
                  const AbbreviationTable *abbreviations = nullptr);

// Concatenates tokens with single spaces.
std::string JoinTokens(const TokenSeq &seq);

// True iff tokenize(join(tokenize(text))) == tokenize(text).
bool NormalizationIdempotentCheck(std::string_view text,
                                  NormalizationMode mode,
                                  const NormalizationConfig &config = {},
                                  const AbbreviationTable *abbreviations =
                                      nullptr);

}  // namespace rarewer

#endif  // RAREWER_TEXT_NORM_H_
