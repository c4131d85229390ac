// core/include/rarewer/metrics.h

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

#ifndef RAREWER_METRICS_H_
#define RAREWER_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rarewer/alignment.h"
#include "rarewer/manifest_io.h"
#include "rarewer/rareword.h"
#include "rarewer/text_norm.h"

namespace rarewer {

// Rare-word attribution over one alignment: numerator errors are
// substitutions and deletions whose reference token is rare, plus insertions
// whose hypothesis token is rare; the denominator is the rare reference
// token count.
struct RareErrorCounts {
  int64_t rare_ref_tokens = 0;
  int64_t rare_substitutions = 0;
  int64_t rare_deletions = 0;
  int64_t rare_insertions = 0;

  int64_t NumeratorErrors() const {
    return rare_substitutions + rare_deletions + rare_insertions;
  }

  RareErrorCounts &operator+=(const RareErrorCounts &other);

  friend bool operator==(const RareErrorCounts &,
                         const RareErrorCounts &) = default;
};

struct UtteranceMetrics {
  std::string utterance_id;
  ErrorCounts o_counts;
  ErrorCounts n_counts;
  std::map<std::string, RareErrorCounts> r_counts;
  // Set when the reference tokenizes to nothing in the given mode; such
  // utterances contribute insertions to pooled numerators and zero to
  // denominators.
  bool o_empty_reference = false;
  bool n_empty_reference = false;
};

// Corpus-level rates are pooled-count ratios, never means of per-utterance
// rates.  A rate is nullopt when its pooled denominator is zero ("undefined"
// at the rendering boundary).
struct MetricReport {
  std::string dataset_name;
  std::string system_name = "system";
  std::vector<UtteranceMetrics> per_utterance;

  ErrorCounts o_totals;
  ErrorCounts n_totals;
  std::map<std::string, RareErrorCounts> rare_totals;

  std::optional<double> o_wer;
  std::optional<double> n_wer;
  std::map<std::string, std::optional<double>> r_wer;

  int64_t skipped_missing_hyp = 0;
  std::vector<std::string> skipped_ids;
};

// (substitutions + deletions + insertions) / ref_tokens.  May exceed 1.0.
// Throws kEmptyReference when ref_tokens == 0.
double Wer(const ErrorCounts &counts);

// Rare ratio over pooled-style counts; nullopt when rare_ref_tokens == 0.
std::optional<double> RareWerRatio(const RareErrorCounts &counts);

// Aligns normalized sequences under the deterministic tie-break and
// attributes errors to the rare set.  Throws kModeMismatch unless both
// sequences are Normalized-mode; kEmptyRareSet if the set is empty.
RareErrorCounts RareWer(const TokenSeq &ref, const TokenSeq &hyp,
                        const RareWordSet &rare);

// Tokenizes both texts in both modes, aligns, and attributes rare errors per
// set.  Empty references are flagged, not fatal.
UtteranceMetrics ScoreUtterance(const std::string &utterance_id,
                                std::string_view ref_text,
                                std::string_view hyp_text,
                                std::span<const RareWordSet> rare_sets,
                                const NormalizationConfig &config = {},
                                const AbbreviationTable *abbreviations =
                                    nullptr);

// Pooled (micro) aggregation.  Throws kEmptyCorpus on an empty list.
MetricReport Aggregate(std::vector<UtteranceMetrics> per_utterance,
                       const std::string &dataset_name);

struct ManifestScore {
  std::vector<UtteranceMetrics> scored;
  std::vector<std::string> skipped_ids;  // records without hyp_text
};

// Scores every record carrying hyp_text against its primary_text, fanning
// out across `workers` threads.  Results are ordered by record index, so the
// outcome is identical for any worker count.
ManifestScore ScoreRecords(std::span<const UtteranceRecord> records,
                           std::span<const RareWordSet> rare_sets,
                           const NormalizationConfig &config, int workers,
                           const AbbreviationTable *abbreviations = nullptr);

}  // namespace rarewer

#endif  // RAREWER_METRICS_H_
