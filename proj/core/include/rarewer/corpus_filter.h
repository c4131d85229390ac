// core/include/rarewer/corpus_filter.h

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

#ifndef RAREWER_CORPUS_FILTER_H_
#define RAREWER_CORPUS_FILTER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rarewer/manifest_io.h"
#include "rarewer/text_norm.h"

namespace rarewer {

// Training-corpus curation knobs.  Each filter decision is record-local so
// shards can run independently.
struct FilterConfig {
  // Reject when normalized WER(primary vs alt label) exceeds this.
  double wer_threshold = 0.5;
  // Simplicity screen: minimum token count and minimum unique/total ratio.
  int64_t min_tokens = 3;
  double min_unique_ratio = 0.3;
  // Reject segments strictly longer than this many seconds.
  double max_duration_s = 20.0;

  void Validate() const;  // throws kInvalidArgument
};

enum class FilterReason {
  kNone,
  kDuration,
  kSimplicity,
  kWerTooHigh,
  kMissingAlt,
};

const char *FilterReasonName(FilterReason reason);

struct FilterDecision {
  bool passed = false;
  FilterReason reason = FilterReason::kNone;
};

// Normalized-mode WER between primary_text (reference) and alt_text
// (hypothesis).  Missing alt_text rejects with kMissingAlt; a primary that
// normalizes to nothing is an unusable label and rejects with kWerTooHigh.
FilterDecision WerFilter(const UtteranceRecord &record, double threshold);

// Rejects when the normalized primary has fewer than min_tokens tokens or a
// unique/total token ratio below min_unique_ratio; empty tokenization
// rejects.
FilterDecision SimpleSentenceFilter(const UtteranceRecord &record,
                                    int64_t min_tokens,
                                    double min_unique_ratio);

// Rejects strictly longer than max_duration_s; exactly max passes.
FilterDecision DurationFilter(const UtteranceRecord &record,
                              double max_duration_s);

// Per-stage accounting.  input_count == passed_count + all rejections.
struct FilterReport {
  int64_t input_count = 0;
  int64_t passed_count = 0;
  int64_t rejected_by_wer = 0;
  int64_t rejected_by_simplicity = 0;
  int64_t rejected_by_duration = 0;
  int64_t rejected_missing_alt = 0;
  FilterConfig config;

  bool Conserves() const {
    return input_count == passed_count + rejected_by_wer +
                              rejected_by_simplicity + rejected_by_duration +
                              rejected_missing_alt;
  }

  // Single-line JSON with the exact counter field names plus the config.
  std::string ToJsonLine() const;
  // Human-readable multi-line summary with the config header.
  std::string Summary() const;

  FilterReport &Merge(const FilterReport &other);
};

struct FilterResult {
  std::vector<UtteranceRecord> passed;
  FilterReport report;
};

// Applies duration, then simplicity, then WER, short-circuiting at the
// first rejection so each record lands in exactly one counter.  Passed
// records preserve input order.
FilterResult RunPipeline(std::span<const UtteranceRecord> records,
                         const FilterConfig &config);

}  // namespace rarewer

#endif  // RAREWER_CORPUS_FILTER_H_
