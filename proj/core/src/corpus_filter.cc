// core/src/corpus_filter.cc

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

#include "rarewer/corpus_filter.h"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rarewer/alignment.h"
#include "rarewer/error.h"
#include "rarewer/metrics.h"

namespace rarewer {

void FilterConfig::Validate() const {
  if (wer_threshold < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "wer_threshold must be >= 0");
  }
  if (min_tokens < 1) {
    throw Error(ErrorCode::kInvalidArgument, "min_tokens must be >= 1");
  }
  if (min_unique_ratio < 0.0 || min_unique_ratio > 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "min_unique_ratio must lie in [0, 1]");
  }
  if (!(max_duration_s > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max_duration_s must be > 0");
  }
}

const char *FilterReasonName(FilterReason reason) {
  switch (reason) {
    case FilterReason::kNone:
      return "none";
    case FilterReason::kDuration:
      return "duration";
    case FilterReason::kSimplicity:
      return "simplicity";
    case FilterReason::kWerTooHigh:
      return "wer_too_high";
    case FilterReason::kMissingAlt:
      return "missing_alt";
  }
  return "unknown";
}

FilterDecision WerFilter(const UtteranceRecord &record, double threshold) {
  if (!record.alt_text) {
    return {false, FilterReason::kMissingAlt};
  }
  TokenSeq ref = Tokenize(record.primary_text, NormalizationMode::kNormalized);
  if (ref.empty()) {
    return {false, FilterReason::kWerTooHigh};
  }
  TokenSeq hyp = Tokenize(*record.alt_text, NormalizationMode::kNormalized);
  double wer = Wer(CountErrors(Align(ref, hyp)));
  if (wer > threshold) {
    return {false, FilterReason::kWerTooHigh};
  }
  return {true, FilterReason::kNone};
}

FilterDecision SimpleSentenceFilter(const UtteranceRecord &record,
                                    int64_t min_tokens,
                                    double min_unique_ratio) {
  TokenSeq toks = Tokenize(record.primary_text, NormalizationMode::kNormalized);
  if (toks.empty() || static_cast<int64_t>(toks.size()) < min_tokens) {
    return {false, FilterReason::kSimplicity};
  }
  std::set<std::string> unique(toks.tokens.begin(), toks.tokens.end());
  double ratio =
      static_cast<double>(unique.size()) / static_cast<double>(toks.size());
  if (ratio < min_unique_ratio) {
    return {false, FilterReason::kSimplicity};
  }
  return {true, FilterReason::kNone};
}

FilterDecision DurationFilter(const UtteranceRecord &record,
                              double max_duration_s) {
  if (record.duration_s > max_duration_s) {
    return {false, FilterReason::kDuration};
  }
  return {true, FilterReason::kNone};
}

std::string FilterReport::ToJsonLine() const {
  nlohmann::ordered_json j;
  j["input_count"] = input_count;
  j["passed_count"] = passed_count;
  j["rejected_by_wer"] = rejected_by_wer;
  j["rejected_by_simplicity"] = rejected_by_simplicity;
  j["rejected_by_duration"] = rejected_by_duration;
  j["rejected_missing_alt"] = rejected_missing_alt;
  j["config"] = {{"wer_threshold", config.wer_threshold},
                 {"min_tokens", config.min_tokens},
                 {"min_unique_ratio", config.min_unique_ratio},
                 {"max_duration_s", config.max_duration_s}};
  return j.dump();
}

std::string FilterReport::Summary() const {
  std::ostringstream out;
  out << "filter config: wer_threshold=" << config.wer_threshold
      << " min_tokens=" << config.min_tokens
      << " min_unique_ratio=" << config.min_unique_ratio
      << " max_duration_s=" << config.max_duration_s << "\n";
  out << "input:                " << input_count << "\n";
  out << "passed:               " << passed_count << "\n";
  out << "rejected duration:    " << rejected_by_duration << "\n";
  out << "rejected simplicity:  " << rejected_by_simplicity << "\n";
  out << "rejected wer:         " << rejected_by_wer << "\n";
  out << "rejected missing alt: " << rejected_missing_alt << "\n";
  return out.str();
}

FilterReport &FilterReport::Merge(const FilterReport &other) {
  input_count += other.input_count;
  passed_count += other.passed_count;
  rejected_by_wer += other.rejected_by_wer;
  rejected_by_simplicity += other.rejected_by_simplicity;
  rejected_by_duration += other.rejected_by_duration;
  rejected_missing_alt += other.rejected_missing_alt;
  return *this;
}

FilterResult RunPipeline(std::span<const UtteranceRecord> records,
                         const FilterConfig &config) {
  config.Validate();

  FilterResult result;
  result.report.config = config;
  for (const UtteranceRecord &record : records) {
    ++result.report.input_count;

    FilterDecision decision = DurationFilter(record, config.max_duration_s);
    if (decision.passed) {
      decision = SimpleSentenceFilter(record, config.min_tokens,
                                      config.min_unique_ratio);
    }
    if (decision.passed) {
      decision = WerFilter(record, config.wer_threshold);
    }

    switch (decision.reason) {
      case FilterReason::kNone:
        ++result.report.passed_count;
        result.passed.push_back(record);
        break;
      case FilterReason::kDuration:
        ++result.report.rejected_by_duration;
        break;
      case FilterReason::kSimplicity:
        ++result.report.rejected_by_simplicity;
        break;
      case FilterReason::kWerTooHigh:
        ++result.report.rejected_by_wer;
        break;
      case FilterReason::kMissingAlt:
        ++result.report.rejected_missing_alt;
        break;
    }
  }
  return result;
}

}  // namespace rarewer
