// core/src/metrics.cc

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

#include "rarewer/metrics.h"

#include "rarewer/error.h"
#include "rarewer/parallel.h"

namespace rarewer {

RareErrorCounts &RareErrorCounts::operator+=(const RareErrorCounts &other) {
  rare_ref_tokens += other.rare_ref_tokens;
  rare_substitutions += other.rare_substitutions;
  rare_deletions += other.rare_deletions;
  rare_insertions += other.rare_insertions;
  return *this;
}

double Wer(const ErrorCounts &counts) {
  if (counts.ref_tokens == 0) {
    throw Error(ErrorCode::kEmptyReference,
                "WER is undefined for an empty reference");
  }
  return static_cast<double>(counts.TotalErrors()) /
         static_cast<double>(counts.ref_tokens);
}

std::optional<double> RareWerRatio(const RareErrorCounts &counts) {
  if (counts.rare_ref_tokens == 0) return std::nullopt;
  return static_cast<double>(counts.NumeratorErrors()) /
         static_cast<double>(counts.rare_ref_tokens);
}

RareErrorCounts RareWer(const TokenSeq &ref, const TokenSeq &hyp,
                        const RareWordSet &rare) {
  if (ref.mode != NormalizationMode::kNormalized ||
      hyp.mode != NormalizationMode::kNormalized) {
    throw Error(ErrorCode::kModeMismatch,
                "rare-word attribution requires Normalized-mode sequences");
  }
  if (rare.size() == 0) {
    throw Error(ErrorCode::kEmptyRareSet, "rare-word set is empty");
  }

  Alignment a = Align(ref, hyp);
  RareErrorCounts counts;
  for (const std::string &token : ref.tokens) {
    if (rare.Contains(token)) ++counts.rare_ref_tokens;
  }
  for (const EditOp &op : a.ops) {
    switch (op.kind) {
      case EditOpKind::kSubstitute:
        if (rare.Contains(ref.tokens[static_cast<size_t>(*op.ref_index)]))
          ++counts.rare_substitutions;
        break;
      case EditOpKind::kDelete:
        if (rare.Contains(ref.tokens[static_cast<size_t>(*op.ref_index)]))
          ++counts.rare_deletions;
        break;
      case EditOpKind::kInsert:
        if (rare.Contains(hyp.tokens[static_cast<size_t>(*op.hyp_index)]))
          ++counts.rare_insertions;
        break;
      case EditOpKind::kCorrect:
        break;
    }
  }
  return counts;
}

UtteranceMetrics ScoreUtterance(const std::string &utterance_id,
                                std::string_view ref_text,
                                std::string_view hyp_text,
                                std::span<const RareWordSet> rare_sets,
                                const NormalizationConfig &config,
                                const AbbreviationTable *abbreviations) {
  UtteranceMetrics m;
  m.utterance_id = utterance_id;

  TokenSeq o_ref = Tokenize(ref_text, NormalizationMode::kOrthographic, config,
                            abbreviations);
  TokenSeq o_hyp = Tokenize(hyp_text, NormalizationMode::kOrthographic, config,
                            abbreviations);
  m.o_counts = CountErrors(Align(o_ref, o_hyp));
  m.o_empty_reference = o_ref.empty();

  TokenSeq n_ref = Tokenize(ref_text, NormalizationMode::kNormalized, config,
                            abbreviations);
  TokenSeq n_hyp = Tokenize(hyp_text, NormalizationMode::kNormalized, config,
                            abbreviations);
  m.n_counts = CountErrors(Align(n_ref, n_hyp));
  m.n_empty_reference = n_ref.empty();

  for (const RareWordSet &rare : rare_sets) {
    m.r_counts[rare.name()] = RareWer(n_ref, n_hyp, rare);
  }
  return m;
}

MetricReport Aggregate(std::vector<UtteranceMetrics> per_utterance,
                       const std::string &dataset_name) {
  if (per_utterance.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "cannot aggregate an empty corpus: " + dataset_name);
  }

  MetricReport report;
  report.dataset_name = dataset_name;
  for (const UtteranceMetrics &m : per_utterance) {
    report.o_totals += m.o_counts;
    report.n_totals += m.n_counts;
    for (const auto &[set_name, counts] : m.r_counts) {
      report.rare_totals[set_name] += counts;
    }
  }

  if (report.o_totals.ref_tokens > 0) report.o_wer = Wer(report.o_totals);
  if (report.n_totals.ref_tokens > 0) report.n_wer = Wer(report.n_totals);
  for (const auto &[set_name, counts] : report.rare_totals) {
    report.r_wer[set_name] = RareWerRatio(counts);
  }

  report.per_utterance = std::move(per_utterance);
  return report;
}

ManifestScore ScoreRecords(std::span<const UtteranceRecord> records,
                           std::span<const RareWordSet> rare_sets,
                           const NormalizationConfig &config, int workers,
                           const AbbreviationTable *abbreviations) {
  std::vector<size_t> scoreable;
  ManifestScore result;
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].hyp_text) {
      scoreable.push_back(i);
    } else {
      result.skipped_ids.push_back(records[i].id);
    }
  }

  result.scored.resize(scoreable.size());
  ParallelFor(scoreable.size(), workers, [&](size_t k) {
    const UtteranceRecord &rec = records[scoreable[k]];
    result.scored[k] = ScoreUtterance(rec.id, rec.primary_text, *rec.hyp_text,
                                      rare_sets, config, abbreviations);
  });
  return result;
}

}  // namespace rarewer
