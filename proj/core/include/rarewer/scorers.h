// core/include/rarewer/scorers.h

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

#ifndef RAREWER_SCORERS_H_
#define RAREWER_SCORERS_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rarewer/beam_decode.h"

namespace rarewer {

// Deterministic table-driven scorer with explicit per-prefix distributions.
//
// JSON shape:
//   {
//     "vocab": ["a", "b", "</s>"],
//     "end_token": "</s>",
//     "entries": {"": [0.5, 0.3, 0.2], "a": [0.1, 0.1, 0.8]},
//     "default": [0.4, 0.4, 0.2]
//   }
// Entry keys are space-joined token names; values are probabilities that
// must sum to 1 (stored as logs; zero becomes -inf).  A prefix with no entry
// falls back to "default"; without a default it is an error.
class TableScorer final : public Scorer {
 public:
  TableScorer(std::vector<std::string> vocab, const std::string &end_token,
              std::map<std::vector<int>, std::vector<double>> prob_entries,
              std::vector<double> default_probs = {});

  static TableScorer FromJsonText(std::string_view text);
  static TableScorer FromJsonFile(const std::string &path);

  int vocab_size() const override;
  int end_token() const override;
  std::vector<double> Score(std::span<const int> prefix) const override;

  const std::vector<std::string> &vocab() const { return vocab_; }
  int TokenId(const std::string &name) const;  // -1 when absent
  const std::string &TokenName(int id) const;
  std::string Detokenize(std::span<const int> tokens) const;

 private:
  std::vector<std::string> vocab_;
  int end_token_ = 0;
  std::map<std::vector<int>, std::vector<double>> entries_;  // log-probs
  std::vector<double> default_log_probs_;                    // empty if none
};

// Character-level n-gram model with add-alpha smoothing, trained on a small
// text.  The vocabulary is the sorted set of characters in the text plus an
// end-of-sequence token (the final id).  Intended for decoder repetition
// tests: trained on loopy text it gladly loops forever.
class CharNgramScorer final : public Scorer {
 public:
  CharNgramScorer(std::string_view training_text, int order,
                  double alpha = 0.1);
  static CharNgramScorer FromFile(const std::string &path, int order,
                                  double alpha = 0.1);

  int vocab_size() const override;
  int end_token() const override;
  std::vector<double> Score(std::span<const int> prefix) const override;

  std::string Detokenize(std::span<const int> tokens) const;

 private:
  int order_;
  double alpha_;
  std::vector<char> alphabet_;  // token id -> character; end token is last
  std::map<std::vector<int>, std::map<int, int>> counts_;  // context -> next
  std::map<std::vector<int>, int> context_totals_;
};

}  // namespace rarewer

#endif  // RAREWER_SCORERS_H_
