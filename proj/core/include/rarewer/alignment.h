// core/include/rarewer/alignment.h

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

#ifndef RAREWER_ALIGNMENT_H_
#define RAREWER_ALIGNMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rarewer/text_norm.h"

namespace rarewer {

enum class EditOpKind { kCorrect, kSubstitute, kDelete, kInsert };

char EditOpLetter(EditOpKind kind);

// Correct/Substitute carry both indices; Delete only ref_index; Insert only
// hyp_index.
struct EditOp {
  EditOpKind kind;
  std::optional<int64_t> ref_index;
  std::optional<int64_t> hyp_index;

  friend bool operator==(const EditOp &, const EditOp &) = default;
};

// Minimal-cost edit script between a reference and a hypothesis under unit
// costs.  Both index streams strictly increase along ops and cover their
// ranges exactly once.
struct Alignment {
  std::vector<EditOp> ops;
  int64_t ref_len = 0;
  int64_t hyp_len = 0;

  // substitutions + deletions + insertions; equals the Levenshtein distance.
  int64_t EditCost() const;

  friend bool operator==(const Alignment &, const Alignment &) = default;
};

struct ErrorCounts {
  int64_t correct = 0;
  int64_t substitutions = 0;
  int64_t deletions = 0;
  int64_t insertions = 0;
  int64_t ref_tokens = 0;

  int64_t TotalErrors() const { return substitutions + deletions + insertions; }

  ErrorCounts &operator+=(const ErrorCounts &other);

  friend bool operator==(const ErrorCounts &, const ErrorCounts &) = default;
};

// Minimal-cost alignment with a deterministic backtrace.  When costs tie the
// op is chosen by fixed priority Correct > Substitute > Delete > Insert, so
// rare-word attribution is reproducible across machines.
// Throws kModeMismatch when the sequences were tokenized under different
// modes.
Alignment Align(const TokenSeq &ref, const TokenSeq &hyp);

// Tallies ops by kind; ref_tokens = a.ref_len.
ErrorCounts CountErrors(const Alignment &a);

// Debug serialization, one op per line:
// C|S|D|I<TAB>ref_idx|-<TAB>hyp_idx|-<TAB>ref_token|-<TAB>hyp_token|-
std::string FormatAlignment(const Alignment &a, const TokenSeq &ref,
                            const TokenSeq &hyp);

}  // namespace rarewer

#endif  // RAREWER_ALIGNMENT_H_
