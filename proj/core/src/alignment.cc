// core/src/alignment.cc

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

#include "rarewer/alignment.h"

#include <algorithm>

#include "rarewer/error.h"

namespace rarewer {

char EditOpLetter(EditOpKind kind) {
  switch (kind) {
    case EditOpKind::kCorrect:
      return 'C';
    case EditOpKind::kSubstitute:
      return 'S';
    case EditOpKind::kDelete:
      return 'D';
    case EditOpKind::kInsert:
      return 'I';
  }
  return '?';
}

int64_t Alignment::EditCost() const {
  int64_t cost = 0;
  for (const EditOp &op : ops) {
    if (op.kind != EditOpKind::kCorrect) ++cost;
  }
  return cost;
}

ErrorCounts &ErrorCounts::operator+=(const ErrorCounts &other) {
  correct += other.correct;
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  ref_tokens += other.ref_tokens;
  return *this;
}

Alignment Align(const TokenSeq &ref, const TokenSeq &hyp) {
  if (ref.mode != hyp.mode) {
    throw Error(ErrorCode::kModeMismatch,
                std::string("cannot align ") + NormalizationModeName(ref.mode) +
                    " reference against " + NormalizationModeName(hyp.mode) +
                    " hypothesis");
  }

  const size_t m = ref.tokens.size();
  const size_t n = hyp.tokens.size();
  const size_t stride = n + 1;

  // cost[i*stride + j] = edit distance between ref[0..i) and hyp[0..j).
  std::vector<int32_t> cost((m + 1) * stride);
  for (size_t j = 0; j <= n; ++j) cost[j] = static_cast<int32_t>(j);
  for (size_t i = 1; i <= m; ++i) {
    cost[i * stride] = static_cast<int32_t>(i);
    for (size_t j = 1; j <= n; ++j) {
      int32_t diag = cost[(i - 1) * stride + (j - 1)] +
                     (ref.tokens[i - 1] == hyp.tokens[j - 1] ? 0 : 1);
      int32_t del = cost[(i - 1) * stride + j] + 1;
      int32_t ins = cost[i * stride + (j - 1)] + 1;
      cost[i * stride + j] = std::min({diag, del, ins});
    }
  }

  // Backtrace from (m, n); ties resolve Correct > Substitute > Delete >
  // Insert.
  Alignment a;
  a.ref_len = static_cast<int64_t>(m);
  a.hyp_len = static_cast<int64_t>(n);
  a.ops.reserve(std::max(m, n));
  size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const int32_t here = cost[i * stride + j];
    if (i > 0 && j > 0 && ref.tokens[i - 1] == hyp.tokens[j - 1] &&
        here == cost[(i - 1) * stride + (j - 1)]) {
      a.ops.push_back({EditOpKind::kCorrect, static_cast<int64_t>(i - 1),
                       static_cast<int64_t>(j - 1)});
      --i, --j;
    } else if (i > 0 && j > 0 && here == cost[(i - 1) * stride + (j - 1)] + 1 &&
               ref.tokens[i - 1] != hyp.tokens[j - 1]) {
      a.ops.push_back({EditOpKind::kSubstitute, static_cast<int64_t>(i - 1),
                       static_cast<int64_t>(j - 1)});
      --i, --j;
    } else if (i > 0 && here == cost[(i - 1) * stride + j] + 1) {
      a.ops.push_back(
          {EditOpKind::kDelete, static_cast<int64_t>(i - 1), std::nullopt});
      --i;
    } else {
      a.ops.push_back(
          {EditOpKind::kInsert, std::nullopt, static_cast<int64_t>(j - 1)});
      --j;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

ErrorCounts CountErrors(const Alignment &a) {
  ErrorCounts counts;
  counts.ref_tokens = a.ref_len;
  for (const EditOp &op : a.ops) {
    switch (op.kind) {
      case EditOpKind::kCorrect:
        ++counts.correct;
        break;
      case EditOpKind::kSubstitute:
        ++counts.substitutions;
        break;
      case EditOpKind::kDelete:
        ++counts.deletions;
        break;
      case EditOpKind::kInsert:
        ++counts.insertions;
        break;
    }
  }
  return counts;
}

std::string FormatAlignment(const Alignment &a, const TokenSeq &ref,
                            const TokenSeq &hyp) {
  std::string out;
  for (const EditOp &op : a.ops) {
    out.push_back(EditOpLetter(op.kind));
    out.push_back('\t');
    out += op.ref_index ? std::to_string(*op.ref_index) : "-";
    out.push_back('\t');
    out += op.hyp_index ? std::to_string(*op.hyp_index) : "-";
    out.push_back('\t');
    out += op.ref_index ? ref.tokens[static_cast<size_t>(*op.ref_index)] : "-";
    out.push_back('\t');
    out += op.hyp_index ? hyp.tokens[static_cast<size_t>(*op.hyp_index)] : "-";
    out.push_back('\n');
  }
  return out;
}

}  // namespace rarewer
