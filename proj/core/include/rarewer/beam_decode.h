// core/include/rarewer/beam_decode.h

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

#ifndef RAREWER_BEAM_DECODE_H_
#define RAREWER_BEAM_DECODE_H_

#include <span>
#include <vector>

namespace rarewer {

// Pluggable autoregressive scorer.  Score returns one log-probability per
// vocabulary token for the continuation of `prefix`; values are finite or
// -inf (pre-masked).  A reference test scorer must be normalized.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual int vocab_size() const = 0;
  virtual int end_token() const = 0;
  virtual std::vector<double> Score(std::span<const int> prefix) const = 0;

  // Scorers that cannot tolerate concurrent Score calls on distinct
  // prefixes declare themselves serial; the decoder honors the flag (the
  // current decoder scores sequentially either way).
  virtual bool serial_only() const { return false; }
};

struct BeamHypothesis {
  std::vector<int> tokens;
  double log_prob = 0.0;
  bool finished = false;  // iff last token == end_token
};

struct DecodeConfig {
  int beam_size = 8;
  // Block any token that would duplicate a contiguous n-gram already in the
  // hypothesis; 0 disables (values < 2 never trigger the mask).
  int no_repeat_n = 6;
  int max_len = 64;

  void Validate() const;  // throws kInvalidArgument
};

// Masks to -inf every candidate t for which the n-gram
// prefix[-(n-1):] + [t] already occurs contiguously in prefix; a prefix
// shorter than n-1 passes through unchanged.  Throws kInvalidN when n < 2.
std::vector<double> ApplyNoRepeatNgram(std::span<const int> prefix, int n,
                                       std::vector<double> scores);

struct DecodeResult {
  // Sorted by log_prob descending; ties broken toward the lexicographically
  // smaller token sequence.
  std::vector<BeamHypothesis> hypotheses;
  // Set when some step masked every expansion to -inf; the hypotheses are
  // the best found up to that point.
  bool all_pruned = false;
};

// Standard beam search: each step expands every unfinished hypothesis with
// all vocabulary tokens, applies the no-repeat mask when configured, and
// keeps the beam_size best by cumulative log-probability (finished
// hypotheses compete without further expansion).  Stops when all survivors
// are finished or reach max_len.  Finished hypotheses are not
// length-normalized.
DecodeResult BeamSearch(const Scorer &scorer, const DecodeConfig &config);

}  // namespace rarewer

#endif  // RAREWER_BEAM_DECODE_H_
