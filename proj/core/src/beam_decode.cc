// core/src/beam_decode.cc

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

#include "rarewer/beam_decode.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rarewer/error.h"

namespace rarewer {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool Better(const BeamHypothesis &a, const BeamHypothesis &b) {
  if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
  return a.tokens < b.tokens;
}

}  // namespace

void DecodeConfig::Validate() const {
  if (beam_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "beam_size must be >= 1");
  }
  if (max_len < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_len must be >= 1");
  }
  if (no_repeat_n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "no_repeat_n must be >= 0");
  }
}

std::vector<double> ApplyNoRepeatNgram(std::span<const int> prefix, int n,
                                       std::vector<double> scores) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidN, "no-repeat n-gram requires n >= 2");
  }
  const size_t len = prefix.size();
  const size_t context = static_cast<size_t>(n) - 1;
  if (len < context) return scores;

  // Any window prefix[i..i+n) whose first n-1 tokens equal the current
  // suffix bans its final token.
  std::span<const int> suffix = prefix.subspan(len - context, context);
  for (size_t i = 0; i + static_cast<size_t>(n) <= len; ++i) {
    if (std::equal(suffix.begin(), suffix.end(), prefix.begin() + i)) {
      int banned = prefix[i + context];
      if (banned >= 0 && static_cast<size_t>(banned) < scores.size()) {
        scores[static_cast<size_t>(banned)] = kNegInf;
      }
    }
  }
  return scores;
}

DecodeResult BeamSearch(const Scorer &scorer, const DecodeConfig &config) {
  config.Validate();
  const int vocab = scorer.vocab_size();
  if (vocab < 1 || scorer.end_token() < 0 || scorer.end_token() >= vocab) {
    throw Error(ErrorCode::kInvalidScorer,
                "scorer must expose a non-empty vocabulary containing the end "
                "token");
  }

  DecodeResult result;
  std::vector<BeamHypothesis> beam{BeamHypothesis{}};

  for (int step = 0; step < config.max_len; ++step) {
    std::vector<BeamHypothesis> pool;
    bool expanded_any = false;
    bool had_unfinished = false;

    for (const BeamHypothesis &hyp : beam) {
      if (hyp.finished) {
        pool.push_back(hyp);
        continue;
      }
      had_unfinished = true;
      std::vector<double> scores = scorer.Score(hyp.tokens);
      if (static_cast<int>(scores.size()) != vocab) {
        throw Error(ErrorCode::kInvalidScorer,
                    "scorer returned a distribution of the wrong size");
      }
      if (config.no_repeat_n >= 2) {
        scores = ApplyNoRepeatNgram(hyp.tokens, config.no_repeat_n,
                                    std::move(scores));
      }
      for (int t = 0; t < vocab; ++t) {
        double s = scores[static_cast<size_t>(t)];
        if (s == kNegInf) continue;
        if (std::isnan(s)) {
          throw Error(ErrorCode::kInvalidScorer, "scorer produced NaN");
        }
        BeamHypothesis next;
        next.tokens = hyp.tokens;
        next.tokens.push_back(t);
        next.log_prob = hyp.log_prob + s;
        next.finished = (t == scorer.end_token());
        pool.push_back(std::move(next));
        expanded_any = true;
      }
    }

    if (had_unfinished && !expanded_any) {
      // Dead end: keep the unfinished survivors as "best found so far".
      result.all_pruned = true;
      for (const BeamHypothesis &hyp : beam) {
        if (!hyp.finished) pool.push_back(hyp);
      }
    }
    if (pool.empty()) {
      beam.clear();
      break;
    }

    std::sort(pool.begin(), pool.end(), Better);
    if (pool.size() > static_cast<size_t>(config.beam_size)) {
      pool.resize(static_cast<size_t>(config.beam_size));
    }
    beam = std::move(pool);

    bool any_unfinished = false;
    for (const BeamHypothesis &hyp : beam) {
      if (!hyp.finished) any_unfinished = true;
    }
    if (!any_unfinished || result.all_pruned) break;
  }

  std::sort(beam.begin(), beam.end(), Better);
  result.hypotheses = std::move(beam);
  return result;
}

}  // namespace rarewer
