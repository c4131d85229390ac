// benchmarks/bench_main.cc

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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "rarewer/alignment.h"
#include "rarewer/beam_decode.h"
#include "rarewer/metrics.h"
#include "rarewer/rareword.h"
#include "rarewer/scorers.h"
#include "rarewer/text_norm.h"

namespace {

using namespace rarewer;

std::string RandomWord(std::mt19937 &rng) {
  std::uniform_int_distribution<int> len(2, 9);
  std::uniform_int_distribution<int> ch(0, 25);
  int n = len(rng);
  std::string w;
  for (int i = 0; i < n; ++i) w.push_back(static_cast<char>('a' + ch(rng)));
  return w;
}

std::pair<std::string, std::string> MakePair(std::mt19937 &rng, int words) {
  std::uniform_int_distribution<int> err(0, 9);
  std::string ref, hyp;
  for (int w = 0; w < words; ++w) {
    std::string word = RandomWord(rng);
    if (w) ref += ' ', hyp += ' ';
    ref += word;
    hyp += err(rng) == 0 ? "wrong" : word;
  }
  return {ref, hyp};
}

void BM_TokenizeNormalized(benchmark::State &state) {
  std::mt19937 rng(1);
  auto [text, unused] = MakePair(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Tokenize(text, NormalizationMode::kNormalized));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TokenizeNormalized)->Arg(10)->Arg(30)->Arg(100);

void BM_Align(benchmark::State &state) {
  std::mt19937 rng(2);
  auto [ref_text, hyp_text] = MakePair(rng, static_cast<int>(state.range(0)));
  TokenSeq ref = Tokenize(ref_text, NormalizationMode::kNormalized);
  TokenSeq hyp = Tokenize(hyp_text, NormalizationMode::kNormalized);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Align(ref, hyp));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Align)->Arg(10)->Arg(30)->Arg(100)->Arg(300);

void BM_ScoreUtterance(benchmark::State &state) {
  std::mt19937 rng(3);
  auto [ref, hyp] = MakePair(rng, 30);
  std::vector<RareWordSet> sets;
  sets.push_back(RareWordSet::Create("bench", {"wrong", "missing"},
                                     RareWordSource::kManualList));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreUtterance("u", ref, hyp, sets));
  }
}
BENCHMARK(BM_ScoreUtterance);

void BM_BeamSearchCharNgram(benchmark::State &state) {
  std::string text;
  for (int i = 0; i < 32; ++i) text += "the cat sat on the mat ";
  CharNgramScorer scorer(text, 4, 0.01);
  DecodeConfig config;
  config.beam_size = 8;
  config.no_repeat_n = 6;
  config.max_len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BeamSearch(scorer, config));
  }
}
BENCHMARK(BM_BeamSearchCharNgram)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
