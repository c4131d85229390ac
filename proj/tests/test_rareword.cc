// tests/test_rareword.cc

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

#include "rarewer/rareword.h"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "rarewer/error.h"
#include "testutil.h"

using namespace rarewer;

namespace {

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected a rarewer::Error");
  return ErrorCode::kInvalidArgument;
}

TokenSeq NormSeq(std::vector<std::string> tokens) {
  return TokenSeq{std::move(tokens), NormalizationMode::kNormalized};
}

}  // namespace

TEST_CASE("load collapses duplicates and skips comments and blanks") {
  testutil::TempDir tmp;
  std::string path = tmp.File("meds.txt");
  testutil::WriteFile(path, "# meds\nAmoxicillin\namoxicillin\n\nwarfarin\n");
  RareWordSet set = LoadRareList(path);
  CHECK(set.words() == std::set<std::string>{"amoxicillin", "warfarin"});
  CHECK(set.name() == "meds");
  CHECK(set.source() == RareWordSource::kManualList);
  CHECK(!set.threshold().has_value());
}

TEST_CASE("load reports malformed and empty lists") {
  testutil::TempDir tmp;

  std::string multi = tmp.File("multi.txt");
  testutil::WriteFile(multi, "high blood pressure\n");
  CHECK(CodeOf([&] { LoadRareList(multi); }) == ErrorCode::kMalformedEntry);
  try {
    LoadRareList(multi);
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find(":1") != std::string::npos);
  }

  std::string empty = tmp.File("empty.txt");
  testutil::WriteFile(empty, "");
  CHECK(CodeOf([&] { LoadRareList(empty); }) == ErrorCode::kEmptyList);

  CHECK(CodeOf([&] { LoadRareList(tmp.File("missing.txt")); }) ==
        ErrorCode::kFileUnreadable);
}

TEST_CASE("save emits headers and sorted words; load restores everything") {
  testutil::TempDir tmp;
  RareWordSet set = RareWordSet::Create(
      "Primock57 Set 1", {"warfarin", "amoxicillin"},
      RareWordSource::kManualList);
  std::string path = tmp.File("set1.txt");
  SaveRareList(set, path);

  std::string content = testutil::ReadFile(path);
  CHECK(content ==
        "# name=Primock57 Set 1\n"
        "# source=manual\n"
        "amoxicillin\n"
        "warfarin\n");

  RareWordSet loaded = LoadRareList(path);
  CHECK(loaded == set);
}

TEST_CASE("round-trip holds for frequency-derived sets too") {
  testutil::TempDir tmp;
  RareWordSet set = RareWordSet::Create("freq", {"qux", "zed"},
                                        RareWordSource::kFrequencyDerived, 2);
  std::string path = tmp.File("freq.txt");
  SaveRareList(set, path);
  RareWordSet loaded = LoadRareList(path);
  CHECK(loaded == set);
  CHECK(loaded.threshold() == 2);

  // Byte stability of a second save.
  std::string again = tmp.File("freq2.txt");
  SaveRareList(loaded, again);
  CHECK(testutil::ReadFile(path) == testutil::ReadFile(again));
}

TEST_CASE("construction enforces invariants") {
  CHECK(CodeOf([] {
          RareWordSet::Create("x", {}, RareWordSource::kManualList);
        }) == ErrorCode::kEmptyRareSet);
  CHECK(CodeOf([] {
          RareWordSet::Create("bad\nname", {"word"},
                              RareWordSource::kManualList);
        }) == ErrorCode::kInvalidArgument);
  // Words must be normalization-closed.
  CHECK(CodeOf([] {
          RareWordSet::Create("x", {"Upper"}, RareWordSource::kManualList);
        }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] {
          RareWordSet::Create("x", {"two words"},
                              RareWordSource::kManualList);
        }) == ErrorCode::kInvalidArgument);
  // Threshold only on frequency-derived sets.
  CHECK(CodeOf([] {
          RareWordSet::Create("x", {"word"}, RareWordSource::kManualList, 3);
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("frequency extraction applies the length and numeral screens") {
  SUBCASE("short tokens are screened out entirely") {
    std::vector<TokenSeq> corpus = {NormSeq({"a", "b"}), NormSeq({"a", "c"})};
    CHECK(CodeOf([&] {
            ExtractByFrequency(corpus, FrequencyExtractOptions{});
          }) == ErrorCode::kEmptyResult);
  }

  SUBCASE("counts are per corpus, not per utterance") {
    std::vector<TokenSeq> corpus = {NormSeq({"take", "amoxicillin"}),
                                    NormSeq({"take", "aspirin"}),
                                    NormSeq({"take", "aspirin"})};
    RareWordSet set = ExtractByFrequency(corpus, FrequencyExtractOptions{});
    CHECK(set.words() == std::set<std::string>{"amoxicillin"});
    CHECK(set.source() == RareWordSource::kFrequencyDerived);
    CHECK(set.threshold() == 1);
  }

  SUBCASE("saturated threshold returns every eligible token") {
    std::vector<TokenSeq> corpus = {NormSeq({"alpha", "beta", "alpha"})};
    FrequencyExtractOptions opts;
    opts.max_occurrences = 100;
    RareWordSet set = ExtractByFrequency(corpus, opts);
    CHECK(set.words() == std::set<std::string>{"alpha", "beta"});
  }

  SUBCASE("numerals are excluded unless kept") {
    std::vector<TokenSeq> corpus = {NormSeq({"12345", "words"})};
    FrequencyExtractOptions opts;
    RareWordSet without = ExtractByFrequency(corpus, opts);
    CHECK(without.words() == std::set<std::string>{"words"});
    opts.keep_numerals = true;
    opts.name = "nums";
    RareWordSet with = ExtractByFrequency(corpus, opts);
    CHECK(with.words() == std::set<std::string>{"12345", "words"});
  }
}

TEST_CASE("frequency extraction is order-independent") {
  std::mt19937 rng(555);
  std::vector<TokenSeq> corpus;
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> toks;
    for (int j = 0; j < 6; ++j) toks.push_back(testutil::RandomWord(rng, 3, 7));
    corpus.push_back(NormSeq(toks));
  }
  FrequencyExtractOptions opts;
  opts.max_occurrences = 2;
  RareWordSet a = ExtractByFrequency(corpus, opts);
  std::shuffle(corpus.begin(), corpus.end(), rng);
  RareWordSet b = ExtractByFrequency(corpus, opts);
  CHECK(a.words() == b.words());
}

TEST_CASE("random rare lists round-trip byte-stably") {
  std::mt19937 rng(909);
  testutil::TempDir tmp;
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::string> words;
    std::uniform_int_distribution<int> n_dist(1, 20);
    int n = n_dist(rng);
    for (int i = 0; i < n; ++i) words.insert(testutil::RandomWord(rng, 3, 10));
    RareWordSet set = RareWordSet::Create(
        "set" + std::to_string(trial), std::move(words),
        RareWordSource::kManualList);

    std::string p1 = tmp.File("a.txt");
    std::string p2 = tmp.File("b.txt");
    SaveRareList(set, p1);
    RareWordSet loaded = LoadRareList(p1);
    CHECK(loaded == set);
    SaveRareList(loaded, p2);
    CHECK(testutil::ReadFile(p1) == testutil::ReadFile(p2));
  }
}
