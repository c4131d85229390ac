// tests/test_alignment.cc

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

#include <doctest.h>

#include <random>

#include "rarewer/error.h"
#include "testutil.h"

using namespace rarewer;

namespace {

TokenSeq Seq(std::vector<std::string> tokens,
             NormalizationMode mode = NormalizationMode::kNormalized) {
  return TokenSeq{std::move(tokens), mode};
}

// Checks the Alignment invariants: index streams strictly increase and cover
// 0..len-1 exactly once.
void CheckWellFormed(const Alignment &a) {
  int64_t next_ref = 0, next_hyp = 0;
  for (const EditOp &op : a.ops) {
    switch (op.kind) {
      case EditOpKind::kCorrect:
      case EditOpKind::kSubstitute:
        REQUIRE(op.ref_index.has_value());
        REQUIRE(op.hyp_index.has_value());
        CHECK(*op.ref_index == next_ref++);
        CHECK(*op.hyp_index == next_hyp++);
        break;
      case EditOpKind::kDelete:
        REQUIRE(op.ref_index.has_value());
        CHECK(!op.hyp_index.has_value());
        CHECK(*op.ref_index == next_ref++);
        break;
      case EditOpKind::kInsert:
        REQUIRE(op.hyp_index.has_value());
        CHECK(!op.ref_index.has_value());
        CHECK(*op.hyp_index == next_hyp++);
        break;
    }
  }
  CHECK(next_ref == a.ref_len);
  CHECK(next_hyp == a.hyp_len);
}

}  // namespace

TEST_CASE("identity alignment is all Correct") {
  Alignment a = Align(Seq({"a", "b"}), Seq({"a", "b"}));
  CHECK(a.ops.size() == 2);
  CHECK(a.EditCost() == 0);
  for (const EditOp &op : a.ops) CHECK(op.kind == EditOpKind::kCorrect);
  CheckWellFormed(a);
}

TEST_CASE("single deletion is found and placed") {
  Alignment a =
      Align(Seq({"the", "quick", "brown", "fox"}), Seq({"the", "quick", "fox"}));
  CHECK(a.EditCost() == 1);
  ErrorCounts c = CountErrors(a);
  CHECK(c.correct == 3);
  CHECK(c.deletions == 1);
  CHECK(c.substitutions == 0);
  CHECK(c.insertions == 0);
  CHECK(c.ref_tokens == 4);
  // The deleted token is "brown" (ref index 2).
  bool found = false;
  for (const EditOp &op : a.ops) {
    if (op.kind == EditOpKind::kDelete) {
      CHECK(*op.ref_index == 2);
      found = true;
    }
  }
  CHECK(found);
  CheckWellFormed(a);
}

TEST_CASE("empty reference forces insertions") {
  Alignment a = Align(Seq({}), Seq({"x", "y"}));
  CHECK(a.EditCost() == 2);
  CHECK(a.ops.size() == 2);
  for (const EditOp &op : a.ops) CHECK(op.kind == EditOpKind::kInsert);
  CheckWellFormed(a);

  ErrorCounts c = CountErrors(a);
  CHECK(c.ref_tokens == 0);
  CHECK(c.insertions == 2);
}

TEST_CASE("single forced substitution") {
  ErrorCounts c = CountErrors(Align(Seq({"a"}), Seq({"b"})));
  CHECK(c == ErrorCounts{0, 1, 0, 0, 1});
}

TEST_CASE("mode mismatch is rejected") {
  CHECK_THROWS_AS(
      Align(Seq({"a"}, NormalizationMode::kOrthographic), Seq({"a"})), Error);
  try {
    Align(Seq({"a"}, NormalizationMode::kOrthographic), Seq({"a"}));
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kModeMismatch);
  }
}

TEST_CASE("error counts satisfy the conservation invariant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> len_dist(0, 8);
    std::uniform_int_distribution<int> sym_dist(0, 2);
    auto gen = [&](int n) {
      std::vector<std::string> v;
      for (int i = 0; i < n; ++i)
        v.push_back(std::string(1, static_cast<char>('a' + sym_dist(rng))));
      return v;
    };
    TokenSeq ref = Seq(gen(len_dist(rng)));
    TokenSeq hyp = Seq(gen(len_dist(rng)));
    Alignment a = Align(ref, hyp);
    CheckWellFormed(a);
    ErrorCounts c = CountErrors(a);
    CHECK(c.correct + c.substitutions + c.deletions == c.ref_tokens);
    CHECK(c.ref_tokens == static_cast<int64_t>(ref.tokens.size()));
  }
}

TEST_CASE("edit cost matches the recursive oracle on random pairs") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> len_dist(0, 10);
  std::uniform_int_distribution<int> sym_dist(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    auto gen = [&](int n) {
      std::vector<std::string> v;
      for (int i = 0; i < n; ++i)
        v.push_back(std::string(1, static_cast<char>('a' + sym_dist(rng))));
      return v;
    };
    std::vector<std::string> ref = gen(len_dist(rng));
    std::vector<std::string> hyp = gen(len_dist(rng));
    CHECK(Align(Seq(ref), Seq(hyp)).EditCost() ==
          testutil::RecursiveEditDistance(ref, hyp));
  }
}

TEST_CASE("triangle inequality on random triples") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> len_dist(0, 6);
  std::uniform_int_distribution<int> sym_dist(0, 2);
  auto gen = [&](int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
      v.push_back(std::string(1, static_cast<char>('a' + sym_dist(rng))));
    return v;
  };
  for (int trial = 0; trial < 200; ++trial) {
    TokenSeq a = Seq(gen(len_dist(rng)));
    TokenSeq b = Seq(gen(len_dist(rng)));
    TokenSeq c = Seq(gen(len_dist(rng)));
    int64_t ac = Align(a, c).EditCost();
    int64_t ab = Align(a, b).EditCost();
    int64_t bc = Align(b, c).EditCost();
    CHECK(ac <= ab + bc);
  }
}

TEST_CASE("alignments are byte-identical across repeated calls") {
  TokenSeq ref = Seq({"a", "b", "a", "c", "b"});
  TokenSeq hyp = Seq({"b", "a", "c", "c"});
  Alignment first = Align(ref, hyp);
  for (int i = 0; i < 5; ++i) {
    CHECK(Align(ref, hyp) == first);
    CHECK(FormatAlignment(Align(ref, hyp), ref, hyp) ==
          FormatAlignment(first, ref, hyp));
  }
}

TEST_CASE("tie-break prefers Correct, then Substitute, then Delete") {
  // ref=a, hyp=b then c: one substitution plus one insertion in some order;
  // the tie-break pins the exact script.
  Alignment a = Align(Seq({"a"}), Seq({"b", "c"}));
  CHECK(a.EditCost() == 2);
  REQUIRE(a.ops.size() == 2);
  // Backtracing from the end prefers Substitute at the rightmost column
  // over Insert, leaving the insertion first.
  CHECK(a.ops[0].kind == EditOpKind::kInsert);
  CHECK(a.ops[1].kind == EditOpKind::kSubstitute);
  CheckWellFormed(a);
}

TEST_CASE("serialization format is one op per line") {
  TokenSeq ref = Seq({"the", "cat"});
  TokenSeq hyp = Seq({"the"});
  Alignment a = Align(ref, hyp);
  CHECK(FormatAlignment(a, ref, hyp) ==
        "C\t0\t0\tthe\tthe\n"
        "D\t1\t-\tcat\t-\n");
}
