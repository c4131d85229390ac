// tests/test_manifest_io.cc

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

#include "rarewer/manifest_io.h"

#include <doctest.h>

#include <random>

#include "rarewer/error.h"
#include "testutil.h"

using namespace rarewer;

namespace {

Manifest RandomManifest(std::mt19937 &rng, int max_records = 20) {
  std::uniform_int_distribution<int> n_dist(0, max_records);
  std::uniform_real_distribution<double> dur_dist(0.0, 30.0);
  std::uniform_int_distribution<int> opt_dist(0, 3);
  Manifest m;
  int n = n_dist(rng);
  for (int i = 0; i < n; ++i) {
    UtteranceRecord rec;
    rec.id = "utt-" + std::to_string(i) + "-" + std::to_string(rng());
    rec.duration_s = dur_dist(rng);
    rec.primary_text = testutil::RandomRawText(rng);
    if (opt_dist(rng) != 0) rec.alt_text = testutil::RandomRawText(rng);
    if (opt_dist(rng) != 0) rec.hyp_text = testutil::RandomRawText(rng);
    if (opt_dist(rng) == 0) rec.audio_path = "audio/" + rec.id + ".wav";
    m.records.push_back(std::move(rec));
  }
  return m;
}

}  // namespace

TEST_CASE("minimal well-formed row parses") {
  testutil::TempDir tmp;
  std::string path = tmp.File("m.jsonl");
  testutil::WriteFile(path,
                      "{\"id\":\"u1\",\"duration_s\":3.2,"
                      "\"primary_text\":\"hello\"}\n");
  ReadResult r = ReadManifest(path, true);
  REQUIRE(r.manifest.records.size() == 1);
  CHECK(r.manifest.records[0].id == "u1");
  CHECK(r.manifest.records[0].duration_s == 3.2);
  CHECK(r.manifest.records[0].primary_text == "hello");
  CHECK(!r.manifest.records[0].alt_text);
  CHECK(r.errors.empty());
  CHECK(r.manifest.schema_version == "1");
}

TEST_CASE("lenient mode collects errors, loads the good lines") {
  testutil::TempDir tmp;
  std::string path = tmp.File("m.jsonl");
  testutil::WriteFile(
      path,
      "{\"id\":\"u1\",\"duration_s\":1,\"primary_text\":\"a\"}\n"
      "{\"id\":\"u2\",\"duration_s\":-1,\"primary_text\":\"b\"}\n"
      "not json at all\n"
      "{\"duration_s\":1,\"primary_text\":\"c\"}\n"
      "{\"id\":\"u1\",\"duration_s\":2,\"primary_text\":\"d\"}\n"
      "{\"id\":\"u3\",\"duration_s\":1,\"primary_text\":\"e\"}\n");
  ReadResult r = ReadManifest(path, false);
  CHECK(r.manifest.records.size() == 2);  // u1 and u3
  REQUIRE(r.errors.size() == 4);
  CHECK(r.errors[0].reason == IngestReason::kBadDuration);
  CHECK(r.errors[0].line_number == 2);
  CHECK(r.errors[1].reason == IngestReason::kBadSyntax);
  CHECK(r.errors[2].reason == IngestReason::kMissingField);
  CHECK(r.errors[3].reason == IngestReason::kDuplicateId);
  // The duplicate error names the original line.
  CHECK(r.errors[3].detail.find("line 1") != std::string::npos);
}

TEST_CASE("strict mode throws at the first bad line") {
  testutil::TempDir tmp;
  std::string path = tmp.File("m.jsonl");
  testutil::WriteFile(path,
                      "{\"id\":\"u1\",\"duration_s\":1,\"primary_text\":"
                      "\"a\"}\n{\"id\":5}\n");
  CHECK_THROWS_AS(ReadManifest(path, true), Error);
}

TEST_CASE("invalid UTF-8 is a BadEncoding error") {
  testutil::TempDir tmp;
  std::string path = tmp.File("m.jsonl");
  testutil::WriteFile(path,
                      "{\"id\":\"u1\",\"duration_s\":1,\"primary_text\":"
                      "\"a\xff\x80\"}\n");
  ReadResult r = ReadManifest(path, false);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].reason == IngestReason::kBadEncoding);
}

TEST_CASE("wrong-typed optional fields are rejected") {
  testutil::TempDir tmp;
  std::string path = tmp.File("m.jsonl");
  testutil::WriteFile(path,
                      "{\"id\":\"u1\",\"duration_s\":1,\"primary_text\":"
                      "\"a\",\"hyp_text\":42}\n");
  ReadResult r = ReadManifest(path, false);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].reason == IngestReason::kMissingField);
}

TEST_CASE("write emits fixed key order and omits absent optionals") {
  testutil::TempDir tmp;
  Manifest m;
  UtteranceRecord rec;
  rec.id = "u1";
  rec.duration_s = 20.0;
  rec.primary_text = "hello";
  m.records.push_back(rec);
  rec.id = "u2";
  rec.hyp_text = "world";
  rec.alt_text = "caption";
  m.records.push_back(rec);

  std::string path = tmp.File("m.jsonl");
  WriteManifest(m, path);
  CHECK(testutil::ReadFile(path) ==
        "{\"id\":\"u1\",\"duration_s\":20.0,\"primary_text\":\"hello\"}\n"
        "{\"id\":\"u2\",\"duration_s\":20.0,\"primary_text\":\"hello\","
        "\"alt_text\":\"caption\",\"hyp_text\":\"world\"}\n");
  CHECK(testutil::ReadFile(path + ".meta") ==
        "{\"schema_version\":\"1\"}\n");
}

TEST_CASE("empty manifest writes an empty file and reads back empty") {
  testutil::TempDir tmp;
  std::string path = tmp.File("m.jsonl");
  WriteManifest(Manifest{}, path);
  CHECK(testutil::ReadFile(path).empty());
  ReadResult r = ReadManifest(path, true);
  CHECK(r.manifest.records.empty());
}

TEST_CASE("round-trip reproduces records; rewrite is byte-identical") {
  std::mt19937 rng(2024);
  testutil::TempDir tmp;
  for (int trial = 0; trial < 100; ++trial) {
    Manifest m = RandomManifest(rng);
    std::string p1 = tmp.File("a.jsonl");
    std::string p2 = tmp.File("b.jsonl");
    WriteManifest(m, p1);
    ReadResult r = ReadManifest(p1, true);
    CHECK(r.errors.empty());
    CHECK(r.manifest.records == m.records);
    WriteManifest(r.manifest, p2);
    CHECK(testutil::ReadFile(p1) == testutil::ReadFile(p2));
  }
}

TEST_CASE("every strict-parsable line also loads leniently") {
  std::mt19937 rng(31337);
  testutil::TempDir tmp;
  Manifest m = RandomManifest(rng, 30);
  std::string path = tmp.File("m.jsonl");
  WriteManifest(m, path);
  ReadResult strict = ReadManifest(path, true);
  ReadResult lenient = ReadManifest(path, false);
  CHECK(strict.manifest.records == lenient.manifest.records);
}

TEST_CASE("shard splits contiguously and concatenates back") {
  Manifest m;
  for (int i = 0; i < 10; ++i) {
    UtteranceRecord rec;
    rec.id = "u" + std::to_string(i);
    rec.primary_text = "t";
    m.records.push_back(rec);
  }

  SUBCASE("balanced sizes") {
    std::vector<Manifest> shards = Shard(m, 3);
    REQUIRE(shards.size() == 3);
    CHECK(shards[0].size() == 4);
    CHECK(shards[1].size() == 3);
    CHECK(shards[2].size() == 3);
  }

  SUBCASE("k=1 is the identity") {
    std::vector<Manifest> shards = Shard(m, 1);
    REQUIRE(shards.size() == 1);
    CHECK(shards[0].records == m.records);
  }

  SUBCASE("k beyond the record count leaves empty trailing shards") {
    std::vector<Manifest> shards = Shard(m, 12);
    REQUIRE(shards.size() == 12);
    CHECK(shards[10].records.empty());
    CHECK(shards[11].records.empty());
  }

  SUBCASE("concat law on random k") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      size_t k = 1 + rng() % 15;
      std::vector<Manifest> shards = Shard(m, k);
      std::vector<UtteranceRecord> joined;
      for (const Manifest &s : shards) {
        joined.insert(joined.end(), s.records.begin(), s.records.end());
      }
      CHECK(joined == m.records);
    }
  }
}
