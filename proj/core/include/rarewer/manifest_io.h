// core/include/rarewer/manifest_io.h

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

#ifndef RAREWER_MANIFEST_IO_H_
#define RAREWER_MANIFEST_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rarewer {

// One manifest row.  primary_text is the transcript used as reference;
// alt_text is a second label source consumed by the WER filter; hyp_text is
// a system output consumed by scoring.
struct UtteranceRecord {
  std::string id;
  double duration_s = 0.0;
  std::string primary_text;
  std::optional<std::string> alt_text;
  std::optional<std::string> hyp_text;
  std::optional<std::string> audio_path;

  friend bool operator==(const UtteranceRecord &,
                         const UtteranceRecord &) = default;
};

struct Manifest {
  std::vector<UtteranceRecord> records;
  std::string source_path;
  std::string schema_version = "1";

  size_t size() const { return records.size(); }
};

enum class IngestReason {
  kBadEncoding,
  kBadSyntax,
  kMissingField,
  kDuplicateId,
  kBadDuration,
};

const char *IngestReasonName(IngestReason reason);

struct IngestError {
  size_t line_number = 0;
  IngestReason reason = IngestReason::kBadSyntax;
  std::string detail;
};

std::string FormatIngestError(const IngestError &error);

struct ReadResult {
  Manifest manifest;
  std::vector<IngestError> errors;
};

// Parses one JSON object per line with required fields `id` (string),
// `duration_s` (finite non-negative number), `primary_text` (string) and
// optional string fields `alt_text`, `hyp_text`, `audio_path`.  The schema
// version rides in a sidecar `<path>.meta` file so every manifest line stays
// a data record.
//
// strict=true throws kIngest at the first bad line; strict=false loads every
// good line and reports the bad ones.  Throws kFileUnreadable either way.
ReadResult ReadManifest(const std::string &path, bool strict);

// One JSON object per line, keys in fixed order (id, duration_s,
// primary_text, alt_text, hyp_text, audio_path; absent optionals omitted),
// numbers in shortest round-trip form.  Also writes `<path>.meta`.
// Read-after-write reproduces the manifest record for record and a second
// write is byte-identical.
void WriteManifest(const Manifest &manifest, const std::string &path);

// Contiguous order-preserving split into k manifests whose sizes differ by
// at most one; concatenating the shards reproduces the input.
std::vector<Manifest> Shard(const Manifest &manifest, size_t k);

}  // namespace rarewer

#endif  // RAREWER_MANIFEST_IO_H_
