// core/src/manifest_io.cc

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

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "rarewer/error.h"

namespace rarewer {

namespace {

using ordered_json = nlohmann::ordered_json;

bool ValidUtf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    size_t extra;
    uint32_t cp;
    if (b < 0x80) {
      extra = 0;
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      extra = 1;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      extra = 2;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      extra = 3;
      cp = b & 0x07;
    } else {
      return false;
    }
    for (size_t k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) return false;
      unsigned char c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (extra == 1 && cp < 0x80) return false;
    if (extra == 2 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)))
      return false;
    if (extra == 3 && (cp < 0x10000 || cp > 0x10FFFF)) return false;
    i += extra + 1;
  }
  return true;
}

// Returns std::nullopt on success, an IngestError (sans line number)
// otherwise.
std::optional<IngestError> ParseRecordLine(const std::string &line,
                                           UtteranceRecord *record) {
  if (!ValidUtf8(line)) {
    return IngestError{0, IngestReason::kBadEncoding, "line is not UTF-8"};
  }
  ordered_json row = ordered_json::parse(line, nullptr, false);
  if (row.is_discarded() || !row.is_object()) {
    return IngestError{0, IngestReason::kBadSyntax,
                       "line is not a JSON object"};
  }

  auto require_string = [&](const char *key, std::string *out,
                            bool required) -> std::optional<IngestError> {
    auto it = row.find(key);
    if (it == row.end()) {
      if (required) {
        return IngestError{0, IngestReason::kMissingField,
                           std::string("missing required field \"") + key +
                               "\""};
      }
      return std::nullopt;
    }
    if (!it->is_string()) {
      return IngestError{0, IngestReason::kMissingField,
                         std::string("field \"") + key + "\" must be a string"};
    }
    *out = it->get<std::string>();
    return std::nullopt;
  };

  if (auto err = require_string("id", &record->id, true)) return err;
  if (record->id.empty()) {
    return IngestError{0, IngestReason::kMissingField, "id must be non-empty"};
  }

  auto dur = row.find("duration_s");
  if (dur == row.end() || !dur->is_number()) {
    return IngestError{0, IngestReason::kMissingField,
                       "missing or non-numeric field \"duration_s\""};
  }
  record->duration_s = dur->get<double>();
  if (!std::isfinite(record->duration_s) || record->duration_s < 0.0) {
    return IngestError{0, IngestReason::kBadDuration,
                       "duration_s must be finite and >= 0"};
  }

  if (auto err = require_string("primary_text", &record->primary_text, true))
    return err;

  std::string value;
  auto optional_string = [&](const char *key, std::optional<std::string> *out)
      -> std::optional<IngestError> {
    if (row.find(key) == row.end()) {
      out->reset();
      return std::nullopt;
    }
    if (auto err = require_string(key, &value, false)) return err;
    *out = value;
    return std::nullopt;
  };
  if (auto err = optional_string("alt_text", &record->alt_text)) return err;
  if (auto err = optional_string("hyp_text", &record->hyp_text)) return err;
  if (auto err = optional_string("audio_path", &record->audio_path)) return err;
  return std::nullopt;
}

std::string RecordToLine(const UtteranceRecord &record) {
  ordered_json row;
  row["id"] = record.id;
  row["duration_s"] = record.duration_s;
  row["primary_text"] = record.primary_text;
  if (record.alt_text) row["alt_text"] = *record.alt_text;
  if (record.hyp_text) row["hyp_text"] = *record.hyp_text;
  if (record.audio_path) row["audio_path"] = *record.audio_path;
  return row.dump();
}

}  // namespace

const char *IngestReasonName(IngestReason reason) {
  switch (reason) {
    case IngestReason::kBadEncoding:
      return "BadEncoding";
    case IngestReason::kBadSyntax:
      return "BadSyntax";
    case IngestReason::kMissingField:
      return "MissingField";
    case IngestReason::kDuplicateId:
      return "DuplicateId";
    case IngestReason::kBadDuration:
      return "BadDuration";
  }
  return "Unknown";
}

std::string FormatIngestError(const IngestError &error) {
  return "line " + std::to_string(error.line_number) + ": " +
         IngestReasonName(error.reason) + ": " + error.detail;
}

ReadResult ReadManifest(const std::string &path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable, "cannot open manifest: " + path);
  }

  ReadResult result;
  result.manifest.source_path = path;

  {
    std::ifstream meta(path + ".meta", std::ios::binary);
    if (meta) {
      std::ostringstream buf;
      buf << meta.rdbuf();
      ordered_json m = ordered_json::parse(buf.str(), nullptr, false);
      if (m.is_object() && m.contains("schema_version") &&
          m["schema_version"].is_string()) {
        result.manifest.schema_version = m["schema_version"].get<std::string>();
      }
    }
  }

  std::unordered_map<std::string, size_t> first_line_of_id;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    UtteranceRecord record;
    std::optional<IngestError> err = ParseRecordLine(line, &record);
    if (!err) {
      auto [it, inserted] = first_line_of_id.emplace(record.id, line_number);
      if (!inserted) {
        err = IngestError{0, IngestReason::kDuplicateId,
                          "id \"" + record.id + "\" duplicates line " +
                              std::to_string(it->second)};
      }
    }
    if (err) {
      err->line_number = line_number;
      if (strict) {
        throw Error(ErrorCode::kIngest, path + ": " + FormatIngestError(*err));
      }
      result.errors.push_back(*err);
      continue;
    }
    result.manifest.records.push_back(std::move(record));
  }
  return result;
}

void WriteManifest(const Manifest &manifest, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kFileUnwritable, "cannot write manifest: " + path);
  }
  for (const UtteranceRecord &record : manifest.records) {
    out << RecordToLine(record) << "\n";
  }
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kFileUnwritable, "cannot write manifest: " + path);
  }

  std::ofstream meta(path + ".meta", std::ios::binary | std::ios::trunc);
  if (!meta) {
    throw Error(ErrorCode::kFileUnwritable,
                "cannot write manifest sidecar: " + path + ".meta");
  }
  ordered_json m;
  m["schema_version"] = manifest.schema_version;
  meta << m.dump() << "\n";
}

std::vector<Manifest> Shard(const Manifest &manifest, size_t k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "shard count must be >= 1");
  }
  const size_t n = manifest.records.size();
  std::vector<Manifest> shards(k);
  size_t base = n / k;
  size_t extra = n % k;
  size_t offset = 0;
  for (size_t s = 0; s < k; ++s) {
    size_t len = base + (s < extra ? 1 : 0);
    shards[s].source_path = manifest.source_path;
    shards[s].schema_version = manifest.schema_version;
    shards[s].records.assign(manifest.records.begin() + offset,
                             manifest.records.begin() + offset + len);
    offset += len;
  }
  return shards;
}

}  // namespace rarewer
