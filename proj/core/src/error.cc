// core/src/error.cc

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

#include "rarewer/error.h"

namespace rarewer {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kModeMismatch:
      return "ModeMismatch";
    case ErrorCode::kEmptyReference:
      return "EmptyReference";
    case ErrorCode::kEmptyRareSet:
      return "EmptyRareSet";
    case ErrorCode::kEmptyList:
      return "EmptyList";
    case ErrorCode::kEmptyResult:
      return "EmptyResult";
    case ErrorCode::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::kMalformedEntry:
      return "MalformedEntry";
    case ErrorCode::kFileUnreadable:
      return "FileUnreadable";
    case ErrorCode::kFileUnwritable:
      return "FileUnwritable";
    case ErrorCode::kInvalidN:
      return "InvalidN";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kMetricMismatch:
      return "MetricMismatch";
    case ErrorCode::kIngest:
      return "IngestError";
    case ErrorCode::kInvalidScorer:
      return "InvalidScorer";
  }
  return "Unknown";
}

}  // namespace rarewer
