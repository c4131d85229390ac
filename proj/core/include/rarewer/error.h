// core/include/rarewer/error.h

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

#ifndef RAREWER_ERROR_H_
#define RAREWER_ERROR_H_

#include <stdexcept>
#include <string>

namespace rarewer {

enum class ErrorCode {
  kModeMismatch,
  kEmptyReference,
  kEmptyRareSet,
  kEmptyList,
  kEmptyResult,
  kEmptyCorpus,
  kMalformedEntry,
  kFileUnreadable,
  kFileUnwritable,
  kInvalidN,
  kInvalidArgument,
  kMetricMismatch,
  kIngest,
  kInvalidScorer,
};

const char *ErrorCodeName(ErrorCode code);

// All library failures surface as Error; the code distinguishes contract
// violations callers are expected to branch on (CLI maps them to exit 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rarewer

#endif  // RAREWER_ERROR_H_
