// core/include/rarewer/parallel.h

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

#ifndef RAREWER_PARALLEL_H_
#define RAREWER_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace rarewer {

// Runs body(0..count-1) across up to `workers` threads (workers <= 1 runs
// inline).  Indices are claimed from an atomic counter; the body must write
// only to its own slot.  The first exception thrown by any body is rethrown
// on the calling thread after all workers join.
void ParallelFor(size_t count, int workers,
                 const std::function<void(size_t)> &body);

}  // namespace rarewer

#endif  // RAREWER_PARALLEL_H_
