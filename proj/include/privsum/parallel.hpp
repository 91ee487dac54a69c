// Copyright 2026 The Privsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVSUM_PARALLEL_HPP_
#define PRIVSUM_PARALLEL_HPP_

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace privsum {

// Number of workers to use. A positive `requested` wins; otherwise the
// PRIVSUM_THREADS environment variable (0 or unset meaning automatic), then
// hardware concurrency. Always at least 1.
int resolve_threads(int requested = 0);

// Runs fn(worker_index, begin, end) on `workers` threads over [0, total)
// split into contiguous chunks, one chunk per worker. Exceptions from workers
// are rethrown on the calling thread. Workers must only write worker-local or
// disjoint state; determinism of any reduction is the caller's job.
void parallel_chunks(
    std::uint64_t total, int workers,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace privsum

#endif  // PRIVSUM_PARALLEL_HPP_
