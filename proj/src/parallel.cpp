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

#include "privsum/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace privsum {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PRIVSUM_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // Unparseable values fall through to automatic selection.
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_chunks(
    std::uint64_t total, int workers,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total && total > 0) {
    workers = static_cast<int>(total);
  }
  if (total == 0) return;
  if (workers == 1) {
    fn(0, 0, total);
    return;
  }

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr first_error;
  std::mutex error_mu;

  std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
  std::uint64_t extra = total % static_cast<std::uint64_t>(workers);
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t size = chunk + (static_cast<std::uint64_t>(w) < extra);
    std::uint64_t end = begin + size;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace privsum
