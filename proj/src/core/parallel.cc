// Copyright 2026 The PlanarMimic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mimic/core/parallel.h"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace mimic {

int EffectiveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void ParallelBlocks(
    int n, int threads,
    const std::function<void(int begin, int end, int worker)>& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1 || n <= 1) {
    if (n > 0) fn(0, n, 0);
    return;
  }
  const int base = n / threads;
  const int rem = n % threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  int begin = 0;
  for (int w = 0; w < threads; ++w) {
    const int len = base + (w < rem ? 1 : 0);
    const int end = begin + len;
    if (w == threads - 1) {
      // Run the last block on the calling thread.
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    } else {
      pool.emplace_back([&fn, begin, end, w, &errors]() {
        try {
          fn(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void ParallelFor(int n, int threads, const std::function<void(int)>& fn) {
  ParallelBlocks(n, threads, [&fn](int begin, int end, int) {
    for (int i = begin; i < end; ++i) fn(i);
  });
}

}  // namespace mimic
