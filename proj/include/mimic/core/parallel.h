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

#ifndef MIMIC_CORE_PARALLEL_H_
#define MIMIC_CORE_PARALLEL_H_

#include <functional>

namespace mimic {

// Static block partition of [0, n) over `threads` workers. The partition is
// a pure function of (n, threads), so any reduction done per worker and
// merged in worker order is reproducible for a fixed thread count.
// threads <= 1 runs inline.
void ParallelFor(int n, int threads, const std::function<void(int)>& fn);

// Same partition, but hands each worker its (begin, end, worker_index)
// block. Useful when the worker keeps private accumulators that the caller
// merges in worker order afterwards.
void ParallelBlocks(
    int n, int threads,
    const std::function<void(int begin, int end, int worker)>& fn);

int EffectiveThreads(int requested);

}  // namespace mimic

#endif  // MIMIC_CORE_PARALLEL_H_
