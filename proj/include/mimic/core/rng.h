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

#ifndef MIMIC_CORE_RNG_H_
#define MIMIC_CORE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace mimic {

// Deterministic random stream. mt19937_64 is fully specified by the
// standard, and all distribution transforms below are hand-rolled, so a
// given seed yields the same sequence on every platform and compiler.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed), seed_base_(seed) {}

  uint64_t NextU64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double Uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [lo, hi], inclusive. Fixed-point multiply; the bias
  // for spans this small is far below anything the statistical suites can
  // see.
  int64_t UniformInt(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
    const uint64_t r = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * span) >> 64);
    return lo + static_cast<int64_t>(r);
  }

  // Standard normal via Box-Muller, cached pair.
  double Normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - Uniform();
    const double u2 = Uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  void FillNormal(double* out, int n) {
    for (int i = 0; i < n; ++i) out[i] = Normal();
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Independent child stream; distinct `stream` values give decorrelated
  // sequences for the same parent seed.
  Rng Fork(uint64_t stream) const {
    return Rng(Derive(seed_base_, stream));
  }

  static uint64_t Derive(uint64_t base, uint64_t stream) {
    uint64_t z = base ^ (stream + 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
  uint64_t seed_base_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mimic

#endif  // MIMIC_CORE_RNG_H_
