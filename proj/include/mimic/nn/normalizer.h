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

#ifndef MIMIC_NN_NORMALIZER_H_
#define MIMIC_NN_NORMALIZER_H_

#include <string>
#include <vector>

#include "mimic/core/binio.h"

namespace mimic {

// Running mean/std feature normalizer (Welford accumulation). Outputs are
// clipped to +/-kClip. Before any update it is the identity.
class RunningNormalizer {
 public:
  RunningNormalizer() = default;
  explicit RunningNormalizer(int dim);

  void Update(const std::vector<double>& sample);
  std::vector<double> Normalize(const std::vector<double>& x) const;
  void NormalizeInPlace(double* x, int n) const;

  int dim() const { return dim_; }
  double count() const { return count_; }
  double mean(int i) const { return mean_[i]; }
  double variance(int i) const;

  void Save(Archive* a, const std::string& prefix) const;
  void Load(const Archive& a, const std::string& prefix);

  static constexpr double kEps = 1e-8;
  static constexpr double kClip = 10.0;

 private:
  int dim_ = 0;
  double count_ = 0.0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

}  // namespace mimic

#endif  // MIMIC_NN_NORMALIZER_H_
