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

#ifndef MIMIC_NN_MLP_H_
#define MIMIC_NN_MLP_H_

#include <cstddef>
#include <vector>

#include "mimic/core/rng.h"

namespace mimic {

// Fully connected network, 64-bit floats, ReLU on hidden layers, linear
// output. Parameters live in one flat array ([W0|b0|W1|b1|...]) so gradient
// buffers, Adam state, and checkpoints are plain arrays of the same length.
class Mlp {
 public:
  struct Cache {
    std::vector<double> input;
    std::vector<std::vector<double>> pre;   // pre-activation per layer
    std::vector<std::vector<double>> act;   // post-activation per layer
  };

  Mlp() = default;

  // Kaiming-uniform init (U[-sqrt(6/fan_in), +sqrt(6/fan_in)]), zero biases.
  // The output layer weights are scaled by `out_scale`.
  static Mlp Create(const std::vector<int>& widths, Rng& rng,
                    double out_scale = 1.0);

  int input_dim() const { return widths_.front(); }
  int output_dim() const { return widths_.back(); }
  const std::vector<int>& widths() const { return widths_; }
  size_t ParamCount() const { return params_.size(); }
  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }

  // Throws ShapeError when x has the wrong width.
  std::vector<double> Forward(const std::vector<double>& x,
                              Cache* cache = nullptr) const;

  // Reverse-mode gradients for the forward pass recorded in `cache`.
  // Accumulates into dparams (length ParamCount()); when dinput is non-null
  // it is overwritten with the gradient w.r.t. the input.
  void Backward(const Cache& cache, const std::vector<double>& dout,
                double* dparams, double* dinput = nullptr) const;

  int layers() const { return static_cast<int>(widths_.size()) - 1; }

 private:
  std::vector<int> widths_;
  std::vector<double> params_;
  std::vector<size_t> w_off_, b_off_;

  const double* W(int l) const { return params_.data() + w_off_[l]; }
  const double* B(int l) const { return params_.data() + b_off_[l]; }
};

}  // namespace mimic

#endif  // MIMIC_NN_MLP_H_
