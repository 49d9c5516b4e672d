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

#include "mimic/nn/mlp.h"

#include <cmath>

#include "mimic/core/errors.h"
#include "mimic/core/kernels.h"

namespace mimic {

Mlp Mlp::Create(const std::vector<int>& widths, Rng& rng, double out_scale) {
  if (widths.size() < 2) throw ShapeError("mlp needs at least two widths");
  Mlp net;
  net.widths_ = widths;
  size_t total = 0;
  for (size_t l = 0; l + 1 < widths.size(); ++l) {
    net.w_off_.push_back(total);
    total += static_cast<size_t>(widths[l + 1]) * widths[l];
    net.b_off_.push_back(total);
    total += widths[l + 1];
  }
  net.params_.assign(total, 0.0);
  for (int l = 0; l < net.layers(); ++l) {
    const int fan_in = widths[l];
    const int fan_out = widths[l + 1];
    double limit = std::sqrt(6.0 / fan_in);
    if (l == net.layers() - 1) limit *= out_scale;
    double* w = net.params_.data() + net.w_off_[l];
    for (int i = 0; i < fan_out * fan_in; ++i) w[i] = rng.Uniform(-limit, limit);
  }
  return net;
}

std::vector<double> Mlp::Forward(const std::vector<double>& x,
                                 Cache* cache) const {
  if (static_cast<int>(x.size()) != input_dim()) {
    throw ShapeError("mlp input width mismatch");
  }
  const int L = layers();
  std::vector<double> cur = x;
  if (cache) {
    cache->input = x;
    cache->pre.assign(L, {});
    cache->act.assign(L, {});
  }
  for (int l = 0; l < L; ++l) {
    const int m = widths_[l + 1];
    const int n = widths_[l];
    std::vector<double> pre(m);
    kern::MatVec(W(l), cur.data(), B(l), pre.data(), m, n);
    std::vector<double> act;
    if (l + 1 < L) {
      act.resize(m);
      kern::ReluForward(pre.data(), act.data(), m);
    } else {
      act = pre;  // linear output
    }
    if (cache) {
      cache->pre[l] = pre;
      cache->act[l] = act;
    }
    cur = std::move(act);
  }
  return cur;
}

void Mlp::Backward(const Cache& cache, const std::vector<double>& dout,
                   double* dparams, double* dinput) const {
  const int L = layers();
  if (static_cast<int>(dout.size()) != output_dim()) {
    throw ShapeError("mlp output grad width mismatch");
  }
  std::vector<double> grad = dout;  // gradient w.r.t. layer pre-activation
  for (int l = L - 1; l >= 0; --l) {
    const int m = widths_[l + 1];
    const int n = widths_[l];
    if (l + 1 < L) {
      // grad currently holds d/d act[l]; gate through the ReLU.
      std::vector<double> gated(m);
      kern::ReluBackward(cache.pre[l].data(), grad.data(), gated.data(), m);
      grad = std::move(gated);
    }
    const double* in = l == 0 ? cache.input.data() : cache.act[l - 1].data();
    kern::OuterAcc(dparams + w_off_[l], grad.data(), in, m, n);
    kern::Axpy(1.0, grad.data(), dparams + b_off_[l], m);
    if (l > 0 || dinput != nullptr) {
      std::vector<double> din(n, 0.0);
      kern::MatTVecAcc(W(l), grad.data(), din.data(), m, n);
      if (l == 0) {
        for (int i = 0; i < n; ++i) dinput[i] = din[i];
      } else {
        grad = std::move(din);
      }
    }
  }
}

}  // namespace mimic
