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

// AArch64 NEON variants (2-lane f64). Same fixed-order accumulation contract
// as the AVX2 kernels.

#ifdef MIMIC_HAVE_NEON

#include <arm_neon.h>

#include <cmath>

#include "mimic/core/kernels.h"

namespace mimic::kern::neon {
namespace {

inline double RowDot(const double* a, const double* b, int n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  int j = 0;
  for (; j + 2 <= n; j += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + j), vld1q_f64(b + j));
  }
  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; j < n; ++j) sum += a[j] * b[j];
  return sum;
}

}  // namespace

void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n) {
  for (int i = 0; i < m; ++i) {
    const double acc = RowDot(w + static_cast<long>(i) * n, x, n);
    y[i] = bias ? acc + bias[i] : acc;
  }
}

void MatTVecAcc(const double* w, const double* g, double* y, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const double* row = w + static_cast<long>(i) * n;
    const float64x2_t gi = vdupq_n_f64(g[i]);
    int j = 0;
    for (; j + 2 <= n; j += 2) {
      vst1q_f64(y + j, vfmaq_f64(vld1q_f64(y + j), gi, vld1q_f64(row + j)));
    }
    for (; j < n; ++j) y[j] += g[i] * row[j];
  }
}

void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n) {
  for (int i = 0; i < m; ++i) {
    double* row = grad_w + static_cast<long>(i) * n;
    const float64x2_t gi = vdupq_n_f64(g[i]);
    int j = 0;
    for (; j + 2 <= n; j += 2) {
      vst1q_f64(row + j, vfmaq_f64(vld1q_f64(row + j), gi, vld1q_f64(x + j)));
    }
    for (; j < n; ++j) row[j] += g[i] * x[j];
  }
}

double Dot(const double* a, const double* b, int n) { return RowDot(a, b, n); }

double SumSq(const double* x, int n) { return RowDot(x, x, n); }

void Axpy(double a, const double* x, double* y, int n) {
  const float64x2_t av = vdupq_n_f64(a);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void ReluForward(const double* x, double* y, int n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  int i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vmaxq_f64(vld1q_f64(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void ReluBackward(const double* pre, const double* gout, double* gin, int n) {
  for (int i = 0; i < n; ++i) gin[i] = pre[i] > 0.0 ? gout[i] : 0.0;
}

void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2) {
  for (int i = 0; i < n; ++i) {
    m[i] = b1 * m[i] + (1.0 - b1) * g[i];
    v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
    p[i] -= lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + eps);
  }
}

}  // namespace mimic::kern::neon

#endif  // MIMIC_HAVE_NEON
