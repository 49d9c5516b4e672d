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

// Reference kernels. Plain sequential loops; the SIMD variants are checked
// against these in tests.

#include <cmath>

#include "mimic/core/kernels.h"

namespace mimic::kern::scalar {

void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n) {
  for (int i = 0; i < m; ++i) {
    const double* row = w + static_cast<long>(i) * n;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = bias ? acc + bias[i] : acc;
  }
}

void MatTVecAcc(const double* w, const double* g, double* y, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const double* row = w + static_cast<long>(i) * n;
    const double gi = g[i];
    for (int j = 0; j < n; ++j) y[j] += gi * row[j];
  }
}

void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n) {
  for (int i = 0; i < m; ++i) {
    double* row = grad_w + static_cast<long>(i) * n;
    const double gi = g[i];
    for (int j = 0; j < n; ++j) row[j] += gi * x[j];
  }
}

double Dot(const double* a, const double* b, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double SumSq(const double* x, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void Axpy(double a, const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += a * x[i];
}

void ReluForward(const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
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
    const double mhat = m[i] / c1;
    const double vhat = v[i] / c2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace mimic::kern::scalar
