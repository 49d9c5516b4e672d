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

// AVX2/FMA variants. Compiled with -mavx2 -mfma in this translation unit
// only; callers reach them through the dispatch table. Accumulation order is
// fixed (one 4-lane accumulator, lanes reduced left to right), so results
// are bitwise reproducible run to run on the same machine. Lane blocking and
// FMA rounding make them differ from the scalar kernels by normal
// floating-point reassociation only; the equivalence tests bound that.

#ifdef MIMIC_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

#include "mimic/core/kernels.h"

namespace mimic::kern::avx2 {
namespace {

inline double ReduceAdd(__m256d v) {
  // Fixed reduction order: lane0 + lane1 + lane2 + lane3.
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

inline double RowDot(const double* a, const double* b, int n) {
  __m256d acc = _mm256_setzero_pd();
  int j = 0;
  for (; j + 4 <= n; j += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), acc);
  }
  double tail = 0.0;
  for (; j < n; ++j) tail += a[j] * b[j];
  return ReduceAdd(acc) + tail;
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
    const __m256d gi = _mm256_set1_pd(g[i]);
    int j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d yj = _mm256_loadu_pd(y + j);
      yj = _mm256_fmadd_pd(gi, _mm256_loadu_pd(row + j), yj);
      _mm256_storeu_pd(y + j, yj);
    }
    const double gs = g[i];
    for (; j < n; ++j) y[j] += gs * row[j];
  }
}

void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n) {
  for (int i = 0; i < m; ++i) {
    double* row = grad_w + static_cast<long>(i) * n;
    const __m256d gi = _mm256_set1_pd(g[i]);
    int j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d rj = _mm256_loadu_pd(row + j);
      rj = _mm256_fmadd_pd(gi, _mm256_loadu_pd(x + j), rj);
      _mm256_storeu_pd(row + j, rj);
    }
    const double gs = g[i];
    for (; j < n; ++j) row[j] += gs * x[j];
  }
}

double Dot(const double* a, const double* b, int n) { return RowDot(a, b, n); }

double SumSq(const double* x, int n) { return RowDot(x, x, n); }

void Axpy(double a, const double* x, double* y, int n) {
  const __m256d av = _mm256_set1_pd(a);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yi = _mm256_loadu_pd(y + i);
    yi = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yi);
    _mm256_storeu_pd(y + i, yi);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void ReluForward(const double* x, double* y, int n) {
  const __m256d zero = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void ReluBackward(const double* pre, const double* gout, double* gin, int n) {
  const __m256d zero = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(pre + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(gin + i, _mm256_and_pd(mask, _mm256_loadu_pd(gout + i)));
  }
  for (; i < n; ++i) gin[i] = pre[i] > 0.0 ? gout[i] : 0.0;
}

void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2) {
  const __m256d b1v = _mm256_set1_pd(b1);
  const __m256d b2v = _mm256_set1_pd(b2);
  const __m256d ob1 = _mm256_set1_pd(1.0 - b1);
  const __m256d ob2 = _mm256_set1_pd(1.0 - b2);
  const __m256d lrv = _mm256_set1_pd(lr);
  const __m256d epsv = _mm256_set1_pd(eps);
  const __m256d ic1 = _mm256_set1_pd(1.0 / c1);
  const __m256d ic2 = _mm256_set1_pd(1.0 / c2);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gi = _mm256_loadu_pd(g + i);
    __m256d mi = _mm256_loadu_pd(m + i);
    __m256d vi = _mm256_loadu_pd(v + i);
    mi = _mm256_fmadd_pd(ob1, gi, _mm256_mul_pd(b1v, mi));
    vi = _mm256_fmadd_pd(ob2, _mm256_mul_pd(gi, gi), _mm256_mul_pd(b2v, vi));
    _mm256_storeu_pd(m + i, mi);
    _mm256_storeu_pd(v + i, vi);
    const __m256d mhat = _mm256_mul_pd(mi, ic1);
    const __m256d vhat = _mm256_mul_pd(vi, ic2);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), epsv);
    __m256d pi = _mm256_loadu_pd(p + i);
    pi = _mm256_sub_pd(pi, _mm256_div_pd(_mm256_mul_pd(lrv, mhat), denom));
    _mm256_storeu_pd(p + i, pi);
  }
  for (; i < n; ++i) {
    m[i] = b1 * m[i] + (1.0 - b1) * g[i];
    v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
    p[i] -= lr * (m[i] * (1.0 / c1)) / (std::sqrt(v[i] * (1.0 / c2)) + eps);
  }
}

}  // namespace mimic::kern::avx2

#endif  // MIMIC_HAVE_AVX2
