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

#ifndef MIMIC_CORE_KERNELS_H_
#define MIMIC_CORE_KERNELS_H_

// Dense double-precision kernels behind the network and optimizer loops.
// Every kernel has a scalar reference implementation and, where the target
// supports it, a SIMD variant (AVX2/FMA on x86-64, NEON on AArch64). The
// backend is selected once at startup from CPUID and can be overridden via
// the MIMIC_KERNELS environment variable ("scalar", "avx2", "neon") or
// SetBackend(). Within a process the selection is stable, so repeated calls
// are bitwise reproducible.

namespace mimic::kern {

enum class Backend { kScalar, kAvx2, kNeon };

// Backend chosen for this process. Detection order: MIMIC_KERNELS override,
// then best supported instruction set, else scalar.
Backend ActiveBackend();
const char* BackendName(Backend b);

// Force a backend (tests). Throws std::runtime_error if unsupported on this
// machine.
void SetBackend(Backend b);

// True if the running CPU can execute the given backend.
bool BackendSupported(Backend b);

// y[m] = W[m x n] * x[n] (+ bias[m] when bias != nullptr). Row-major W.
void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n);

// y[n] += W^T[m x n] * g[m]. Row-major W. Accumulates into y.
void MatTVecAcc(const double* w, const double* g, double* y, int m, int n);

// G[m x n] += g[m] (outer) x[n]. Row-major G.
void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n);

double Dot(const double* a, const double* b, int n);
double SumSq(const double* x, int n);

// y[i] += a * x[i]
void Axpy(double a, const double* x, double* y, int n);
void Scale(double* x, double a, int n);
void Fill(double* x, double v, int n);

// y[i] = max(x[i], 0)
void ReluForward(const double* x, double* y, int n);
// gin[i] = gout[i] * (pre[i] > 0)
void ReluBackward(const double* pre, const double* gout, double* gin, int n);

// Adam with externally supplied bias corrections c1 = 1-b1^t, c2 = 1-b2^t:
//   m = b1*m + (1-b1)*g;  v = b2*v + (1-b2)*g^2
//   p -= lr * (m/c1) / (sqrt(v/c2) + eps)
void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2);

// Per-backend entry points, exposed for equivalence tests.
namespace scalar {
void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n);
void MatTVecAcc(const double* w, const double* g, double* y, int m, int n);
void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n);
double Dot(const double* a, const double* b, int n);
double SumSq(const double* x, int n);
void Axpy(double a, const double* x, double* y, int n);
void ReluForward(const double* x, double* y, int n);
void ReluBackward(const double* pre, const double* gout, double* gin, int n);
void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2);
}  // namespace scalar

#ifdef MIMIC_HAVE_AVX2
namespace avx2 {
void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n);
void MatTVecAcc(const double* w, const double* g, double* y, int m, int n);
void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n);
double Dot(const double* a, const double* b, int n);
double SumSq(const double* x, int n);
void Axpy(double a, const double* x, double* y, int n);
void ReluForward(const double* x, double* y, int n);
void ReluBackward(const double* pre, const double* gout, double* gin, int n);
void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2);
}  // namespace avx2
#endif

#ifdef MIMIC_HAVE_NEON
namespace neon {
void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n);
void MatTVecAcc(const double* w, const double* g, double* y, int m, int n);
void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n);
double Dot(const double* a, const double* b, int n);
double SumSq(const double* x, int n);
void Axpy(double a, const double* x, double* y, int n);
void ReluForward(const double* x, double* y, int n);
void ReluBackward(const double* pre, const double* gout, double* gin, int n);
void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2);
}  // namespace neon
#endif

}  // namespace mimic::kern

#endif  // MIMIC_CORE_KERNELS_H_
