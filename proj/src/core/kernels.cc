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

#include "mimic/core/kernels.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace mimic::kern {
namespace {

bool CpuHasAvx2() {
#if defined(MIMIC_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool CpuHasNeon() {
#if defined(MIMIC_HAVE_NEON)
  return true;  // baseline on AArch64
#else
  return false;
#endif
}

Backend Detect() {
  if (const char* env = std::getenv("MIMIC_KERNELS")) {
    const std::string s(env);
    if (s == "scalar") return Backend::kScalar;
    if (s == "avx2" && CpuHasAvx2()) return Backend::kAvx2;
    if (s == "neon" && CpuHasNeon()) return Backend::kNeon;
    // Unknown or unsupported override falls back to scalar.
    return Backend::kScalar;
  }
  if (CpuHasAvx2()) return Backend::kAvx2;
  if (CpuHasNeon()) return Backend::kNeon;
  return Backend::kScalar;
}

Backend& Active() {
  static Backend backend = Detect();
  return backend;
}

}  // namespace

Backend ActiveBackend() { return Active(); }

const char* BackendName(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "?";
}

bool BackendSupported(Backend b) {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2: return CpuHasAvx2();
    case Backend::kNeon: return CpuHasNeon();
  }
  return false;
}

void SetBackend(Backend b) {
  if (!BackendSupported(b)) {
    throw std::runtime_error(std::string("kernel backend not supported: ") +
                             BackendName(b));
  }
  Active() = b;
}

#if defined(MIMIC_HAVE_AVX2)
#define MIMIC_DISPATCH(fn, ...)                        \
  switch (Active()) {                                  \
    case Backend::kAvx2: return avx2::fn(__VA_ARGS__); \
    default: return scalar::fn(__VA_ARGS__);           \
  }
#elif defined(MIMIC_HAVE_NEON)
#define MIMIC_DISPATCH(fn, ...)                        \
  switch (Active()) {                                  \
    case Backend::kNeon: return neon::fn(__VA_ARGS__); \
    default: return scalar::fn(__VA_ARGS__);           \
  }
#else
#define MIMIC_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void MatVec(const double* w, const double* x, const double* bias, double* y,
            int m, int n) {
  MIMIC_DISPATCH(MatVec, w, x, bias, y, m, n);
}

void MatTVecAcc(const double* w, const double* g, double* y, int m, int n) {
  MIMIC_DISPATCH(MatTVecAcc, w, g, y, m, n);
}

void OuterAcc(double* grad_w, const double* g, const double* x, int m, int n) {
  MIMIC_DISPATCH(OuterAcc, grad_w, g, x, m, n);
}

double Dot(const double* a, const double* b, int n) {
  MIMIC_DISPATCH(Dot, a, b, n);
}

double SumSq(const double* x, int n) { MIMIC_DISPATCH(SumSq, x, n); }

void Axpy(double a, const double* x, double* y, int n) {
  MIMIC_DISPATCH(Axpy, a, x, y, n);
}

void Scale(double* x, double a, int n) {
  for (int i = 0; i < n; ++i) x[i] *= a;
}

void Fill(double* x, double v, int n) {
  for (int i = 0; i < n; ++i) x[i] = v;
}

void ReluForward(const double* x, double* y, int n) {
  MIMIC_DISPATCH(ReluForward, x, y, n);
}

void ReluBackward(const double* pre, const double* gout, double* gin, int n) {
  MIMIC_DISPATCH(ReluBackward, pre, gout, gin, n);
}

void AdamStep(double* p, const double* g, double* m, double* v, int n,
              double lr, double b1, double b2, double eps, double c1,
              double c2) {
  MIMIC_DISPATCH(AdamStep, p, g, m, v, n, lr, b1, b2, eps, c1, c2);
}

#undef MIMIC_DISPATCH

}  // namespace mimic::kern
