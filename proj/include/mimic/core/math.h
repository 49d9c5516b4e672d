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

#ifndef MIMIC_CORE_MATH_H_
#define MIMIC_CORE_MATH_H_

#include <cmath>

namespace mimic {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  Vec2() = default;
  Vec2(double x_, double z_) : x(x_), z(z_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, z + o.z}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, z - o.z}; }
  Vec2 operator*(double s) const { return {x * s, z * s}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; z += o.z; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; z -= o.z; return *this; }

  double Dot(const Vec2& o) const { return x * o.x + z * o.z; }
  double NormSq() const { return x * x + z * z; }
  double Norm() const { return std::sqrt(NormSq()); }
};

// Planar angles are measured from the +z (up) axis, opening toward +x, so a
// link at angle a points along (sin a, cos a). With that convention an
// x-mirror of the world is plain negation of every angle, which is exact in
// floating point.
inline Vec2 AngleDir(double a) { return {std::sin(a), std::cos(a)}; }
// d/da of AngleDir.
inline Vec2 AngleDirTangent(double a) { return {std::cos(a), -std::sin(a)}; }

// Wrap to (-pi, pi].
inline double WrapAngle(double a) {
  double x = std::fmod(a + kPi, 2.0 * kPi);
  if (x <= 0.0) x += 2.0 * kPi;
  return x - kPi;
}

// Wrapped difference a - b in (-pi, pi].
inline double AngleDiff(double a, double b) { return WrapAngle(a - b); }

// Frame attached to a rotation angle r: "up" = AngleDir(r), "forward" =
// AngleDirTangent(r). ToLocal expresses a world vector in that frame, which
// is translation invariant by construction.
struct LocalFrame {
  double s, c;
  explicit LocalFrame(double rot) : s(std::sin(rot)), c(std::cos(rot)) {}
  Vec2 ToLocal(const Vec2& v) const { return {v.x * c - v.z * s, v.x * s + v.z * c}; }
};

// Upper regularized incomplete gamma Q(a, x); used for chi-square p-values:
// p = Q(df/2, stat/2).
double GammaQ(double a, double x);

// Chi-square survival function with df degrees of freedom.
inline double ChiSquarePValue(double stat, int df) {
  return GammaQ(0.5 * df, 0.5 * stat);
}

// 95% Wilson score interval for a binomial proportion.
void WilsonInterval(long successes, long trials, double* lo, double* hi);

}  // namespace mimic

#endif  // MIMIC_CORE_MATH_H_
