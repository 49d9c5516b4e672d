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

#ifndef MIMIC_SIM_TERRAIN_H_
#define MIMIC_SIM_TERRAIN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mimic/core/jsonio.h"

namespace mimic {

// Static axis-aligned box resting in the scene. Boxes contribute their top
// surface to the height field (they behave like terrain steps), which is the
// only collision model for objects.
struct BoxObject {
  double cx = 0.0;   // center x, meters
  double cz = 0.0;   // center z, meters
  double hw = 0.0;   // half width
  double hh = 0.0;   // half height
  int category = 0;

  double Top() const { return cz + hh; }
  bool CoversX(double x) const { return x >= cx - hw && x <= cx + hw; }
};

// 1-D heightfield over x plus static boxes. `x_offset` shifts the whole
// field, which is how spawn placement and the translation-covariance
// properties are expressed.
struct Terrain {
  enum class Kind { kFlat, kRough, kStairs, kSlope };

  Kind kind = Kind::kFlat;
  double x_offset = 0.0;
  // slope
  double grade = 0.0;
  // stairs
  double rise = 0.0;
  double run = 1.0;
  // rough: piecewise-linear value noise
  double amplitude = 0.0;
  double cell = 1.0;
  uint64_t seed = 0;
  // vertical scale; -1 flips the field (used by retarget round-trip tests)
  double scale = 1.0;

  std::vector<BoxObject> objects;

  // Ground height, excluding boxes.
  double Ground(double x) const;
  // max(ground, box tops covering x).
  double Surface(double x) const;

  static Terrain Flat();
  static Terrain Slope(double grade);
  static Terrain Stairs(double rise, double run);
  static Terrain Rough(uint64_t seed, double amplitude, double cell);

  static Terrain FromJson(const Json& j);
  Json ToJson() const;
};

const char* TerrainKindName(Terrain::Kind k);

}  // namespace mimic

#endif  // MIMIC_SIM_TERRAIN_H_
