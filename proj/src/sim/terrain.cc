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

#include "mimic/sim/terrain.h"

#include <cmath>

#include "mimic/core/errors.h"
#include "mimic/core/rng.h"

namespace mimic {
namespace {

// Value noise node in [-1, 1], deterministic in (seed, cell index).
double NoiseNode(uint64_t seed, int64_t k) {
  const uint64_t h = Rng::Derive(seed, static_cast<uint64_t>(k) * 2654435761ULL + 17);
  return 2.0 * (static_cast<double>(h >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

double Terrain::Ground(double x) const {
  const double u = x - x_offset;
  double h = 0.0;
  switch (kind) {
    case Kind::kFlat:
      h = 0.0;
      break;
    case Kind::kSlope:
      h = grade * u;
      break;
    case Kind::kStairs:
      h = rise * std::floor(u / run);
      break;
    case Kind::kRough: {
      const double t = u / cell;
      const double f = std::floor(t);
      const int64_t k = static_cast<int64_t>(f);
      const double frac = t - f;
      const double a = NoiseNode(seed, k);
      const double b = NoiseNode(seed, k + 1);
      h = amplitude * (a + (b - a) * frac);
      break;
    }
  }
  return scale * h;
}

double Terrain::Surface(double x) const {
  double h = Ground(x);
  for (const BoxObject& box : objects) {
    if (box.CoversX(x) && box.Top() > h) h = box.Top();
  }
  return h;
}

Terrain Terrain::Flat() { return Terrain{}; }

Terrain Terrain::Slope(double grade) {
  Terrain t;
  t.kind = Kind::kSlope;
  t.grade = grade;
  return t;
}

Terrain Terrain::Stairs(double rise, double run) {
  Terrain t;
  t.kind = Kind::kStairs;
  t.rise = rise;
  t.run = run;
  return t;
}

Terrain Terrain::Rough(uint64_t seed, double amplitude, double cell) {
  Terrain t;
  t.kind = Kind::kRough;
  t.seed = seed;
  t.amplitude = amplitude;
  t.cell = cell;
  return t;
}

const char* TerrainKindName(Terrain::Kind k) {
  switch (k) {
    case Terrain::Kind::kFlat: return "flat";
    case Terrain::Kind::kRough: return "rough";
    case Terrain::Kind::kStairs: return "stairs";
    case Terrain::Kind::kSlope: return "slope";
  }
  return "?";
}

Terrain Terrain::FromJson(const Json& j) {
  RequireKeys(j,
              {"kind", "x_offset", "grade", "rise", "run", "amplitude", "cell",
               "seed", "scale", "objects"},
              "terrain");
  Terrain t;
  const std::string kind = GetStr(j, "kind", "flat");
  if (kind == "flat") {
    t.kind = Kind::kFlat;
  } else if (kind == "rough") {
    t.kind = Kind::kRough;
  } else if (kind == "stairs") {
    t.kind = Kind::kStairs;
  } else if (kind == "slope") {
    t.kind = Kind::kSlope;
  } else {
    throw ConfigError("unknown terrain kind: " + kind);
  }
  t.x_offset = GetNum(j, "x_offset", 0.0);
  t.grade = GetNum(j, "grade", 0.0);
  t.rise = GetNum(j, "rise", 0.0);
  t.run = GetNum(j, "run", 1.0);
  t.amplitude = GetNum(j, "amplitude", 0.0);
  t.cell = GetNum(j, "cell", 1.0);
  t.scale = GetNum(j, "scale", 1.0);
  if (j.contains("seed")) t.seed = j.at("seed").get<uint64_t>();
  if (t.kind == Kind::kStairs && !(t.run > 0.0)) {
    throw ConfigError("stairs run must be > 0");
  }
  if (t.kind == Kind::kRough && !(t.cell > 0.0)) {
    throw ConfigError("rough cell must be > 0");
  }
  if (j.contains("objects")) {
    for (const auto& o : j.at("objects")) {
      RequireKeys(o, {"cx", "cz", "hw", "hh", "category"}, "terrain.objects[]");
      BoxObject box;
      box.cx = GetNum(o, "cx", 0.0);
      box.cz = GetNum(o, "cz", 0.0);
      box.hw = GetNum(o, "hw", 0.0);
      box.hh = GetNum(o, "hh", 0.0);
      box.category = GetInt(o, "category", 0);
      if (!(box.hw > 0.0) || !(box.hh > 0.0)) {
        throw ConfigError("box half extents must be > 0");
      }
      t.objects.push_back(box);
    }
  }
  return t;
}

Json Terrain::ToJson() const {
  Json j;
  j["kind"] = TerrainKindName(kind);
  j["x_offset"] = x_offset;
  j["grade"] = grade;
  j["rise"] = rise;
  j["run"] = run;
  j["amplitude"] = amplitude;
  j["cell"] = cell;
  j["seed"] = seed;
  j["scale"] = scale;
  Json objs = Json::array();
  for (const BoxObject& box : objects) {
    Json o;
    o["cx"] = box.cx;
    o["cz"] = box.cz;
    o["hw"] = box.hw;
    o["hh"] = box.hh;
    o["category"] = box.category;
    objs.push_back(o);
  }
  j["objects"] = objs;
  return j;
}

}  // namespace mimic
