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

#ifndef MIMIC_MOTION_GENERATORS_H_
#define MIMIC_MOTION_GENERATORS_H_

#include <cstdint>

#include "mimic/motion/clip.h"

namespace mimic {

// Procedural clip families. The enum value doubles as the style label.
enum class ClipKind {
  kWalk = 0,
  kCrouchWalk = 1,
  kCrawl = 2,
  kReach = 3,
  kSit = 4,
  kBalance = 5,
};

const char* ClipKindName(ClipKind k);
ClipKind ClipKindFromName(const std::string& name);
inline constexpr int kStyleVocabulary = 16;

// Accepted ranges (checked per kind, ParamRange on violation):
//   speed     walk [0.1, 1.2] | crouch [0.1, 0.8] | crawl [0.05, 0.5] m/s
//   duration  [1, 30] s (sit: approach segment, [1, 10])
//   amplitude [0.25, 2.0], scales gait oscillation
struct ClipParams {
  double speed = 0.6;
  double duration = 4.0;
  double amplitude = 1.0;
};

// Deterministic in (kind, params, seed). Sit clips carry a BoxObject, end
// with the pelvis on its top surface, and are flagged for the object region.
MotionClip GenerateClip(const CharacterModel& model, ClipKind kind,
                        const ClipParams& params, uint64_t seed);

}  // namespace mimic

#endif  // MIMIC_MOTION_GENERATORS_H_
