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

#ifndef MIMIC_MOTION_CLIP_H_
#define MIMIC_MOTION_CLIP_H_

#include <optional>
#include <string>
#include <vector>

#include "mimic/sim/sim.h"

namespace mimic {

inline constexpr double kClipFps = 30.0;

// Kinematic reference pose at one 30 Hz frame. joint_positions are derived
// from (root, joint_angles) by forward kinematics; velocities are central
// finite differences over the clip.
struct Pose {
  Vec2 root_pos;
  double root_rot = 0.0;
  std::vector<double> joint_angles;
  std::vector<Vec2> joint_positions;  // J+1 chain points
  Vec2 root_vel;
  double root_ang_vel = 0.0;
  std::vector<double> joint_vels;
  std::vector<Vec2> point_vels;       // J+1, finite differenced

  // World angle of every link for this pose.
  std::vector<double> LinkAngles(const CharacterModel& model) const;
};

SimState PoseToState(const CharacterModel& model, const Pose& pose);
Pose StateToPose(const CharacterModel& model, const SimState& state);

struct MotionClip {
  std::string name;
  std::vector<Pose> poses;
  std::optional<BoxObject> object;
  int style_label = -1;
  bool requires_object_region = false;

  int frames() const { return static_cast<int>(poses.size()); }
  double duration() const { return (frames() - 1) / kClipFps; }

  // Recompute derived fields from (root, joint_angles): positions by forward
  // kinematics, all velocities by central differences at 30 Hz.
  void RecomputeDerived(const CharacterModel& model);

  // T >= 2, derived fields consistent, and bounded frame-to-frame point
  // displacement (no teleports). Throws ConfigError.
  void Validate(const CharacterModel& model) const;

  // Rigid x-translation of the whole clip (object included).
  void TranslateX(double dx);
};

// x-reflection. Angles are measured from vertical, so mirroring negates
// root_rot and every joint angle, making the operation an exact involution
// in floating point.
MotionClip MirrorClip(const MotionClip& clip);

// Offsets every pose's root_z (and derived z data) by the terrain surface
// height under that pose's root_x, then refreshes the finite-difference
// velocities. Throws InvalidRetarget for clips carrying an object.
MotionClip RetargetToTerrain(const MotionClip& clip, const Terrain& terrain);

}  // namespace mimic

#endif  // MIMIC_MOTION_CLIP_H_
