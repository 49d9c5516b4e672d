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

#include "mimic/motion/clip.h"

#include <cmath>

#include "mimic/core/errors.h"

namespace mimic {
namespace {

// Largest plausible frame-to-frame chain point displacement (6 m/s at 30 Hz).
constexpr double kMaxPointStep = 0.2;

}  // namespace

std::vector<double> Pose::LinkAngles(const CharacterModel& model) const {
  return ForwardKinematics(model, root_pos, root_rot, joint_angles).link_angles;
}

SimState PoseToState(const CharacterModel& model, const Pose& pose) {
  SimState s;
  s.root_pos = pose.root_pos;
  s.root_rot = pose.root_rot;
  s.joint_angles = pose.joint_angles;
  s.root_vel = pose.root_vel;
  s.root_ang_vel = pose.root_ang_vel;
  s.joint_vels = pose.joint_vels;
  s.time = 0.0;
  s.last_torques.assign(model.num_joints(), 0.0);
  return s;
}

Pose StateToPose(const CharacterModel& model, const SimState& state) {
  Pose p;
  p.root_pos = state.root_pos;
  p.root_rot = state.root_rot;
  p.joint_angles = state.joint_angles;
  p.root_vel = state.root_vel;
  p.root_ang_vel = state.root_ang_vel;
  p.joint_vels = state.joint_vels;
  p.joint_positions =
      ForwardKinematics(model, p.root_pos, p.root_rot, p.joint_angles).points;
  p.point_vels = PointVelocities(model, state);
  return p;
}

void MotionClip::RecomputeDerived(const CharacterModel& model) {
  const int t_count = frames();
  for (Pose& p : poses) {
    p.joint_positions =
        ForwardKinematics(model, p.root_pos, p.root_rot, p.joint_angles).points;
  }
  const int j = model.num_joints();
  for (int t = 0; t < t_count; ++t) {
    const int lo = t > 0 ? t - 1 : t;
    const int hi = t < t_count - 1 ? t + 1 : t;
    const double dt = (hi - lo) / kClipFps;
    const Pose& a = poses[lo];
    const Pose& b = poses[hi];
    Pose& p = poses[t];
    if (dt == 0.0) {
      p.root_vel = {0.0, 0.0};
      p.root_ang_vel = 0.0;
      p.joint_vels.assign(j, 0.0);
      p.point_vels.assign(j + 1, Vec2{});
      continue;
    }
    p.root_vel = (b.root_pos - a.root_pos) * (1.0 / dt);
    p.root_ang_vel = (b.root_rot - a.root_rot) / dt;
    p.joint_vels.resize(j);
    for (int i = 0; i < j; ++i) {
      p.joint_vels[i] = (b.joint_angles[i] - a.joint_angles[i]) / dt;
    }
    p.point_vels.resize(j + 1);
    for (int i = 0; i <= j; ++i) {
      p.point_vels[i] = (b.joint_positions[i] - a.joint_positions[i]) * (1.0 / dt);
    }
  }
}

void MotionClip::Validate(const CharacterModel& model) const {
  if (frames() < 2) throw ConfigError("clip needs at least 2 poses: " + name);
  const int j = model.num_joints();
  for (int t = 0; t < frames(); ++t) {
    const Pose& p = poses[t];
    if (static_cast<int>(p.joint_angles.size()) != j) {
      throw ConfigError("clip joint width mismatch: " + name);
    }
    const auto fk =
        ForwardKinematics(model, p.root_pos, p.root_rot, p.joint_angles);
    if (static_cast<int>(p.joint_positions.size()) != j + 1) {
      throw ConfigError("clip positions missing: " + name);
    }
    for (int i = 0; i <= j; ++i) {
      if ((fk.points[i] - p.joint_positions[i]).Norm() > 1e-9) {
        throw ConfigError("clip positions inconsistent with kinematics: " + name);
      }
    }
    if (t > 0) {
      for (int i = 0; i <= j; ++i) {
        const double d =
            (p.joint_positions[i] - poses[t - 1].joint_positions[i]).Norm();
        if (d > kMaxPointStep) {
          throw ConfigError("clip teleports between frames: " + name);
        }
      }
    }
  }
  if (requires_object_region && !object.has_value()) {
    throw ConfigError("object-region clip is missing its object: " + name);
  }
}

void MotionClip::TranslateX(double dx) {
  for (Pose& p : poses) {
    p.root_pos.x += dx;
    for (Vec2& pt : p.joint_positions) pt.x += dx;
  }
  if (object.has_value()) object->cx += dx;
}

MotionClip MirrorClip(const MotionClip& clip) {
  MotionClip m = clip;
  for (Pose& p : m.poses) {
    p.root_pos.x = -p.root_pos.x;
    p.root_rot = -p.root_rot;
    for (double& a : p.joint_angles) a = -a;
    for (Vec2& pt : p.joint_positions) pt.x = -pt.x;
    p.root_vel.x = -p.root_vel.x;
    p.root_ang_vel = -p.root_ang_vel;
    for (double& v : p.joint_vels) v = -v;
    for (Vec2& v : p.point_vels) v.x = -v.x;
  }
  if (m.object.has_value()) m.object->cx = -m.object->cx;
  return m;
}

MotionClip RetargetToTerrain(const MotionClip& clip, const Terrain& terrain) {
  if (clip.object.has_value()) {
    throw InvalidRetarget("object clips stay on flat ground: " + clip.name);
  }
  MotionClip out = clip;
  for (Pose& p : out.poses) {
    const double h = terrain.Surface(p.root_pos.x);
    p.root_pos.z += h;
    for (Vec2& pt : p.joint_positions) pt.z += h;
  }
  // Heights changed, so vertical velocities pick up the terrain profile.
  const int t_count = out.frames();
  for (int t = 0; t < t_count; ++t) {
    const int lo = t > 0 ? t - 1 : t;
    const int hi = t < t_count - 1 ? t + 1 : t;
    const double dt = (hi - lo) / kClipFps;
    if (dt == 0.0) continue;
    Pose& p = out.poses[t];
    p.root_vel.z = (out.poses[hi].root_pos.z - out.poses[lo].root_pos.z) / dt;
    for (size_t i = 0; i < p.point_vels.size(); ++i) {
      p.point_vels[i].z = (out.poses[hi].joint_positions[i].z -
                           out.poses[lo].joint_positions[i].z) /
                          dt;
    }
  }
  return out;
}

}  // namespace mimic
