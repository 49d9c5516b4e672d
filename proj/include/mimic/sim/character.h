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

#ifndef MIMIC_SIM_CHARACTER_H_
#define MIMIC_SIM_CHARACTER_H_

#include <string>
#include <vector>

#include "mimic/core/jsonio.h"
#include "mimic/core/math.h"

namespace mimic {

// Planar articulated character: a serial chain of J links over J+1 points,
// with the root (pelvis) allowed to sit mid-chain. Link i connects points i
// and i+1. Joint i articulates link i relative to its inboard neighbor (the
// side facing the root; for the two links touching the root, relative to the
// root frame itself). Link masses are lumped at link midpoints.
//
// The default character reads, from point 0 to point 6:
//   foot - knee - pelvis(root) - chest - head - elbow - hand
struct CharacterModel {
  std::vector<std::string> point_names;   // J+1
  int root_index = 0;
  std::vector<double> link_lengths;       // meters, J
  std::vector<double> link_masses;        // kg, J
  std::vector<double> joint_limit_lo;     // radians, J
  std::vector<double> joint_limit_hi;     // radians, J
  std::vector<double> kp;                 // N*m/rad, J
  std::vector<double> kd;                 // N*m*s/rad, J
  std::vector<double> torque_limit;       // N*m, J

  // Ordered conditionable bodies (mask slots follow this order).
  std::vector<std::string> body_names;    // e.g. pelvis, head, hand, foot
  std::vector<int> body_points;           // chain point index per body

  int num_joints() const { return static_cast<int>(link_lengths.size()); }
  int num_points() const { return num_joints() + 1; }
  int num_bodies() const { return static_cast<int>(body_points.size()); }

  // Throws ConfigError when an invariant is violated (non-positive lengths
  // or masses, negative gains, lo >= hi, bad indices).
  void Validate() const;

  static CharacterModel Default();
  static CharacterModel FromJson(const Json& j);
  Json ToJson() const;
};

// World positions of all chain points plus world angles of all links.
struct Kinematics {
  std::vector<Vec2> points;       // J+1
  std::vector<double> link_angles;  // J
};

Kinematics ForwardKinematics(const CharacterModel& model, const Vec2& root_pos,
                             double root_rot,
                             const std::vector<double>& joint_angles);

// World angular rate of every link given root and joint rates.
std::vector<double> LinkAngularRates(const CharacterModel& model,
                                     double root_ang_vel,
                                     const std::vector<double>& joint_vels);

}  // namespace mimic

#endif  // MIMIC_SIM_CHARACTER_H_
