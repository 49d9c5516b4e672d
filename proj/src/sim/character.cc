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

#include "mimic/sim/character.h"

#include <cmath>

#include "mimic/core/errors.h"

namespace mimic {

void CharacterModel::Validate() const {
  const int j = num_joints();
  if (j < 1) throw ConfigError("character needs at least one link");
  if (static_cast<int>(point_names.size()) != j + 1) {
    throw ConfigError("point_names must have J+1 entries");
  }
  if (root_index < 0 || root_index > j) {
    throw ConfigError("root_index out of range");
  }
  auto check_size = [j](const std::vector<double>& v, const char* name) {
    if (static_cast<int>(v.size()) != j) {
      throw ConfigError(std::string(name) + " must have J entries");
    }
  };
  check_size(link_lengths, "link_lengths");
  check_size(link_masses, "link_masses");
  check_size(joint_limit_lo, "joint_limit_lo");
  check_size(joint_limit_hi, "joint_limit_hi");
  check_size(kp, "kp");
  check_size(kd, "kd");
  check_size(torque_limit, "torque_limit");
  for (int i = 0; i < j; ++i) {
    if (!(link_lengths[i] > 0.0)) throw ConfigError("link_lengths must be > 0");
    if (!(link_masses[i] > 0.0)) throw ConfigError("link_masses must be > 0");
    if (kp[i] < 0.0 || kd[i] < 0.0) throw ConfigError("pd gains must be >= 0");
    if (!(joint_limit_lo[i] < joint_limit_hi[i])) {
      throw ConfigError("joint limits need lo < hi");
    }
    if (!(torque_limit[i] > 0.0)) throw ConfigError("torque_limit must be > 0");
  }
  if (body_names.size() != body_points.size()) {
    throw ConfigError("body_names/body_points size mismatch");
  }
  for (int p : body_points) {
    if (p < 0 || p > j) throw ConfigError("body point index out of range");
  }
}

CharacterModel CharacterModel::Default() {
  CharacterModel m;
  m.point_names = {"foot", "knee", "pelvis", "chest", "head", "elbow", "hand"};
  m.root_index = 2;
  m.link_lengths = {0.45, 0.45, 0.45, 0.25, 0.30, 0.30};
  m.link_masses = {4.0, 7.0, 14.0, 6.0, 2.5, 1.5};
  m.joint_limit_lo = {-2.8, -2.8, -2.8, -2.8, 3.14159265358979323846 - 2.6, -2.8};
  m.joint_limit_hi = {2.8, 2.8, 2.8, 2.8, 3.14159265358979323846 + 2.6, 2.8};
  m.kp = {280.0, 280.0, 320.0, 120.0, 80.0, 60.0};
  m.kd = {28.0, 28.0, 32.0, 12.0, 8.0, 6.0};
  m.torque_limit = {250.0, 250.0, 300.0, 120.0, 80.0, 60.0};
  m.body_names = {"pelvis", "head", "hand", "foot"};
  m.body_points = {2, 4, 6, 0};
  m.Validate();
  return m;
}

Kinematics ForwardKinematics(const CharacterModel& model, const Vec2& root_pos,
                             double root_rot,
                             const std::vector<double>& joint_angles) {
  const int j = model.num_joints();
  const int r = model.root_index;
  Kinematics k;
  k.points.resize(j + 1);
  k.link_angles.resize(j);
  k.points[r] = root_pos;

  // Outboard of the root: link i articulated on link i-1.
  double a = root_rot;
  for (int i = r; i < j; ++i) {
    a += joint_angles[i];
    k.link_angles[i] = a;
    k.points[i + 1] = k.points[i] + AngleDir(a) * model.link_lengths[i];
  }
  // Inboard of the root, walking away from it: link i articulated on link
  // i+1 (or the root frame for i = r-1).
  a = root_rot;
  for (int i = r - 1; i >= 0; --i) {
    a += joint_angles[i];
    k.link_angles[i] = a;
    k.points[i] = k.points[i + 1] - AngleDir(a) * model.link_lengths[i];
  }
  return k;
}

std::vector<double> LinkAngularRates(const CharacterModel& model,
                                     double root_ang_vel,
                                     const std::vector<double>& joint_vels) {
  const int j = model.num_joints();
  const int r = model.root_index;
  std::vector<double> rates(j);
  double w = root_ang_vel;
  for (int i = r; i < j; ++i) {
    w += joint_vels[i];
    rates[i] = w;
  }
  w = root_ang_vel;
  for (int i = r - 1; i >= 0; --i) {
    w += joint_vels[i];
    rates[i] = w;
  }
  return rates;
}

CharacterModel CharacterModel::FromJson(const Json& j) {
  RequireKeys(j,
              {"format_version", "point_names", "root_index", "link_lengths",
               "link_masses", "joint_limit_lo", "joint_limit_hi", "kp", "kd",
               "torque_limit", "body_names", "body_points"},
              "character");
  CharacterModel m;
  m.point_names = j.at("point_names").get<std::vector<std::string>>();
  m.root_index = j.at("root_index").get<int>();
  m.link_lengths = j.at("link_lengths").get<std::vector<double>>();
  m.link_masses = j.at("link_masses").get<std::vector<double>>();
  m.joint_limit_lo = j.at("joint_limit_lo").get<std::vector<double>>();
  m.joint_limit_hi = j.at("joint_limit_hi").get<std::vector<double>>();
  m.kp = j.at("kp").get<std::vector<double>>();
  m.kd = j.at("kd").get<std::vector<double>>();
  m.torque_limit = j.at("torque_limit").get<std::vector<double>>();
  m.body_names = j.at("body_names").get<std::vector<std::string>>();
  m.body_points = j.at("body_points").get<std::vector<int>>();
  m.Validate();
  return m;
}

Json CharacterModel::ToJson() const {
  Json j;
  j["format_version"] = 1;
  j["point_names"] = point_names;
  j["root_index"] = root_index;
  j["link_lengths"] = link_lengths;
  j["link_masses"] = link_masses;
  j["joint_limit_lo"] = joint_limit_lo;
  j["joint_limit_hi"] = joint_limit_hi;
  j["kp"] = kp;
  j["kd"] = kd;
  j["torque_limit"] = torque_limit;
  j["body_names"] = body_names;
  j["body_points"] = body_points;
  return j;
}

}  // namespace mimic
