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

#include "mimic/sim/trajectory.h"

#include "mimic/core/binio.h"
#include "mimic/core/csv.h"

namespace mimic {

void ExportTrajectoryCsv(const std::string& path, const CharacterModel& model,
                         const std::vector<SimState>& states) {
  const int j = model.num_joints();
  std::vector<std::string> header = {"time", "root_x", "root_z", "root_rot"};
  for (int i = 0; i < j; ++i) header.push_back("q" + std::to_string(i));
  header.insert(header.end(), {"root_vx", "root_vz", "root_ang_vel"});
  for (int i = 0; i < j; ++i) header.push_back("qd" + std::to_string(i));
  CsvWriter csv(path, header);
  std::vector<double> row;
  for (const SimState& s : states) {
    row.clear();
    row.push_back(s.time);
    row.push_back(s.root_pos.x);
    row.push_back(s.root_pos.z);
    row.push_back(s.root_rot);
    for (double a : s.joint_angles) row.push_back(a);
    row.push_back(s.root_vel.x);
    row.push_back(s.root_vel.z);
    row.push_back(s.root_ang_vel);
    for (double v : s.joint_vels) row.push_back(v);
    csv.Row(row);
  }
}

void ExportTrajectorySnapshot(const std::string& path,
                              const CharacterModel& model,
                              const std::vector<SimState>& states) {
  const int j = model.num_joints();
  const long t = static_cast<long>(states.size());
  Archive a;
  a.PutScalarI64("num_joints", j);
  a.PutScalarI64("num_steps", t);
  a.PutText("stream", "trajectory");
  std::vector<double> time(t), rx(t), rz(t), rr(t), vx(t), vz(t), w(t);
  std::vector<double> q(t * j), qd(t * j);
  for (long i = 0; i < t; ++i) {
    const SimState& s = states[i];
    time[i] = s.time;
    rx[i] = s.root_pos.x;
    rz[i] = s.root_pos.z;
    rr[i] = s.root_rot;
    vx[i] = s.root_vel.x;
    vz[i] = s.root_vel.z;
    w[i] = s.root_ang_vel;
    for (int k = 0; k < j; ++k) {
      q[i * j + k] = s.joint_angles[k];
      qd[i * j + k] = s.joint_vels[k];
    }
  }
  a.PutF64("time", std::move(time));
  a.PutF64("root_x", std::move(rx));
  a.PutF64("root_z", std::move(rz));
  a.PutF64("root_rot", std::move(rr));
  a.PutF64("root_vx", std::move(vx));
  a.PutF64("root_vz", std::move(vz));
  a.PutF64("root_ang_vel", std::move(w));
  a.PutF64("joint_angles", std::move(q));
  a.PutF64("joint_vels", std::move(qd));
  a.Save(path);
}

std::vector<SimState> LoadTrajectorySnapshot(const std::string& path) {
  const Archive a = Archive::Load(path);
  const int j = static_cast<int>(a.GetScalarI64("num_joints"));
  const long t = a.GetScalarI64("num_steps");
  const auto& time = a.GetF64("time");
  const auto& rx = a.GetF64("root_x");
  const auto& rz = a.GetF64("root_z");
  const auto& rr = a.GetF64("root_rot");
  const auto& vx = a.GetF64("root_vx");
  const auto& vz = a.GetF64("root_vz");
  const auto& w = a.GetF64("root_ang_vel");
  const auto& q = a.GetF64("joint_angles");
  const auto& qd = a.GetF64("joint_vels");
  std::vector<SimState> out(t);
  for (long i = 0; i < t; ++i) {
    SimState& s = out[i];
    s.time = time[i];
    s.root_pos = {rx[i], rz[i]};
    s.root_rot = rr[i];
    s.root_vel = {vx[i], vz[i]};
    s.root_ang_vel = w[i];
    s.joint_angles.assign(q.begin() + i * j, q.begin() + (i + 1) * j);
    s.joint_vels.assign(qd.begin() + i * j, qd.begin() + (i + 1) * j);
    s.last_torques.assign(j, 0.0);
  }
  return out;
}

}  // namespace mimic
