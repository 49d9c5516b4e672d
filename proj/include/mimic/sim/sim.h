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

#ifndef MIMIC_SIM_SIM_H_
#define MIMIC_SIM_SIM_H_

#include <array>
#include <vector>

#include "mimic/core/jsonio.h"
#include "mimic/core/math.h"
#include "mimic/sim/character.h"
#include "mimic/sim/terrain.h"

namespace mimic {

struct SimState {
  Vec2 root_pos;
  double root_rot = 0.0;
  std::vector<double> joint_angles;
  Vec2 root_vel;
  double root_ang_vel = 0.0;
  std::vector<double> joint_vels;
  double time = 0.0;
  // RMS joint torques over the substeps of the last control step; feeds the
  // energy penalty of the tracking reward. Zero-initialized at reset.
  std::vector<double> last_torques;

  static SimState Rest(const CharacterModel& model);
  bool Finite() const;
};

struct Action {
  std::vector<double> pd_targets;  // radians, J
};

struct SimConfig {
  double sim_dt = 1.0 / 120.0;
  int control_decimation = 4;       // controller at 30 Hz
  double gravity = -9.81;           // m/s^2
  double contact_stiffness = 30000.0;
  double contact_damping = 300.0;
  double friction_coeff = 0.8;
  double tangential_damping = 300.0;

  double ControlDt() const { return sim_dt * control_decimation; }

  void Validate() const;
  static SimConfig FromJson(const Json& j);
  Json ToJson() const;
};

// Advance one control step (control_decimation semi-implicit Euler substeps
// of sim_dt). PD torque per joint, clamped to torque_limit; spring-damper
// ground contact with a Coulomb-capped viscous friction at every chain
// point. Pure function of its inputs. Throws DivergedSimulation when the
// resulting state is non-finite.
SimState Step(const CharacterModel& model, const SimConfig& cfg,
              const Terrain& terrain, const SimState& state,
              const Action& action);

// Heightmap: 16 surface samples spaced 10 cm along the facing direction at
// offsets {-7..8}, each relative to the surface height under the root.
constexpr int kHeightmapSamples = 16;
constexpr double kHeightmapSpacing = 0.10;

std::array<double, kHeightmapSamples> SampleHeightmap(const SimState& state,
                                                      const Terrain& terrain);

// +1 when the character faces +x, -1 otherwise (sign of sin(root_rot), ties
// toward +1).
double Facing(double root_rot);

// Total mechanical energy of the lumped-mass model (test hook for the
// integrator-drift property).
double MechanicalEnergy(const CharacterModel& model, const SimConfig& cfg,
                        const SimState& state);

// Velocities of all chain points.
std::vector<Vec2> PointVelocities(const CharacterModel& model,
                                  const SimState& state);

}  // namespace mimic

#endif  // MIMIC_SIM_SIM_H_
