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

#ifndef MIMIC_SIM_TRAJECTORY_H_
#define MIMIC_SIM_TRAJECTORY_H_

#include <string>
#include <vector>

#include "mimic/sim/sim.h"

namespace mimic {

// One row per control step: time, root pose, joint angles, velocities.
void ExportTrajectoryCsv(const std::string& path, const CharacterModel& model,
                         const std::vector<SimState>& states);

// Versioned binary snapshot of the same data (Archive container).
void ExportTrajectorySnapshot(const std::string& path,
                              const CharacterModel& model,
                              const std::vector<SimState>& states);
std::vector<SimState> LoadTrajectorySnapshot(const std::string& path);

}  // namespace mimic

#endif  // MIMIC_SIM_TRAJECTORY_H_
