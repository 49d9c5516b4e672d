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

#ifndef MIMIC_MOTION_DATASET_H_
#define MIMIC_MOTION_DATASET_H_

#include <string>
#include <vector>

#include "mimic/core/rng.h"
#include "mimic/motion/clip.h"

namespace mimic {

// Spawn regions of the training playground. Object clips always start in the
// object region; everything else draws flat or irregular uniformly.
enum class Region { kFlat = 0, kIrregular = 1, kObject = 2 };
const char* RegionName(Region r);

struct Dataset {
  std::vector<MotionClip> clips;

  int size() const { return static_cast<int>(clips.size()); }
  const MotionClip& clip(int id) const { return clips[id]; }
};

// Clip JSON schema (format_version 1, fps must be 30):
// {
//   "format_version": 1, "fps": 30, "name": "...", "style_label": 0,
//   "requires_object_region": false,
//   "object": {"cx","cz","hw","hh","category"}?          (optional)
//   "poses": [ {"root": [x, z, rot], "joints": [..J..]}, ... ]
// }
// Derived positions/velocities are recomputed against the model on load.
Json ClipToJson(const MotionClip& clip);
MotionClip ClipFromJson(const CharacterModel& model, const Json& j);

void SaveClipFile(const std::string& path, const MotionClip& clip);
MotionClip LoadClipFile(const CharacterModel& model, const std::string& path);

// Dataset index: clip file names plus checksums. Loading verifies every
// checksum and throws RegenError on mismatch (stale or corrupt dataset).
void SaveDatasetIndex(const std::string& dir,
                      const std::vector<std::string>& files);
Dataset LoadDataset(const CharacterModel& model, const std::string& dir);

// Prioritized motion sampling: EMA failure rate per clip (only episodes that
// ended on flat terrain update it), weights proportional to the rate floored
// at `weight_floor`, renormalized.
class SamplingTable {
 public:
  SamplingTable() = default;
  explicit SamplingTable(int num_clips);

  void UpdateFailure(int clip_id, bool failed, bool on_flat);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& failure_rates() const { return failure_rates_; }

  int SampleClip(Rng& rng) const;

  static constexpr double kWeightFloor = 3e-3;
  static constexpr double kEmaHorizon = 100.0;

 private:
  void Recompute();

  std::vector<double> failure_rates_;
  std::vector<double> weights_;
};

struct EpisodeStart {
  int clip_id = 0;
  int start_frame = 0;
  Region region = Region::kFlat;
};

// Clip by table weights, start frame uniform in [0, T-2], region by the
// object rule above.
EpisodeStart SampleStart(const SamplingTable& table, const Dataset& dataset,
                         Rng& rng);

}  // namespace mimic

#endif  // MIMIC_MOTION_DATASET_H_
