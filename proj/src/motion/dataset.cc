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

#include "mimic/motion/dataset.h"

#include <filesystem>

#include "mimic/core/errors.h"
#include "mimic/core/fnv.h"
#include "mimic/core/jsonio.h"

namespace mimic {

const char* RegionName(Region r) {
  switch (r) {
    case Region::kFlat: return "flat";
    case Region::kIrregular: return "irregular";
    case Region::kObject: return "object";
  }
  return "?";
}

Json ClipToJson(const MotionClip& clip) {
  Json j;
  j["format_version"] = 1;
  j["fps"] = 30;
  j["name"] = clip.name;
  j["style_label"] = clip.style_label;
  j["requires_object_region"] = clip.requires_object_region;
  if (clip.object.has_value()) {
    Json o;
    o["cx"] = clip.object->cx;
    o["cz"] = clip.object->cz;
    o["hw"] = clip.object->hw;
    o["hh"] = clip.object->hh;
    o["category"] = clip.object->category;
    j["object"] = o;
  }
  Json poses = Json::array();
  for (const Pose& p : clip.poses) {
    Json pose;
    pose["root"] = {p.root_pos.x, p.root_pos.z, p.root_rot};
    pose["joints"] = p.joint_angles;
    poses.push_back(pose);
  }
  j["poses"] = poses;
  return j;
}

MotionClip ClipFromJson(const CharacterModel& model, const Json& j) {
  RequireKeys(j,
              {"format_version", "fps", "name", "style_label",
               "requires_object_region", "object", "poses"},
              "clip");
  if (GetInt(j, "format_version", -1) != 1) {
    throw ConfigError("unsupported clip format_version");
  }
  if (GetInt(j, "fps", 0) != 30) throw ConfigError("clip fps must be 30");
  MotionClip clip;
  clip.name = GetStr(j, "name", "clip");
  clip.style_label = GetInt(j, "style_label", -1);
  if (clip.style_label >= kStyleVocabulary) {
    throw ConfigError("style_label beyond vocabulary");
  }
  clip.requires_object_region = GetBool(j, "requires_object_region", false);
  if (j.contains("object")) {
    const Json& o = j.at("object");
    RequireKeys(o, {"cx", "cz", "hw", "hh", "category"}, "clip.object");
    BoxObject box;
    box.cx = GetNum(o, "cx", 0.0);
    box.cz = GetNum(o, "cz", 0.0);
    box.hw = GetNum(o, "hw", 0.0);
    box.hh = GetNum(o, "hh", 0.0);
    box.category = GetInt(o, "category", 0);
    clip.object = box;
  }
  for (const Json& pose : j.at("poses")) {
    RequireKeys(pose, {"root", "joints"}, "clip.poses[]");
    Pose p;
    const auto root = pose.at("root").get<std::vector<double>>();
    if (root.size() != 3) throw ConfigError("pose root must be [x, z, rot]");
    p.root_pos = {root[0], root[1]};
    p.root_rot = root[2];
    p.joint_angles = pose.at("joints").get<std::vector<double>>();
    clip.poses.push_back(std::move(p));
  }
  clip.RecomputeDerived(model);
  clip.Validate(model);
  return clip;
}

void SaveClipFile(const std::string& path, const MotionClip& clip) {
  SaveJsonFile(path, ClipToJson(clip));
}

MotionClip LoadClipFile(const CharacterModel& model, const std::string& path) {
  return ClipFromJson(model, LoadJsonFile(path));
}

void SaveDatasetIndex(const std::string& dir,
                      const std::vector<std::string>& files) {
  Json index;
  index["format_version"] = 1;
  Json entries = Json::array();
  for (const std::string& f : files) {
    Json e;
    e["file"] = f;
    e["checksum"] = HexHash(HashFile(dir + "/" + f));
    entries.push_back(e);
  }
  index["clips"] = entries;
  SaveJsonFile(dir + "/index.json", index);
}

Dataset LoadDataset(const CharacterModel& model, const std::string& dir) {
  const std::string index_path = dir + "/index.json";
  if (!std::filesystem::exists(index_path)) {
    throw RegenError("dataset index missing: " + index_path);
  }
  const Json index = LoadJsonFile(index_path);
  RequireKeys(index, {"format_version", "clips"}, "dataset index");
  Dataset ds;
  for (const Json& e : index.at("clips")) {
    RequireKeys(e, {"file", "checksum"}, "dataset index entry");
    const std::string file = e.at("file").get<std::string>();
    const std::string path = dir + "/" + file;
    if (!std::filesystem::exists(path)) {
      throw RegenError("dataset clip missing: " + path);
    }
    const std::string want = e.at("checksum").get<std::string>();
    const std::string have = HexHash(HashFile(path));
    if (want != have) {
      throw RegenError("dataset checksum mismatch for " + file +
                       " (expected " + want + ", found " + have + ")");
    }
    ds.clips.push_back(LoadClipFile(model, path));
  }
  if (ds.clips.empty()) throw RegenError("dataset is empty: " + dir);
  return ds;
}

SamplingTable::SamplingTable(int num_clips)
    : failure_rates_(num_clips, 0.0), weights_(num_clips, 0.0) {
  Recompute();
}

void SamplingTable::UpdateFailure(int clip_id, bool failed, bool on_flat) {
  // Failures on irregular terrain are expected for some motions and do not
  // drive prioritization.
  if (!on_flat) return;
  double& rate = failure_rates_.at(clip_id);
  rate += ((failed ? 1.0 : 0.0) - rate) / kEmaHorizon;
  Recompute();
}

void SamplingTable::Recompute() {
  double sum = 0.0;
  for (size_t i = 0; i < weights_.size(); ++i) {
    weights_[i] = std::max(failure_rates_[i], kWeightFloor);
    sum += weights_[i];
  }
  for (double& w : weights_) w /= sum;
}

int SamplingTable::SampleClip(Rng& rng) const {
  const double u = rng.Uniform();
  double acc = 0.0;
  for (size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights_.size()) - 1;
}

EpisodeStart SampleStart(const SamplingTable& table, const Dataset& dataset,
                         Rng& rng) {
  if (dataset.size() == 0) throw ConfigError("cannot sample from empty dataset");
  EpisodeStart s;
  s.clip_id = table.SampleClip(rng);
  const MotionClip& clip = dataset.clip(s.clip_id);
  s.start_frame = static_cast<int>(rng.UniformInt(0, clip.frames() - 2));
  if (clip.requires_object_region) {
    s.region = Region::kObject;
  } else {
    s.region = rng.Bernoulli(0.5) ? Region::kFlat : Region::kIrregular;
  }
  return s;
}

}  // namespace mimic
