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

// Procedural stand-ins for mocap. Each generator lays out a smooth joint
// angle program plus a root trajectory on flat ground; root height is chosen
// per frame so the lowest chain point grazes the ground (except the sit
// clip, which scripts the descent explicitly). Derived positions and
// finite-difference velocities are recomputed at the end, so clips are
// kinematically consistent by construction.

#include "mimic/motion/generators.h"

#include <cmath>
#include <string>

#include "mimic/core/errors.h"
#include "mimic/core/rng.h"

namespace mimic {
namespace {

constexpr double kGroundClearance = 0.005;

double SmoothStep(double u) {
  u = std::clamp(u, 0.0, 1.0);
  return u * u * (3.0 - 2.0 * u);
}

// Lowest chain point relative to the root for a given angle set.
double MinRelativeZ(const CharacterModel& model, double root_rot,
                    const std::vector<double>& angles) {
  const Kinematics k = ForwardKinematics(model, {0.0, 0.0}, root_rot, angles);
  double zmin = 0.0;
  for (const Vec2& p : k.points) zmin = std::min(zmin, p.z);
  return zmin;
}

struct FramePlan {
  double root_x = 0.0;
  double root_rot = 0.0;
  std::vector<double> angles;
  bool explicit_z = false;
  double root_z = 0.0;
};

MotionClip AssembleClip(const CharacterModel& model, const std::string& name,
                        const std::vector<FramePlan>& plan) {
  MotionClip clip;
  clip.name = name;
  clip.poses.resize(plan.size());
  for (size_t t = 0; t < plan.size(); ++t) {
    Pose& p = clip.poses[t];
    p.root_pos.x = plan[t].root_x;
    p.root_rot = plan[t].root_rot;
    p.joint_angles = plan[t].angles;
    p.root_pos.z = plan[t].explicit_z
                       ? plan[t].root_z
                       : kGroundClearance -
                             MinRelativeZ(model, p.root_rot, p.joint_angles);
  }
  clip.RecomputeDerived(model);
  return clip;
}

void CheckRange(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    throw ParamRange(std::string(what) + " out of range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

int FrameCount(double duration) {
  return static_cast<int>(std::lround(duration * kClipFps));
}

// Joint indices of the default chain layout.
enum : int { kKnee = 0, kHip = 1, kTorso = 2, kNeck = 3, kShoulder = 4, kElbow = 5 };

std::vector<double> RestAngles(const CharacterModel& model) {
  std::vector<double> a(model.num_joints(), 0.0);
  if (model.num_joints() > kShoulder) a[kShoulder] = kPi;  // arm hangs down
  return a;
}

MotionClip GenerateGait(const CharacterModel& model, ClipKind kind,
                        const ClipParams& prm, uint64_t seed) {
  const bool crouch = kind == ClipKind::kCrouchWalk;
  const bool crawl = kind == ClipKind::kCrawl;
  if (crawl) {
    CheckRange(prm.speed, 0.05, 0.5, "crawl speed");
  } else if (crouch) {
    CheckRange(prm.speed, 0.1, 0.8, "crouch_walk speed");
  } else {
    CheckRange(prm.speed, 0.1, 1.2, "walk speed");
  }
  CheckRange(prm.duration, 1.0, 30.0, "duration");
  CheckRange(prm.amplitude, 0.25, 2.0, "amplitude");

  Rng rng(Rng::Derive(seed, static_cast<uint64_t>(kind)));
  const double phase0 = rng.Uniform(0.0, 2.0 * kPi);
  const double jitter = rng.Uniform(0.95, 1.05);

  const double swing = (crawl ? 0.18 : 0.38) * prm.amplitude * jitter *
                       std::clamp(prm.speed, 0.2, 1.0);
  const double stride = 1.8 * std::max(0.08, std::sin(std::max(swing, 0.05)));
  const double freq = prm.speed / std::max(0.25, stride);
  const double omega = 2.0 * kPi * freq;

  const int frames = FrameCount(prm.duration);
  std::vector<FramePlan> plan(frames);
  for (int t = 0; t < frames; ++t) {
    const double s = t / kClipFps;
    const double ph = omega * s + phase0;
    FramePlan& f = plan[t];
    f.root_x = prm.speed * s;
    f.angles = RestAngles(model);
    if (crawl) {
      f.root_rot = 1.15 + 0.05 * std::sin(ph);
      f.angles[kHip] = -0.55 + 0.5 * swing * std::sin(ph);
      f.angles[kKnee] = -0.40 + 0.5 * swing * std::sin(ph + 0.9);
      f.angles[kTorso] = 0.10 + 0.08 * std::sin(ph + kPi / 2);
      f.angles[kNeck] = -0.45;
      f.angles[kShoulder] = kPi - 1.05 + 0.35 * swing * std::sin(ph + kPi);
      f.angles[kElbow] = 0.30 + 0.1 * std::sin(ph + kPi);
    } else {
      const double lean = crouch ? 0.30 : 0.05 + 0.04 * prm.speed;
      f.root_rot = lean + 0.02 * std::sin(2.0 * ph);
      f.angles[kHip] = (crouch ? 0.70 : 0.0) + swing * std::sin(ph);
      f.angles[kKnee] =
          (crouch ? -1.10 : 0.0) - 0.45 * swing * (1.0 + std::sin(ph + kPi / 2));
      f.angles[kTorso] = (crouch ? 0.25 : 0.02) + 0.03 * std::sin(ph + kPi);
      f.angles[kShoulder] = kPi + 0.35 * swing * std::sin(ph + kPi);
      f.angles[kElbow] = 0.15 + 0.10 * std::sin(ph + kPi / 2);
    }
  }
  MotionClip clip = AssembleClip(model, std::string(ClipKindName(kind)), plan);
  clip.style_label = static_cast<int>(kind);
  return clip;
}

MotionClip GenerateReach(const CharacterModel& model, const ClipParams& prm,
                         uint64_t seed) {
  CheckRange(prm.duration, 1.0, 30.0, "duration");
  CheckRange(prm.amplitude, 0.25, 2.0, "amplitude");
  Rng rng(Rng::Derive(seed, 21));
  const double phase0 = rng.Uniform(0.0, 2.0 * kPi);
  const double rate = rng.Uniform(0.20, 0.35);
  const int frames = FrameCount(prm.duration);
  std::vector<FramePlan> plan(frames);
  for (int t = 0; t < frames; ++t) {
    const double s = t / kClipFps;
    const double ph = 2.0 * kPi * rate * s + phase0;
    FramePlan& f = plan[t];
    f.root_x = 0.02 * std::sin(0.7 * ph);
    f.root_rot = 0.03 * std::sin(ph);
    f.angles = RestAngles(model);
    f.angles[kShoulder] =
        kPi - 0.45 * prm.amplitude - 0.85 * prm.amplitude * std::sin(ph);
    f.angles[kElbow] = 0.35 * prm.amplitude * (1.0 + std::cos(ph + 0.7));
    f.angles[kTorso] = -0.06 * std::sin(ph);
  }
  MotionClip clip = AssembleClip(model, "reach", plan);
  clip.style_label = static_cast<int>(ClipKind::kReach);
  return clip;
}

MotionClip GenerateBalance(const CharacterModel& model, const ClipParams& prm,
                           uint64_t seed) {
  CheckRange(prm.duration, 1.0, 30.0, "duration");
  CheckRange(prm.amplitude, 0.25, 2.0, "amplitude");
  Rng rng(Rng::Derive(seed, 22));
  const int j = model.num_joints();
  std::vector<double> amp(j), freq(j), phase(j);
  for (int i = 0; i < j; ++i) {
    amp[i] = prm.amplitude * rng.Uniform(0.03, 0.09);
    freq[i] = rng.Uniform(0.15, 0.45);
    phase[i] = rng.Uniform(0.0, 2.0 * kPi);
  }
  const int frames = FrameCount(prm.duration);
  std::vector<FramePlan> plan(frames);
  for (int t = 0; t < frames; ++t) {
    const double s = t / kClipFps;
    FramePlan& f = plan[t];
    f.root_x = 0.0;
    f.root_rot = 0.035 * prm.amplitude * std::sin(2.0 * kPi * 0.21 * s);
    f.angles = RestAngles(model);
    for (int i = 0; i < j; ++i) {
      f.angles[i] += amp[i] * std::sin(2.0 * kPi * freq[i] * s + phase[i]);
    }
  }
  MotionClip clip = AssembleClip(model, "balance", plan);
  clip.style_label = static_cast<int>(ClipKind::kBalance);
  return clip;
}

MotionClip GenerateSit(const CharacterModel& model, const ClipParams& prm,
                       uint64_t seed) {
  CheckRange(prm.duration, 1.0, 10.0, "sit approach duration");
  CheckRange(prm.amplitude, 0.25, 2.0, "amplitude");
  CheckRange(prm.speed, 0.1, 1.0, "sit approach speed");
  Rng rng(Rng::Derive(seed, 23));
  const double phase0 = rng.Uniform(0.0, 2.0 * kPi);

  const double approach_time = prm.duration;
  const double settle_time = 0.4;
  const double lower_time = 1.0;
  const double hold_time = 0.7;
  const double approach_dist = prm.speed * approach_time * 0.75;

  const double seat_top = 0.50;
  const double fold_hip = 1.10;
  const double fold_knee = -1.90;
  // The pelvis slides back onto the seat while folding; the box front edge
  // stays behind every ground contact so the feet never enter its footprint.
  const double seat_shift = 0.20;
  const double box_half_width = 0.35;
  const double box_front_gap = 0.10;

  const int frames =
      FrameCount(approach_time + settle_time + lower_time + hold_time);
  const double swing = 0.30 * prm.amplitude * std::clamp(prm.speed, 0.2, 1.0);
  const double stride = 1.8 * std::max(0.08, std::sin(std::max(swing, 0.05)));
  const double omega = 2.0 * kPi * prm.speed / std::max(0.25, stride);

  std::vector<FramePlan> plan(frames);
  double stand_z = 0.0;
  for (int t = 0; t < frames; ++t) {
    const double s = t / kClipFps;
    FramePlan& f = plan[t];
    f.angles = RestAngles(model);
    if (s <= approach_time) {
      // Ease the advance so velocity is zero at arrival.
      const double u = SmoothStep(s / approach_time);
      const double fade = 1.0 - SmoothStep((s - 0.7 * approach_time) /
                                           (0.3 * approach_time));
      const double ph = omega * s + phase0;
      f.root_x = approach_dist * u;
      f.root_rot = 0.05 * fade;
      f.angles[kHip] = swing * fade * std::sin(ph);
      f.angles[kKnee] = -0.45 * swing * fade * (1.0 + std::sin(ph + kPi / 2));
      f.angles[kShoulder] = kPi + 0.3 * swing * fade * std::sin(ph + kPi);
    } else {
      f.root_x = approach_dist;
      const double since = s - approach_time;
      if (since <= settle_time) {
        f.root_rot = 0.05 * (1.0 - since / settle_time);
      } else {
        const double u = SmoothStep((since - settle_time) / lower_time);
        f.root_x = approach_dist + seat_shift * u;
        f.root_rot = 0.10 * u;
        f.angles[kHip] = fold_hip * u;
        f.angles[kKnee] = fold_knee * u;
        f.angles[kShoulder] = kPi - 0.8 * u;
        f.angles[kElbow] = 0.3 * u;
        f.angles[kTorso] = 0.12 * u;
        if (stand_z == 0.0) {
          stand_z = kGroundClearance -
                    MinRelativeZ(model, 0.0, RestAngles(model));
        }
        f.explicit_z = true;
        f.root_z = stand_z + (seat_top - stand_z) * u;
      }
    }
  }
  MotionClip clip = AssembleClip(model, "sit", plan);
  clip.style_label = static_cast<int>(ClipKind::kSit);
  clip.requires_object_region = true;
  BoxObject box;
  box.cx = approach_dist + box_front_gap + box_half_width;
  box.cz = seat_top / 2.0;
  box.hw = box_half_width;
  box.hh = seat_top / 2.0;
  box.category = 0;
  clip.object = box;
  return clip;
}

}  // namespace

const char* ClipKindName(ClipKind k) {
  switch (k) {
    case ClipKind::kWalk: return "walk";
    case ClipKind::kCrouchWalk: return "crouch_walk";
    case ClipKind::kCrawl: return "crawl";
    case ClipKind::kReach: return "reach";
    case ClipKind::kSit: return "sit";
    case ClipKind::kBalance: return "balance";
  }
  return "?";
}

ClipKind ClipKindFromName(const std::string& name) {
  if (name == "walk") return ClipKind::kWalk;
  if (name == "crouch_walk") return ClipKind::kCrouchWalk;
  if (name == "crawl") return ClipKind::kCrawl;
  if (name == "reach") return ClipKind::kReach;
  if (name == "sit") return ClipKind::kSit;
  if (name == "balance") return ClipKind::kBalance;
  throw ConfigError("unknown clip kind: " + name);
}

MotionClip GenerateClip(const CharacterModel& model, ClipKind kind,
                        const ClipParams& params, uint64_t seed) {
  MotionClip clip;
  switch (kind) {
    case ClipKind::kWalk:
    case ClipKind::kCrouchWalk:
    case ClipKind::kCrawl:
      clip = GenerateGait(model, kind, params, seed);
      break;
    case ClipKind::kReach:
      clip = GenerateReach(model, params, seed);
      break;
    case ClipKind::kBalance:
      clip = GenerateBalance(model, params, seed);
      break;
    case ClipKind::kSit:
      clip = GenerateSit(model, params, seed);
      break;
  }
  clip.Validate(model);
  return clip;
}

}  // namespace mimic
