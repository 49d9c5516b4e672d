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

// Lagrangian dynamics of the lumped-mass planar chain in generalized
// coordinates q = (root_x, root_z, root_rot, joint_angles...). Point-mass
// kinematics give M(q) = sum_i m_i J_i^T J_i and an exact centripetal bias,
// so unforced energy drift is pure integrator error. Contact is a
// spring-damper penalty at every chain point with Coulomb-capped viscous
// friction. Semi-implicit Euler at sim_dt, control_decimation substeps per
// control step.

#include "mimic/sim/sim.h"

#include <algorithm>
#include <cmath>

#include "mimic/core/errors.h"

namespace mimic {
namespace {

// Dense symmetric positive definite solve, tiny n.
void CholeskySolve(std::vector<double>& a, std::vector<double>& b, int n) {
  // In-place LL^T factorization.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) {
      double sum = a[i * n + k];
      for (int m = 0; m < k; ++m) sum -= a[i * n + m] * a[k * n + m];
      a[i * n + k] = sum / a[k * n + k];
    }
    double diag = a[i * n + i];
    for (int m = 0; m < i; ++m) diag -= a[i * n + m] * a[i * n + m];
    if (diag <= 0.0) diag = 1e-12;
    a[i * n + i] = std::sqrt(diag);
  }
  // Forward then backward substitution.
  for (int i = 0; i < n; ++i) {
    double sum = b[i];
    for (int m = 0; m < i; ++m) sum -= a[i * n + m] * b[m];
    b[i] = sum / a[i * n + i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double sum = b[i];
    for (int m = i + 1; m < n; ++m) sum -= a[m * n + i] * b[m];
    b[i] = sum / a[i * n + i];
  }
}

// Per-point chain geometry used by the dynamics assembly: Jacobian columns
// for the angle coordinates, plus velocity and centripetal bias.
struct ChainGeometry {
  // jac[i] holds d p_i / d q as 2 rows of n entries, n = 3 + J.
  std::vector<std::vector<double>> jac_x, jac_z;
  std::vector<Vec2> vel;
  std::vector<Vec2> bias;
  Kinematics kin;
};

ChainGeometry ComputeGeometry(const CharacterModel& model,
                              const SimState& state) {
  const int j = model.num_joints();
  const int r = model.root_index;
  const int n = 3 + j;
  ChainGeometry g;
  g.kin = ForwardKinematics(model, state.root_pos, state.root_rot,
                            state.joint_angles);
  const std::vector<double> rates =
      LinkAngularRates(model, state.root_ang_vel, state.joint_vels);

  g.jac_x.assign(j + 1, std::vector<double>(n, 0.0));
  g.jac_z.assign(j + 1, std::vector<double>(n, 0.0));
  g.vel.assign(j + 1, Vec2{});
  g.bias.assign(j + 1, Vec2{});

  // Root point.
  g.jac_x[r][0] = 1.0;
  g.jac_z[r][1] = 1.0;
  g.vel[r] = state.root_vel;

  // Outboard: p_{i+1} = p_i + L_i u(A_i); each step adds one lever arm.
  for (int i = r; i < j; ++i) {
    const double len = model.link_lengths[i];
    const Vec2 tang = AngleDirTangent(g.kin.link_angles[i]) * len;
    const Vec2 dir = AngleDir(g.kin.link_angles[i]) * len;
    const double w = rates[i];
    auto& jx = g.jac_x[i + 1];
    auto& jz = g.jac_z[i + 1];
    jx = g.jac_x[i];
    jz = g.jac_z[i];
    jx[2] += tang.x;
    jz[2] += tang.z;
    // theta_k for r <= k <= i contribute this lever.
    for (int k = r; k <= i; ++k) {
      jx[3 + k] += tang.x;
      jz[3 + k] += tang.z;
    }
    g.vel[i + 1] = g.vel[i] + tang * w;
    g.bias[i + 1] = g.bias[i] - dir * (w * w);
  }
  // Inboard: p_i = p_{i+1} - L_i u(A_i).
  for (int i = r - 1; i >= 0; --i) {
    const double len = model.link_lengths[i];
    const Vec2 tang = AngleDirTangent(g.kin.link_angles[i]) * len;
    const Vec2 dir = AngleDir(g.kin.link_angles[i]) * len;
    const double w = rates[i];
    auto& jx = g.jac_x[i];
    auto& jz = g.jac_z[i];
    jx = g.jac_x[i + 1];
    jz = g.jac_z[i + 1];
    jx[2] -= tang.x;
    jz[2] -= tang.z;
    // theta_k for i <= k <= r-1 contribute this lever.
    for (int k = i; k <= r - 1; ++k) {
      jx[3 + k] -= tang.x;
      jz[3 + k] -= tang.z;
    }
    g.vel[i] = g.vel[i + 1] - tang * w;
    g.bias[i] = g.bias[i + 1] + dir * (w * w);
  }
  return g;
}

}  // namespace

SimState SimState::Rest(const CharacterModel& model) {
  SimState s;
  const int j = model.num_joints();
  s.joint_angles.assign(j, 0.0);
  s.joint_vels.assign(j, 0.0);
  s.last_torques.assign(j, 0.0);
  // Rest angles sit at the midpoint of asymmetric limits when 0 is outside.
  for (int i = 0; i < j; ++i) {
    if (0.0 < model.joint_limit_lo[i] || 0.0 > model.joint_limit_hi[i]) {
      s.joint_angles[i] = 0.5 * (model.joint_limit_lo[i] + model.joint_limit_hi[i]);
    }
  }
  return s;
}

bool SimState::Finite() const {
  auto ok = [](double v) { return std::isfinite(v); };
  if (!ok(root_pos.x) || !ok(root_pos.z) || !ok(root_rot) || !ok(root_vel.x) ||
      !ok(root_vel.z) || !ok(root_ang_vel) || !ok(time)) {
    return false;
  }
  for (double v : joint_angles) {
    if (!ok(v)) return false;
  }
  for (double v : joint_vels) {
    if (!ok(v)) return false;
  }
  for (double v : last_torques) {
    if (!ok(v)) return false;
  }
  return true;
}

void SimConfig::Validate() const {
  if (!(sim_dt > 0.0)) throw ConfigError("sim_dt must be > 0");
  if (control_decimation < 1) throw ConfigError("control_decimation must be >= 1");
  if (!(gravity < 0.0)) throw ConfigError("gravity must be < 0");
  if (contact_stiffness < 0.0 || contact_damping < 0.0 ||
      friction_coeff < 0.0 || tangential_damping < 0.0) {
    throw ConfigError("contact parameters must be >= 0");
  }
}

SimConfig SimConfig::FromJson(const Json& j) {
  RequireKeys(j,
              {"sim_dt", "control_decimation", "gravity", "contact_stiffness",
               "contact_damping", "friction_coeff", "tangential_damping"},
              "sim");
  SimConfig c;
  c.sim_dt = GetNum(j, "sim_dt", c.sim_dt);
  c.control_decimation = GetInt(j, "control_decimation", c.control_decimation);
  c.gravity = GetNum(j, "gravity", c.gravity);
  c.contact_stiffness = GetNum(j, "contact_stiffness", c.contact_stiffness);
  c.contact_damping = GetNum(j, "contact_damping", c.contact_damping);
  c.friction_coeff = GetNum(j, "friction_coeff", c.friction_coeff);
  c.tangential_damping = GetNum(j, "tangential_damping", c.tangential_damping);
  c.Validate();
  return c;
}

Json SimConfig::ToJson() const {
  Json j;
  j["sim_dt"] = sim_dt;
  j["control_decimation"] = control_decimation;
  j["gravity"] = gravity;
  j["contact_stiffness"] = contact_stiffness;
  j["contact_damping"] = contact_damping;
  j["friction_coeff"] = friction_coeff;
  j["tangential_damping"] = tangential_damping;
  return j;
}

double Facing(double root_rot) {
  return std::sin(root_rot) >= 0.0 ? 1.0 : -1.0;
}

SimState Step(const CharacterModel& model, const SimConfig& cfg,
              const Terrain& terrain, const SimState& state,
              const Action& action) {
  const int j = model.num_joints();
  const int n = 3 + j;
  if (static_cast<int>(action.pd_targets.size()) != j) {
    throw ShapeError("action width mismatch");
  }
  if (!state.Finite()) {
    throw DivergedSimulation(
        static_cast<long>(std::floor(state.time / cfg.ControlDt() + 0.5)),
        "non-finite input state");
  }

  SimState s = state;
  s.last_torques.assign(j, 0.0);
  std::vector<double> torque_sq(j, 0.0);
  std::vector<double> m_mat(n * n);
  std::vector<double> rhs(n);

  for (int sub = 0; sub < cfg.control_decimation; ++sub) {
    const ChainGeometry g = ComputeGeometry(model, s);

    // PD torques, clamped.
    std::vector<double> tau(j);
    for (int i = 0; i < j; ++i) {
      const double target = std::clamp(action.pd_targets[i],
                                       model.joint_limit_lo[i],
                                       model.joint_limit_hi[i]);
      double t = model.kp[i] * (target - s.joint_angles[i]) -
                 model.kd[i] * s.joint_vels[i];
      t = std::clamp(t, -model.torque_limit[i], model.torque_limit[i]);
      tau[i] = t;
      torque_sq[i] += t * t;
    }

    std::fill(m_mat.begin(), m_mat.end(), 0.0);
    std::fill(rhs.begin(), rhs.end(), 0.0);

    // Mass and applied forces from lumped link-midpoint masses.
    for (int link = 0; link < j; ++link) {
      const double mass = model.link_masses[link];
      std::vector<double> jx(n), jz(n);
      for (int c = 0; c < n; ++c) {
        jx[c] = 0.5 * (g.jac_x[link][c] + g.jac_x[link + 1][c]);
        jz[c] = 0.5 * (g.jac_z[link][c] + g.jac_z[link + 1][c]);
      }
      const Vec2 bias{0.5 * (g.bias[link].x + g.bias[link + 1].x),
                      0.5 * (g.bias[link].z + g.bias[link + 1].z)};
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
          m_mat[a * n + b] += mass * (jx[a] * jx[b] + jz[a] * jz[b]);
        }
      }
      // f = m g e_z; generalized: J^T (f - m * bias)
      const double fx = -mass * bias.x;
      const double fz = mass * cfg.gravity - mass * bias.z;
      for (int a = 0; a < n; ++a) rhs[a] += jx[a] * fx + jz[a] * fz;
    }
    // Mirror to lower triangle, with a touch of regularization.
    for (int a = 0; a < n; ++a) {
      m_mat[a * n + a] += 1e-10;
      for (int b = 0; b < a; ++b) m_mat[a * n + b] = m_mat[b * n + a];
    }

    // Penalty contact at every chain point.
    for (int p = 0; p <= j; ++p) {
      const double surface = terrain.Surface(g.kin.points[p].x);
      const double pen = surface - g.kin.points[p].z;
      if (pen <= 0.0) continue;
      const Vec2 v = g.vel[p];
      double fn = cfg.contact_stiffness * pen - cfg.contact_damping * v.z;
      if (fn < 0.0) fn = 0.0;
      double ft = -cfg.tangential_damping * v.x;
      const double ft_max = cfg.friction_coeff * fn;
      ft = std::clamp(ft, -ft_max, ft_max);
      for (int c = 0; c < n; ++c) {
        rhs[c] += g.jac_x[p][c] * ft + g.jac_z[p][c] * fn;
      }
    }

    // Joint torques act directly on their generalized coordinate.
    for (int i = 0; i < j; ++i) rhs[3 + i] += tau[i];

    // Solve M qdd = rhs, then semi-implicit Euler.
    CholeskySolve(m_mat, rhs, n);
    s.root_vel.x += cfg.sim_dt * rhs[0];
    s.root_vel.z += cfg.sim_dt * rhs[1];
    s.root_ang_vel += cfg.sim_dt * rhs[2];
    for (int i = 0; i < j; ++i) s.joint_vels[i] += cfg.sim_dt * rhs[3 + i];

    s.root_pos.x += cfg.sim_dt * s.root_vel.x;
    s.root_pos.z += cfg.sim_dt * s.root_vel.z;
    s.root_rot += cfg.sim_dt * s.root_ang_vel;
    for (int i = 0; i < j; ++i) {
      s.joint_angles[i] += cfg.sim_dt * s.joint_vels[i];
      if (s.joint_angles[i] < model.joint_limit_lo[i]) {
        s.joint_angles[i] = model.joint_limit_lo[i];
        if (s.joint_vels[i] < 0.0) s.joint_vels[i] = 0.0;
      } else if (s.joint_angles[i] > model.joint_limit_hi[i]) {
        s.joint_angles[i] = model.joint_limit_hi[i];
        if (s.joint_vels[i] > 0.0) s.joint_vels[i] = 0.0;
      }
    }
    s.time += cfg.sim_dt;
  }

  for (int i = 0; i < j; ++i) {
    s.last_torques[i] = std::sqrt(torque_sq[i] / cfg.control_decimation);
  }

  if (!s.Finite()) {
    throw DivergedSimulation(
        static_cast<long>(std::floor(s.time / cfg.ControlDt() + 0.5)),
        "state non-finite after step");
  }
  return s;
}

std::array<double, kHeightmapSamples> SampleHeightmap(const SimState& state,
                                                      const Terrain& terrain) {
  std::array<double, kHeightmapSamples> out;
  const double face = Facing(state.root_rot);
  const double under_root = terrain.Surface(state.root_pos.x);
  for (int k = -7; k <= 8; ++k) {
    const double x = state.root_pos.x + k * kHeightmapSpacing * face;
    out[k + 7] = terrain.Surface(x) - under_root;
  }
  return out;
}

double MechanicalEnergy(const CharacterModel& model, const SimConfig& cfg,
                        const SimState& state) {
  const ChainGeometry g = ComputeGeometry(model, state);
  double e = 0.0;
  for (int link = 0; link < model.num_joints(); ++link) {
    const double mass = model.link_masses[link];
    const Vec2 v{0.5 * (g.vel[link].x + g.vel[link + 1].x),
                 0.5 * (g.vel[link].z + g.vel[link + 1].z)};
    const double z = 0.5 * (g.kin.points[link].z + g.kin.points[link + 1].z);
    e += 0.5 * mass * v.NormSq() + mass * (-cfg.gravity) * z;
  }
  return e;
}

std::vector<Vec2> PointVelocities(const CharacterModel& model,
                                  const SimState& state) {
  return ComputeGeometry(model, state).vel;
}

}  // namespace mimic
