// Copyright 2026 The cavint Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cavint/dressing.hpp"
#include "cavint/error.hpp"
#include "cavint/params.hpp"

namespace cavint {

using cplx = std::complex<double>;

/// The closed set of expectation values ⟨a†a⟩, ⟨R_z a⟩, ⟨a⟩ and ⟨R_z⟩.
/// ⟨a†⟩ and ⟨R_z a†⟩ are the conjugates of the stored members.
struct MomentState {
  double n = 0.0;
  cplx rza{};
  cplx a_mean{};
  double rz = 0.0;

  /// |−⟩ ⊗ |vac⟩.
  static MomentState ground() { return {0.0, {}, {}, -1.0}; }

  cplx a_dag_mean() const { return std::conj(a_mean); }
  cplx rza_dag() const { return std::conj(rza); }

  bool finite() const {
    return std::isfinite(n) && std::isfinite(rza.real()) && std::isfinite(rza.imag()) &&
           std::isfinite(a_mean.real()) && std::isfinite(a_mean.imag()) &&
           std::isfinite(rz);
  }

  MomentState& operator+=(const MomentState& o) {
    n += o.n;
    rza += o.rza;
    a_mean += o.a_mean;
    rz += o.rz;
    return *this;
  }
  friend MomentState operator+(MomentState a, const MomentState& b) { return a += b; }
  friend MomentState operator*(double s, MomentState a) {
    a.n *= s;
    a.rza *= s;
    a.a_mean *= s;
    a.rz *= s;
    return a;
  }
};

/// Largest absolute componentwise difference.
inline double max_abs_diff(const MomentState& x, const MomentState& y) {
  return std::max({std::abs(x.n - y.n), std::abs(x.rza - y.rza),
                   std::abs(x.a_mean - y.a_mean), std::abs(x.rz - y.rz)});
}

struct MomentTrajectory {
  std::vector<double> times;
  std::vector<MomentState> states;
};

/// Right-hand side of the moment equations. The ⟨a†a⟩ line is evaluated
/// with all four source terms as written, pulling the conjugate members
/// from the stored fields.
inline MomentState moment_rhs(const MomentState& s, const DressedFrame& f,
                              const SystemParams& p) {
  const cplx i{0.0, 1.0};
  const cplx g0 = f.g0;
  const cplx g0c = std::conj(g0);
  const double eps = p.epsilon;
  const double kappa = p.kappa;
  const double delta = p.delta_c;
  const double sum = f.relaxation_sum();
  const double diff = f.relaxation_diff();

  MomentState d;
  const cplx dn = i * g0 * s.rza + i * eps * s.a_mean - i * g0c * s.rza_dag() -
                  i * eps * s.a_dag_mean() - 2.0 * kappa * s.n;
  d.n = dn.real();
  d.rza = -(kappa + i * delta + 2.0 * sum) * s.rza - 2.0 * diff * s.a_mean -
          i * eps * s.rz - i * g0c;
  d.a_mean = -(kappa + i * delta) * s.a_mean - i * g0c * s.rz - i * eps;
  d.rz = -2.0 * sum * s.rz - 2.0 * diff;
  return d;
}

/// Derivatives of ⟨R_z a†⟩ and ⟨a†⟩ from their own lines of the moment
/// system. They must equal the conjugates of the stored derivatives.
struct ConjugateDerivatives {
  cplx rza_dag;
  cplx a_dag_mean;
};

inline ConjugateDerivatives conjugate_rhs(const MomentState& s, const DressedFrame& f,
                                          const SystemParams& p) {
  const cplx i{0.0, 1.0};
  const double sum = f.relaxation_sum();
  const double diff = f.relaxation_diff();
  ConjugateDerivatives d;
  d.rza_dag = -(p.kappa - i * p.delta_c + 2.0 * sum) * s.rza_dag() -
              2.0 * diff * s.a_dag_mean() + i * p.epsilon * s.rz + i * f.g0;
  d.a_dag_mean = -(p.kappa - i * p.delta_c) * s.a_dag_mean() + i * f.g0 * s.rz +
                 i * p.epsilon;
  return d;
}

/// Fastest rate appearing in the moment system.
inline double moment_max_rate(const DressedFrame& f, const SystemParams& p) {
  return std::max({p.kappa + 2.0 * f.relaxation_sum(), std::abs(p.delta_c),
                   std::abs(f.g0), p.epsilon, 2.0 * std::abs(f.relaxation_diff())});
}

inline double default_moment_dt(const DressedFrame& f, const SystemParams& p) {
  return 1e-3 / moment_max_rate(f, p);
}

/// Number of fixed steps covering [0, t_final]; the last step is shortened
/// when t_final is not a multiple of dt.
inline std::size_t step_count(double t_final, double dt) {
  const double ratio = t_final / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio)) {
    return static_cast<std::size_t>(rounded);
  }
  return static_cast<std::size_t>(std::ceil(ratio));
}

/// Classical fourth-order Runge-Kutta integration of the moment system.
/// Every `record_every`-th step is stored, plus the initial and final state.
inline MomentTrajectory evolve(const MomentState& s0, const DressedFrame& f,
                               const SystemParams& p, double t_final, double dt,
                               std::size_t record_every = 1) {
  if (!(t_final > 0.0) || !(dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "evolve needs t_final > 0 and dt > 0");
  }
  if (record_every == 0) record_every = 1;
  const std::size_t steps = step_count(t_final, dt);

  MomentTrajectory traj;
  traj.times.reserve(steps / record_every + 2);
  traj.states.reserve(steps / record_every + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(s0);

  MomentState s = s0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t0 = static_cast<double>(k) * dt;
    const double h = (k + 1 == steps) ? t_final - t0 : dt;
    const MomentState k1 = moment_rhs(s, f, p);
    const MomentState k2 = moment_rhs(s + (0.5 * h) * k1, f, p);
    const MomentState k3 = moment_rhs(s + (0.5 * h) * k2, f, p);
    const MomentState k4 = moment_rhs(s + h * k3, f, p);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!s.finite()) {
      throw Error(ErrorCode::NonFiniteState, "moment integration overflowed");
    }
    if ((k + 1) % record_every == 0 || k + 1 == steps) {
      traj.times.push_back(k + 1 == steps ? t_final : t0 + h);
      traj.states.push_back(s);
    }
  }
  return traj;
}

/// Exact fixed point of the moment system. The equations are triangular in
/// the order ⟨R_z⟩ → ⟨a⟩ → ⟨R_z a⟩ → ⟨a†a⟩ and are solved in that order.
inline MomentState steady_state(const DressedFrame& f, const SystemParams& p) {
  const double sum = f.relaxation_sum();
  if (sum == 0.0) {
    throw Error(ErrorCode::ZeroRelaxation, "dressed relaxation rates are both zero");
  }
  if (!(p.kappa > 0.0)) {
    throw Error(ErrorCode::SingularCavity, "kappa + i delta_c vanishes");
  }
  const cplx i{0.0, 1.0};
  const cplx g0 = f.g0;
  const cplx g0c = std::conj(g0);
  const double eps = p.epsilon;
  const cplx cavity = p.kappa + i * p.delta_c;

  MomentState s;
  s.rz = -f.relaxation_diff() / sum;
  s.a_mean = -i * (eps + g0c * s.rz) / cavity;
  s.rza = (-2.0 * f.relaxation_diff() * s.a_mean - i * eps * s.rz - i * g0c) /
          (cavity + 2.0 * sum);
  const cplx source = i * g0 * s.rza + i * eps * s.a_mean -
                      i * g0c * s.rza_dag() - i * eps * s.a_dag_mean();
  s.n = source.real() / (2.0 * p.kappa);
  return s;
}

}  // namespace cavint
