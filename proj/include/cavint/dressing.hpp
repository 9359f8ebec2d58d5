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

#include <cmath>
#include <complex>

#include "cavint/error.hpp"
#include "cavint/params.hpp"

namespace cavint {

/// Quantities of the laser-dressed atom: mixing angle, dressed splitting,
/// effective cavity coupling and the dressed relaxation rates.
struct DressedFrame {
  double theta = 0.0;
  double omega_bar = 0.0;
  std::complex<double> g0{};
  double gamma_cap_0 = 0.0;
  double gamma_cap_plus = 0.0;
  double gamma_cap_minus = 0.0;

  // sin 2θ and cos 2θ, kept exact rather than recomputed from theta.
  double sin2theta = 0.0;
  double cos2theta = 1.0;

  double relaxation_sum() const noexcept { return gamma_cap_plus + gamma_cap_minus; }
  double relaxation_diff() const noexcept { return gamma_cap_plus - gamma_cap_minus; }
};

/// Builds the dressed frame. The mixing angle takes the branch 2θ ∈ [0, π)
/// so sin 2θ ≥ 0 and |−⟩ stays the lower state for Δ > 0.
inline DressedFrame dress(const SystemParams& p) {
  if (p.omega_rabi == 0.0 && p.delta_a == 0.0) {
    throw Error(ErrorCode::DegenerateDressing,
                "omega_rabi and delta_a are both zero; dressing angle undefined");
  }
  const double root = std::hypot(2.0 * p.omega_rabi, p.delta_a);
  DressedFrame f;
  f.sin2theta = 2.0 * p.omega_rabi / root;
  f.cos2theta = p.delta_a / root;
  f.theta = 0.5 * std::atan2(2.0 * p.omega_rabi, p.delta_a);
  f.omega_bar = 0.5 * root;

  const double cos_sq = 0.5 * (1.0 + f.cos2theta);
  const double sin_sq = 0.5 * (1.0 - f.cos2theta);
  const double s2sq = f.sin2theta * f.sin2theta;

  f.g0 = std::polar(0.5 * p.g * f.sin2theta, p.phi);
  f.gamma_cap_0 = (p.gamma0 * s2sq + p.gamma_d * f.cos2theta * f.cos2theta) / 4.0;
  f.gamma_cap_plus = p.gamma_plus * cos_sq * cos_sq + 0.25 * p.gamma_d * s2sq;
  f.gamma_cap_minus = p.gamma_minus * sin_sq * sin_sq + 0.25 * p.gamma_d * s2sq;
  return f;
}

/// Steady dressed-state inversion -(Γ₊ - Γ₋)/(Γ₊ + Γ₋).
inline double rz_steady(const DressedFrame& f) {
  const double sum = f.relaxation_sum();
  if (sum == 0.0) {
    throw Error(ErrorCode::ZeroRelaxation, "dressed relaxation rates are both zero");
  }
  return -f.relaxation_diff() / sum;
}

}  // namespace cavint
