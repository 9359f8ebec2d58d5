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
#include <string>

#include "cavint/dressing.hpp"
#include "cavint/error.hpp"
#include "cavint/params.hpp"

namespace cavint {

/// Steady photon number written as A ε² + B ε + C, together with its vertex.
struct QuadraticCoefficients {
  double a_coef = 0.0;
  double b_coef = 0.0;
  double c_coef = 0.0;
  double eps_min = 0.0;
  double n_min = 0.0;
};

namespace detail {

inline void require_resonant_cavity(const SystemParams& p, const char* what) {
  if (p.delta_c != 0.0) {
    throw Error(ErrorCode::DomainError,
                std::string(what) + " requires delta_c = 0; use the moment solver");
  }
}

inline void require_free_space(const SystemParams& p, const char* what) {
  if (!p.symmetric_rates()) {
    throw Error(ErrorCode::DomainError,
                std::string(what) +
                    " requires gamma0 = gamma_plus = gamma_minus; use the moment solver");
  }
  if (!(p.gamma0 > 0.0)) {
    throw Error(ErrorCode::DomainError, std::string(what) + " requires gamma > 0");
  }
}

}  // namespace detail

/// Closed-form coefficients for a resonant cavity in free space.
inline QuadraticCoefficients coefficients(const SystemParams& p) {
  detail::require_resonant_cavity(p, "coefficients");
  detail::require_free_space(p, "coefficients");

  const double gamma = p.gamma0;
  const double gd = p.gamma_d;
  const double kappa = p.kappa;
  const double delta = p.delta_a;
  const double omega = p.omega_rabi;
  const double d2 = delta * delta;
  const double o2 = omega * omega;
  const double k2 = kappa * kappa;

  const double denom = gamma * d2 + 2.0 * (gamma + gd) * o2;

  QuadraticCoefficients q;
  q.a_coef = 1.0 / k2;
  q.b_coef = -2.0 * p.g * gamma * delta * omega * std::cos(p.phi) / (k2 * denom);
  q.c_coef = p.g * p.g * o2 / (k2 * denom) *
             (gamma * (kappa + 2.0 * gamma) * d2 + 2.0 * kappa * (gamma + gd) * o2) /
             ((kappa + 2.0 * gamma) * d2 + 4.0 * (kappa + gamma + gd) * o2);
  q.eps_min = -q.b_coef / (2.0 * q.a_coef);
  q.n_min = q.c_coef - q.b_coef * q.b_coef / (4.0 * q.a_coef);
  return q;
}

inline double n_quadratic(const QuadraticCoefficients& q, double eps) {
  return q.a_coef * eps * eps + q.b_coef * eps + q.c_coef;
}

/// Split of the resonant-cavity photon number into the directly pumped
/// part (∝ ε²), the atom-scattered part (∝ |g₀|²) and their interference
/// (∝ ε|g₀|cos φ).
struct Decomposition {
  double pump_term = 0.0;
  double atom_term = 0.0;
  double cross_term = 0.0;
  double total = 0.0;
  double rz = 0.0;
};

/// Valid for arbitrary Γ₊, Γ₋ but only at δ = 0.
inline Decomposition decomposition(const SystemParams& p, const DressedFrame& f) {
  detail::require_resonant_cavity(p, "decomposition");
  const double rz = rz_steady(f);
  const double eps = p.epsilon;
  const double kappa = p.kappa;
  const double g0 = std::abs(f.g0);
  const double cphi = std::cos(p.phi);
  const double diff = f.relaxation_diff();
  const double broad = kappa + 2.0 * f.gamma_cap_plus + 2.0 * f.gamma_cap_minus;

  Decomposition d;
  d.rz = rz;
  // Grouped as printed in the closed form.
  d.total = eps / (kappa * kappa) * (eps + g0 * rz * cphi) +
            g0 / (kappa * broad) *
                (g0 + eps * rz * cphi - 2.0 * diff * (g0 * rz + eps * cphi) / kappa);

  d.pump_term = eps * eps / (kappa * kappa);
  d.atom_term = g0 * g0 / (kappa * broad) * (1.0 - 2.0 * diff * rz / kappa);
  d.cross_term = eps * g0 * cphi *
                 (rz / (kappa * kappa) + (rz - 2.0 * diff / kappa) / (kappa * broad));
  return d;
}

enum class DominantRate { plus_dominant, minus_dominant };

/// Two-amplitude interference limit: destructive sign when Γ₊ ≫ Γ₋
/// (atom in |−⟩), constructive when Γ₋ ≫ Γ₊ (atom in |+⟩).
inline double limit_form(const SystemParams& p, const DressedFrame& f, DominantRate which) {
  const double eps = p.epsilon;
  const double g0 = std::abs(f.g0);
  const double k2 = p.kappa * p.kappa;
  const double sign = which == DominantRate::plus_dominant ? -1.0 : 1.0;
  return (eps * eps + g0 * g0 + sign * 2.0 * eps * g0 * std::cos(p.phi)) / k2;
}

/// Upper bound of |ε_min| over all Δ at fixed Ω in free space.
inline double eps_min_bound(const SystemParams& p) {
  detail::require_free_space(p, "eps_min_bound");
  return p.g * std::sqrt(2.0) / 4.0 / std::sqrt(1.0 + p.gamma_d / p.gamma0);
}

/// Δ/Ω at which the bound is attained.
inline double eps_min_bound_detuning_ratio(const SystemParams& p) {
  detail::require_free_space(p, "eps_min_bound_detuning_ratio");
  return std::sqrt(2.0 * (1.0 + p.gamma_d / p.gamma0));
}

}  // namespace cavint
