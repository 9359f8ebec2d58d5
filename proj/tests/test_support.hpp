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

// Test-only reference implementations. Nothing here calls the moment
// solver; the six moment lines are transcribed again as a generic complex
// linear system x' = M x + c over (n, ⟨R_z a⟩, ⟨R_z a†⟩, ⟨a⟩, ⟨a†⟩, ⟨R_z⟩).

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "cavint/dressing.hpp"
#include "cavint/moments.hpp"
#include "cavint/params.hpp"

namespace cavint::testing {

struct LinearMomentSystem {
  Eigen::Matrix<cplx, 6, 6> m = Eigen::Matrix<cplx, 6, 6>::Zero();
  Eigen::Matrix<cplx, 6, 1> c = Eigen::Matrix<cplx, 6, 1>::Zero();
};

enum : int { kN = 0, kRza = 1, kRzaDag = 2, kA = 3, kADag = 4, kRz = 5 };

inline LinearMomentSystem linear_moment_system(const SystemParams& p) {
  const DressedFrame f = dress(p);
  const cplx i{0.0, 1.0};
  const cplx g0 = f.g0;
  const cplx g0c = std::conj(f.g0);
  const double gp = f.gamma_cap_plus;
  const double gm = f.gamma_cap_minus;
  const double eps = p.epsilon;
  const double k = p.kappa;
  const double d = p.delta_c;

  LinearMomentSystem s;
  s.m(kN, kRza) = i * g0;
  s.m(kN, kA) = i * eps;
  s.m(kN, kRzaDag) = -i * g0c;
  s.m(kN, kADag) = -i * eps;
  s.m(kN, kN) = -2.0 * k;

  s.m(kRza, kRza) = -(k + i * d + 2.0 * gp + 2.0 * gm);
  s.m(kRza, kA) = -2.0 * (gp - gm);
  s.m(kRza, kRz) = -i * eps;
  s.c(kRza) = -i * g0c;

  s.m(kRzaDag, kRzaDag) = -(k - i * d + 2.0 * gp + 2.0 * gm);
  s.m(kRzaDag, kADag) = -2.0 * (gp - gm);
  s.m(kRzaDag, kRz) = i * eps;
  s.c(kRzaDag) = i * g0;

  s.m(kA, kA) = -(k + i * d);
  s.m(kA, kRz) = -i * g0c;
  s.c(kA) = -i * eps;

  s.m(kADag, kADag) = -(k - i * d);
  s.m(kADag, kRz) = i * g0;
  s.c(kADag) = i * eps;

  s.m(kRz, kRz) = -2.0 * (gm + gp);
  s.c(kRz) = 2.0 * (gm - gp);
  return s;
}

inline Eigen::Matrix<cplx, 6, 1> to_vector(const MomentState& s) {
  Eigen::Matrix<cplx, 6, 1> x;
  x << s.n, s.rza, std::conj(s.rza), s.a_mean, std::conj(s.a_mean), s.rz;
  return x;
}

inline MomentState from_vector(const Eigen::Matrix<cplx, 6, 1>& x) {
  return {x(kN).real(), x(kRza), x(kA), x(kRz).real()};
}

/// Fixed point by a dense LU solve of M x = −c.
inline MomentState linear_steady_state(const SystemParams& p) {
  const auto s = linear_moment_system(p);
  return from_vector(s.m.partialPivLu().solve(-s.c));
}

/// x(t) = e^{Mt}(x₀ − x*) + x* with x* the fixed point.
inline MomentState exact_evolution(const SystemParams& p, const MomentState& s0, double t) {
  const auto s = linear_moment_system(p);
  const Eigen::Matrix<cplx, 6, 1> fixed = s.m.partialPivLu().solve(-s.c);
  const Eigen::Matrix<cplx, 6, 6> prop = (s.m * t).exp();
  return from_vector(prop * (to_vector(s0) - fixed) + fixed);
}

/// Random physical parameter set with κ, Γ₊ + Γ₋ bounded away from zero.
struct ParamSampler {
  std::mt19937_64 rng;
  explicit ParamSampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  SystemParams any() {
    SystemParams p;
    p.omega_rabi = uniform(0.1, 5.0);
    p.delta_a = uniform(-10.0, 10.0);
    p.delta_c = uniform(-2.0, 2.0);
    p.epsilon = uniform(0.0, 2.0);
    p.g = uniform(0.0, 4.0);
    p.kappa = uniform(0.02, 2.0);
    p.gamma0 = uniform(0.1, 2.0);
    p.gamma_plus = uniform(0.1, 2.0);
    p.gamma_minus = uniform(0.1, 2.0);
    p.gamma_d = uniform(0.0, 0.5);
    p.phi = uniform(0.0, 6.283185307179586);
    return p;
  }

  SystemParams free_space_resonant() {
    SystemParams p = any();
    p.delta_c = 0.0;
    p.gamma_plus = p.gamma_minus = p.gamma0;
    return p;
  }

  SystemParams resonant_any_rates() {
    SystemParams p = any();
    p.delta_c = 0.0;
    p.gamma_plus = uniform(0.0, 3.0);
    p.gamma_minus = uniform(0.0, 3.0);
    return p;
  }
};

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace cavint::testing
