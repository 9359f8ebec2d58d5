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

#include <gtest/gtest.h>

#include <cmath>

#include "cavint/analytic.hpp"
#include "cavint/moments.hpp"
#include "test_support.hpp"

namespace cavint {
namespace {

using testing::ParamSampler;
using testing::rel_diff;

SystemParams fig2() {
  SystemParams p;
  p.gamma0 = p.gamma_plus = p.gamma_minus = 1.0;
  p.gamma_d = 0.01;
  p.kappa = 0.1;
  p.g = 2.0;
  p.omega_rabi = 1.0;
  p.delta_a = 3.0;
  p.epsilon = 0.5;
  return p;
}

TEST(Coefficients, FigureTwoValues) {
  // Frozen from an independent high-precision evaluation.
  const auto q = coefficients(fig2());
  EXPECT_NEAR(q.a_coef, 100.0, 1e-12);
  EXPECT_NEAR(q.b_coef, -108.89292196007257, 1e-11);
  EXPECT_NEAR(q.c_coef, 29.706835122555077, 1e-11);
  EXPECT_NEAR(q.eps_min, 6.0 / 11.02, 1e-13);
  EXPECT_NEAR(q.n_min, 0.0626639900489323, 1e-12);
  EXPECT_NEAR(n_quadratic(q, 0.5), 0.2603741425187814, 1e-12);
}

TEST(Coefficients, NoAtomCouplingLeavesBareCavity) {
  SystemParams p = fig2();
  p.g = 0.0;
  const auto q = coefficients(p);
  EXPECT_EQ(q.b_coef, 0.0);
  EXPECT_EQ(q.c_coef, 0.0);
  EXPECT_EQ(q.eps_min, 0.0);
}

TEST(Coefficients, QuadraturePhaseRemovesLinearTerm) {
  SystemParams p = fig2();
  p.phi = M_PI / 2;
  const auto q = coefficients(p);
  EXPECT_NEAR(q.b_coef, 0.0, 1e-13);
  EXPECT_NEAR(q.n_min, q.c_coef, 1e-13);
}

TEST(Coefficients, VertexProperties) {
  ParamSampler sampler(200);
  for (int k = 0; k < 300; ++k) {
    const auto q = coefficients(sampler.free_space_resonant());
    EXPECT_GT(q.a_coef, 0.0);
    EXPECT_GE(q.c_coef, 0.0);
    EXPECT_LE(q.n_min, q.c_coef + 1e-15);
    EXPECT_GE(q.n_min, -1e-12 * q.c_coef);
    EXPECT_NEAR(n_quadratic(q, q.eps_min), q.n_min, 1e-12 * std::max(1.0, q.c_coef));
    // The vertex is a minimum.
    EXPECT_GE(n_quadratic(q, q.eps_min + 1e-3), q.n_min);
    EXPECT_GE(n_quadratic(q, q.eps_min - 1e-3), q.n_min);
  }
}

TEST(Coefficients, DependOnlyOnDetuningToRabiRatio) {
  // ε_min and A, B depend on Δ and Ω only through Δ/Ω.
  ParamSampler sampler(201);
  for (int k = 0; k < 100; ++k) {
    SystemParams p = sampler.free_space_resonant();
    const auto q1 = coefficients(p);
    const double s = sampler.uniform(0.1, 10.0);
    p.delta_a *= s;
    p.omega_rabi *= s;
    const auto q2 = coefficients(p);
    EXPECT_NEAR(q1.b_coef, q2.b_coef, 1e-12 * std::max(1.0, std::abs(q1.b_coef)));
    EXPECT_NEAR(q1.eps_min, q2.eps_min, 1e-12 * std::max(1.0, std::abs(q1.eps_min)));
  }
}

TEST(Coefficients, MatchMomentSteadyState) {
  ParamSampler sampler(202);
  for (int k = 0; k < 300; ++k) {
    const SystemParams p = sampler.free_space_resonant();
    const double n = steady_state(dress(p), p).n;
    EXPECT_LE(rel_diff(n_quadratic(coefficients(p), p.epsilon), n), 1e-10) << k;
  }
}

TEST(Coefficients, DomainErrors) {
  SystemParams p = fig2();
  p.delta_c = 0.1;
  EXPECT_THROW(coefficients(p), Error);
  p = fig2();
  p.gamma_plus = 2.0;
  EXPECT_THROW(coefficients(p), Error);
  p = fig2();
  p.gamma0 = p.gamma_plus = p.gamma_minus = 0.0;
  try {
    coefficients(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(Decomposition, MatchesMomentSteadyState) {
  ParamSampler sampler(203);
  for (int k = 0; k < 300; ++k) {
    const SystemParams p = sampler.resonant_any_rates();
    const auto f = dress(p);
    const auto d = decomposition(p, f);
    const double n = steady_state(f, p).n;
    EXPECT_LE(rel_diff(d.total, n), 1e-10) << k;
    EXPECT_NEAR(d.pump_term + d.atom_term + d.cross_term, d.total,
                1e-12 * std::max(1.0, std::abs(d.total)));
  }
}

TEST(Decomposition, ReducesToQuadraticInFreeSpace) {
  ParamSampler sampler(204);
  for (int k = 0; k < 100; ++k) {
    const SystemParams p = sampler.free_space_resonant();
    const auto d = decomposition(p, dress(p));
    EXPECT_LE(rel_diff(d.total, n_quadratic(coefficients(p), p.epsilon)), 1e-10);
  }
}

TEST(Decomposition, SymmetricRatesAtResonanceHaveNoCrossTerm) {
  SystemParams p = fig2();
  p.delta_a = 0.0;
  p.gamma_plus = p.gamma_minus = 0.7;
  const auto d = decomposition(p, dress(p));
  EXPECT_EQ(d.rz, 0.0);
  EXPECT_EQ(d.cross_term, 0.0);
  EXPECT_GT(d.total, 0.0);
}

TEST(Decomposition, CrossTermSignFollowsInversion) {
  SystemParams p = fig2();
  p.delta_a = 0.0;
  p.omega_rabi = 50.0;
  p.gamma_minus = 0.0;  // atom relaxes into |−⟩: suppression
  auto d = decomposition(p, dress(p));
  EXPECT_LT(d.rz, 0.0);
  EXPECT_LT(d.cross_term, 0.0);

  p.gamma_minus = 1.0;
  p.gamma_plus = 0.0;  // atom relaxes into |+⟩: enhancement
  d = decomposition(p, dress(p));
  EXPECT_GT(d.rz, 0.0);
  EXPECT_GT(d.cross_term, 0.0);

  p.phi = M_PI;  // flipping the pump phase flips the interference
  const auto flipped = decomposition(p, dress(p));
  EXPECT_NEAR(flipped.cross_term, -d.cross_term, 1e-14);
  EXPECT_NEAR(flipped.pump_term, d.pump_term, 1e-14);
  EXPECT_NEAR(flipped.atom_term, d.atom_term, 1e-14);
}

TEST(Decomposition, RequiresResonantCavity) {
  SystemParams p = fig2();
  p.delta_c = 0.5;
  EXPECT_THROW(decomposition(p, dress(p)), Error);
}

TEST(LimitForm, ExactForPerfectInversion) {
  SystemParams p = fig2();
  p.delta_a = 0.0;
  p.gamma_d = 0.0;
  p.gamma_minus = 0.0;
  const auto f = dress(p);
  EXPECT_NEAR(decomposition(p, f).total, limit_form(p, f, DominantRate::plus_dominant),
              1e-12);
  p.gamma_minus = 1.0;
  p.gamma_plus = 0.0;
  const auto g = dress(p);
  EXPECT_NEAR(decomposition(p, g).total, limit_form(p, g, DominantRate::minus_dominant),
              1e-12);
}

TEST(LimitForm, ApproachedMonotonicallyAsRatesSeparate) {
  SystemParams p = fig2();
  p.delta_a = 0.0;
  p.epsilon = 0.3;
  p.gamma_d = 0.0;
  p.gamma_plus = 1.0;
  double last = INFINITY;
  for (double ratio : {10.0, 100.0, 1000.0, 10000.0}) {
    p.gamma_minus = p.gamma_plus / ratio;
    const auto f = dress(p);
    const double lim = limit_form(p, f, DominantRate::plus_dominant);
    const double err = std::abs(decomposition(p, f).total - lim) / lim;
    EXPECT_LT(err, last);
    last = err;
  }
  EXPECT_LT(last, 1e-2);
}

TEST(Bound, FigureTwoValues) {
  const SystemParams p = fig2();
  EXPECT_NEAR(eps_min_bound(p), 0.703597544730292, 1e-14);
  EXPECT_NEAR(eps_min_bound_detuning_ratio(p), 1.4212670403551895, 1e-14);
  SystemParams q = p;
  q.gamma_d = 0.0;
  EXPECT_NEAR(eps_min_bound(q), std::sqrt(0.5), 1e-15);
}

TEST(Bound, NeverExceededAndAttained) {
  SystemParams p = fig2();
  const double bound = eps_min_bound(p);
  double best = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    p.delta_a = -10.0 + 20.0 * k / 2000.0;
    const double e = std::abs(coefficients(p).eps_min);
    EXPECT_LE(e, bound * (1 + 1e-12));
    best = std::max(best, e);
  }
  EXPECT_NEAR(best, bound, 1e-4);
  p.delta_a = eps_min_bound_detuning_ratio(p) * p.omega_rabi;
  EXPECT_NEAR(coefficients(p).eps_min, bound, 1e-12);
}

}  // namespace
}  // namespace cavint
