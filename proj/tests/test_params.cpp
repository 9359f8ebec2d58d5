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
#include <filesystem>
#include <fstream>
#include <limits>

#include "cavint/dressing.hpp"
#include "cavint/params.hpp"
#include "cavint/regime.hpp"
#include "test_support.hpp"

namespace cavint {
namespace {

// γ = 1 units: γ₀=γ₊=γ₋=1, γ_d=0.01, κ=0.1, g=2, Ω=1, Δ=3, φ=0, δ=0, ε=0.5.
SystemParams fig2_unit_omega() {
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

ErrorCode code_of(const SystemParams& p) {
  try {
    validate(p);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "validate accepted an invalid parameter set";
  return ErrorCode::InvalidArgument;
}

TEST(Validate, AcceptsFigureTwoSet) {
  const SystemParams p = fig2_unit_omega();
  EXPECT_EQ(validate(p), p);
}

TEST(Validate, RejectsZeroKappa) {
  SystemParams p = fig2_unit_omega();
  p.kappa = 0.0;
  EXPECT_EQ(code_of(p), ErrorCode::NonPositiveKappa);
  p.kappa = -1.0;
  EXPECT_EQ(code_of(p), ErrorCode::NonPositiveKappa);
}

TEST(Validate, RejectsDegenerateDressing) {
  SystemParams p = fig2_unit_omega();
  p.omega_rabi = 0.0;
  p.delta_a = 0.0;
  EXPECT_EQ(code_of(p), ErrorCode::DegenerateDressing);
}

TEST(Validate, RejectsNegativeRates) {
  for (const char* name : {"gamma0", "gamma_plus", "gamma_minus", "gamma_d", "g", "epsilon",
                           "omega_rabi"}) {
    SystemParams p = fig2_unit_omega();
    param_ref(p, name) = -0.1;
    EXPECT_EQ(code_of(p), ErrorCode::NegativeRate) << name;
  }
}

TEST(Validate, RejectsNonFinite) {
  SystemParams p = fig2_unit_omega();
  p.phi = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of(p), ErrorCode::NonFiniteParameter);
}

TEST(Validate, NegativeDetuningsAreFine) {
  SystemParams p = fig2_unit_omega();
  p.delta_a = -3.0;
  p.delta_c = -1.0;
  EXPECT_NO_THROW(validate(p));
}

TEST(Validate, Idempotent) {
  testing::ParamSampler sampler(11);
  for (int k = 0; k < 100; ++k) {
    const SystemParams p = sampler.any();
    EXPECT_EQ(validate(validate(p)), validate(p));
  }
}

TEST(ParamNames, RoundTripThroughJson) {
  testing::ParamSampler sampler(5);
  const SystemParams p = sampler.any();
  EXPECT_EQ(params_from_json(to_json(p)), p);
}

TEST(ParamNames, JsonOverlaysBase) {
  const SystemParams base = fig2_unit_omega();
  const auto p = params_from_json(nlohmann::json{{"kappa", 0.5}, {"phi", 1.0}}, base);
  EXPECT_EQ(p.kappa, 0.5);
  EXPECT_EQ(p.phi, 1.0);
  EXPECT_EQ(p.g, base.g);
}

TEST(ParamNames, JsonRejectsUnknownKeysAndNonNumbers) {
  EXPECT_THROW(params_from_json(nlohmann::json{{"kapa", 0.5}}), Error);
  EXPECT_THROW(params_from_json(nlohmann::json{{"kappa", "0.5"}}), Error);
  EXPECT_THROW(params_from_json(nlohmann::json::array()), Error);
}

TEST(ParamNames, LoadsConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "cavint_params_test.json";
  {
    std::ofstream out(path);
    out << R"({"g": 1.5, "epsilon": 0.25})";
  }
  const auto p = load_params_file(path.string(), fig2_unit_omega());
  EXPECT_EQ(p.g, 1.5);
  EXPECT_EQ(p.epsilon, 0.25);
  std::filesystem::remove(path);
  EXPECT_THROW(load_params_file(path.string()), Error);
}

TEST(RegimeCheck, ComfortableMargin) {
  // Δ = 0, Ω = 50: Ω̄ = 50; largest competitor g = 2.
  SystemParams p;
  p.omega_rabi = 50.0;
  p.g = 2.0;
  p.kappa = 0.1;
  p.epsilon = 0.5;
  p.gamma0 = p.gamma_plus = p.gamma_minus = 1.0;
  const auto r = regime_check(p, dress(p), 10.0);
  EXPECT_TRUE(r.ok);
  EXPECT_DOUBLE_EQ(r.worst_ratio, 25.0);
}

TEST(RegimeCheck, FailsWhenCouplingTooLarge) {
  SystemParams p;
  p.omega_rabi = 5.0;
  p.g = 2.0;
  p.kappa = 0.1;
  p.gamma0 = p.gamma_plus = p.gamma_minus = 1.0;
  EXPECT_FALSE(regime_check(p, dress(p), 10.0).ok);
}

TEST(RegimeCheck, FigureTwoWithUnitRabiIsOutOfRegime) {
  const SystemParams p = fig2_unit_omega();
  const auto f = dress(p);
  EXPECT_NEAR(f.omega_bar, std::sqrt(1.0 + 2.25), 1e-15);
  const auto r = regime_check(p, f);
  EXPECT_FALSE(r.ok);
  EXPECT_NEAR(r.worst_ratio, std::sqrt(3.25) / 2.0, 1e-15);
}

TEST(RegimeCheck, MonotoneInRabiAtFixedMixing) {
  // At Δ = 0 the mixing angle is fixed, so only Ω̄ moves with Ω.
  testing::ParamSampler sampler(21);
  for (int k = 0; k < 200; ++k) {
    SystemParams p = sampler.any();
    p.delta_a = 0.0;
    bool was_ok = false;
    for (double omega = 0.05; omega < 500.0; omega *= 1.3) {
      p.omega_rabi = omega;
      const bool ok = regime_check(p, dress(p)).ok;
      EXPECT_FALSE(was_ok && !ok) << "omega " << omega;
      was_ok = ok;
    }
  }
}

TEST(RegimeCheck, MonotoneWhenHamiltonianScaleDominates) {
  testing::ParamSampler sampler(22);
  for (int k = 0; k < 200; ++k) {
    SystemParams p = sampler.any();
    p.g = std::max(p.g, 3.0);  // dressed rates never exceed max(γ) + γ_d/4 < 3
    bool was_ok = false;
    for (double omega = 0.05; omega < 500.0; omega *= 1.3) {
      p.omega_rabi = omega;
      const bool ok = regime_check(p, dress(p)).ok;
      EXPECT_FALSE(was_ok && !ok) << "omega " << omega;
      was_ok = ok;
    }
  }
}

TEST(RegimeCheck, LargeSidebandRateCanBreakMonotonicity) {
  // Γ₋ = γ₋ sin⁴θ grows with Ω when Δ ≠ 0 and can outpace Ω̄.
  SystemParams p;
  p.delta_a = 1.0;
  p.gamma_minus = 100.0;
  p.g = 0.01;
  p.kappa = 0.1;
  p.omega_rabi = 0.01;
  EXPECT_TRUE(regime_check(p, dress(p)).ok);
  p.omega_rabi = 0.5;
  EXPECT_FALSE(regime_check(p, dress(p)).ok);
}

}  // namespace
}  // namespace cavint
