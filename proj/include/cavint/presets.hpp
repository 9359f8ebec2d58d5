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

#include <string>
#include <string_view>
#include <vector>

#include "cavint/csv.hpp"
#include "cavint/error.hpp"
#include "cavint/params.hpp"
#include "cavint/sweep.hpp"

namespace cavint {

/// Absolute Rabi frequency used by the presets. The figures fix only Δ/Ω,
/// and the steady photon number depends only on that ratio; Ω = 50 γ keeps
/// the presets deep inside the secular regime for oracle runs.
inline constexpr double kPresetOmegaRabi = 50.0;

struct FigurePreset {
  std::string name;
  std::string description;
  SweepSpec spec;
};

namespace detail {

inline std::string omega_note() {
  return "omega_rabi fixed at " + csv::format_double(kPresetOmegaRabi) +
         "; the figures specify only delta_a/omega";
}

// γ = 1 units, γ_d/γ = 0.01, κ/γ = 0.1, g/γ = 2, φ = 0, δ = 0.
inline SystemParams figure_base(double delta_over_omega) {
  SystemParams p;
  p.omega_rabi = kPresetOmegaRabi;
  p.delta_a = delta_over_omega * kPresetOmegaRabi;
  p.delta_c = 0.0;
  p.epsilon = 0.5;
  p.g = 2.0;
  p.kappa = 0.1;
  p.gamma0 = 1.0;
  p.gamma_plus = 1.0;
  p.gamma_minus = 1.0;
  p.gamma_d = 0.01;
  p.phi = 0.0;
  return p;
}

inline FigurePreset fig3_curve(std::string name, std::string description,
                               double delta_over_omega, double gamma_plus,
                               double gamma_minus, double gamma_star) {
  FigurePreset fp;
  fp.name = std::move(name);
  fp.description = std::move(description);
  fp.spec.base = figure_base(delta_over_omega);
  fp.spec.base.gamma_plus = gamma_plus;
  fp.spec.base.gamma_minus = gamma_minus;
  fp.spec.axis1 = Axis{"epsilon", 0.0, 2.0 * gamma_star, 201};
  fp.spec.solver = Solver::moments;
  fp.spec.gamma_star = gamma_star;
  fp.spec.notes.push_back(omega_note());
  return fp;
}

}  // namespace detail

inline std::vector<FigurePreset> figure_presets() {
  std::vector<FigurePreset> out;

  FigurePreset fig2;
  fig2.name = "fig2";
  fig2.description = "photon number over (epsilon, delta_c), free space, delta_a/omega = 3";
  fig2.spec.base = detail::figure_base(3.0);
  fig2.spec.axis1 = Axis{"epsilon", 0.0, 2.0, 101};
  fig2.spec.axis2 = Axis{"delta_c", -3.0, 3.0, 121};
  fig2.spec.solver = Solver::moments;
  fig2.spec.gamma_star = 1.0;
  fig2.spec.notes.push_back(detail::omega_note());
  out.push_back(std::move(fig2));

  out.push_back(detail::fig3_curve("fig3_solid",
                                   "free space gamma* = gamma_plus = gamma_minus, "
                                   "delta_a/omega = 1",
                                   1.0, 1.0, 1.0, 1.0));
  out.push_back(detail::fig3_curve("fig3_longdash",
                                   "gamma* = gamma_minus, gamma_plus = 0, delta_a/omega = 1",
                                   1.0, 0.0, 1.0, 1.0));
  out.push_back(detail::fig3_curve("fig3_shortdash",
                                   "gamma* = gamma_plus, gamma_minus = 0, delta_a/omega = 1",
                                   1.0, 1.0, 0.0, 1.0));
  FigurePreset dotted = detail::fig3_curve(
      "fig3_dotted", "delta_a = delta_c = 0, gamma* = gamma_plus, gamma_minus = 0", 0.0, 1.0,
      0.0, 1.0);
  dotted.spec.notes.push_back(
      "assumption: rates for the resonant curve taken as gamma* = gamma_plus, "
      "gamma_minus = 0 (negative steady inversion, suppression at phi = 0)");
  out.push_back(std::move(dotted));
  return out;
}

inline FigurePreset find_preset(std::string_view name) {
  for (auto& p : figure_presets()) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

}  // namespace cavint
