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
#include <ostream>
#include <vector>

#include "cavint/csv.hpp"
#include "cavint/dressing.hpp"
#include "cavint/error.hpp"
#include "cavint/moments.hpp"
#include "cavint/oracle.hpp"
#include "cavint/params.hpp"

// Cross-checks of the moment system and the secular approximation against
// the density-matrix oracle.

namespace cavint {

struct ClosureReport {
  double max_deviation = 0.0;
  double t_final = 0.0;
  double dt = 0.0;
  int fock_dim = 0;
  MomentTrajectory moments;
  oracle::OracleTrajectory oracle;
};

/// Propagates |−⟩⊗|vac⟩ with the secular oracle and with the moment system
/// on the same step schedule over t ∈ [0, t_final_kappa / κ] and reports the
/// largest deviation of any tracked expectation.
inline ClosureReport closure_check(const SystemParams& params, double t_final_kappa = 50.0,
                                   std::size_t record_every = 20,
                                   double target_tail = 1e-8,
                                   int fock_cap = oracle::kDefaultFockCap) {
  const SystemParams p = validate(params);
  const DressedFrame f = dress(p);
  auto space = oracle::build_space(p, f, target_tail, fock_cap);

  ClosureReport r;
  r.t_final = t_final_kappa / p.kappa;
  r.dt = oracle::max_oracle_dt(p, f, oracle::HamiltonianChoice::secular);
  // Grow the Fock space if the transient field outruns the initial size.
  while (true) {
    try {
      r.oracle = oracle::evolve_rho(oracle::ground_state(space), p, f, space, r.t_final, r.dt,
                                    oracle::HamiltonianChoice::secular, record_every);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationBreached || space.fock_dim >= fock_cap) throw;
      space.fock_dim = std::min(fock_cap, space.fock_dim + (space.fock_dim + 1) / 2);
    }
  }
  r.fock_dim = space.fock_dim;
  r.moments = evolve(MomentState::ground(), f, p, r.t_final, r.dt, record_every);
  for (std::size_t k = 0; k < r.moments.states.size(); ++k) {
    r.max_deviation = std::max(
        r.max_deviation, max_abs_diff(r.moments.states[k], r.oracle.samples[k].moments()));
  }
  return r;
}

inline void write_closure_csv(std::ostream& out, const ClosureReport& r) {
  using csv::format_double;
  csv::write_comment(out, "closure max_deviation=" + format_double(r.max_deviation) +
                              " fock_dim=" + std::to_string(r.fock_dim) +
                              " dt=" + format_double(r.dt) +
                              " t_final=" + format_double(r.t_final));
  csv::write_row(out, {"t", "n_moments", "n_oracle", "rz_moments", "rz_oracle", "deviation",
                       "tail_pop"});
  for (std::size_t k = 0; k < r.moments.states.size(); ++k) {
    const auto& m = r.moments.states[k];
    const auto& o = r.oracle.samples[k];
    csv::write_row(out, {format_double(r.moments.times[k]), format_double(m.n),
                         format_double(o.n), format_double(m.rz), format_double(o.rz),
                         format_double(max_abs_diff(m, o.moments())),
                         format_double(o.tail_pop)});
  }
}

struct SecularScanRow {
  double ratio = 0.0;  // Ω̄ / g
  double omega_bar = 0.0;
  double omega_rabi = 0.0;
  double delta_a = 0.0;
  double n_secular = 0.0;
  double n_full = 0.0;
  double rel_error = 0.0;
  int fock_dim = 0;
};

/// Steady photon number with and without the counter-rotating terms while
/// (Ω, Δ) are scaled together so that Ω̄ = ratio · g. Δ/Ω and every other
/// parameter stay fixed, so the dressed rates do not change along the scan.
inline std::vector<SecularScanRow> secular_scan(const SystemParams& params,
                                                const std::vector<double>& ratios,
                                                double target_tail = 1e-8,
                                                int fock_cap = oracle::kDefaultFockCap) {
  const SystemParams base = validate(params);
  if (!(base.g > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "secular scan needs g > 0");
  }
  const double omega_bar0 = dress(base).omega_bar;
  std::vector<SecularScanRow> rows;
  for (double ratio : ratios) {
    if (!(ratio > 0.0)) throw Error(ErrorCode::InvalidArgument, "ratios must be > 0");
    SystemParams p = base;
    const double scale = ratio * base.g / omega_bar0;
    p.omega_rabi *= scale;
    p.delta_a *= scale;
    const DressedFrame f = dress(p);
    const auto es =
        oracle::steady_auto(p, f, oracle::HamiltonianChoice::secular, target_tail, fock_cap);
    const auto ef =
        oracle::steady_auto(p, f, oracle::HamiltonianChoice::full, target_tail, fock_cap);

    SecularScanRow row;
    row.ratio = ratio;
    row.omega_bar = f.omega_bar;
    row.omega_rabi = p.omega_rabi;
    row.delta_a = p.delta_a;
    row.fock_dim = std::max(es.space.fock_dim, ef.space.fock_dim);
    row.n_secular = es.values.n;
    row.n_full = ef.values.n;
    row.rel_error = std::abs(row.n_full - row.n_secular) / row.n_secular;
    rows.push_back(row);
  }
  return rows;
}

inline void write_secular_scan_csv(std::ostream& out, const std::vector<SecularScanRow>& rows) {
  using csv::format_double;
  csv::write_row(out, {"omega_bar_over_g", "omega_bar", "omega_rabi", "delta_a", "n_secular",
                       "n_full", "rel_error", "fock_dim"});
  for (const auto& r : rows) {
    csv::write_row(out, {format_double(r.ratio), format_double(r.omega_bar),
                         format_double(r.omega_rabi), format_double(r.delta_a),
                         format_double(r.n_secular), format_double(r.n_full),
                         format_double(r.rel_error), std::to_string(r.fock_dim)});
  }
}

}  // namespace cavint
