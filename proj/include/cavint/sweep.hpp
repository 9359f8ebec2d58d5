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
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cavint/analytic.hpp"
#include "cavint/csv.hpp"
#include "cavint/dressing.hpp"
#include "cavint/error.hpp"
#include "cavint/moments.hpp"
#include "cavint/oracle.hpp"
#include "cavint/params.hpp"
#include "cavint/regime.hpp"
#include "cavint/search.hpp"

namespace cavint {

enum class Solver { analytic, moments, oracle_secular, oracle_full };

constexpr std::string_view to_string(Solver s) noexcept {
  switch (s) {
    case Solver::analytic: return "analytic";
    case Solver::moments: return "moments";
    case Solver::oracle_secular: return "oracle_secular";
    case Solver::oracle_full: return "oracle_full";
  }
  return "unknown";
}

inline Solver parse_solver(std::string_view name) {
  for (auto s : {Solver::analytic, Solver::moments, Solver::oracle_secular,
                 Solver::oracle_full}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown solver '" + std::string(name) + "'");
}

/// Derived sweep control that sets delta_a = value * omega_rabi.
inline constexpr std::string_view kDeltaOverOmega = "delta_over_omega";

inline bool is_control_name(std::string_view name) {
  return name == kDeltaOverOmega || is_param_name(name);
}

inline void apply_control(SystemParams& p, std::string_view name, double value) {
  if (name == kDeltaOverOmega) {
    p.delta_a = value * p.omega_rabi;
  } else {
    param_ref(p, name) = value;
  }
}

struct Axis {
  std::string param;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  double value(int i) const {
    if (i == steps - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }

  void check() const {
    if (!is_control_name(param)) {
      throw Error(ErrorCode::InvalidArgument, "unknown sweep parameter '" + param + "'");
    }
    if (steps < 2) throw Error(ErrorCode::InvalidArgument, "axis needs steps >= 2");
    if (!(start < stop)) throw Error(ErrorCode::InvalidArgument, "axis needs start < stop");
  }
};

namespace detail {

inline double parse_number(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + s + "'");
  }
  return v;
}

}  // namespace detail

/// Parses "name:start:stop:steps".
inline Axis parse_axis(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(':', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts.size() != 4) {
    throw Error(ErrorCode::InvalidArgument,
                "axis must look like name:start:stop:steps, got '" + std::string(text) + "'");
  }
  Axis a;
  a.param = std::string(parts[0]);
  a.start = detail::parse_number(parts[1]);
  a.stop = detail::parse_number(parts[2]);
  const double steps = detail::parse_number(parts[3]);
  if (steps != std::floor(steps) || steps > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::InvalidArgument, "axis steps must be an integer");
  }
  a.steps = static_cast<int>(steps);
  a.check();
  return a;
}

struct SweepSpec {
  Axis axis1;
  std::optional<Axis> axis2;
  SystemParams base;
  Solver solver = Solver::moments;
  // Normalisation rate for figure abscissas; adds a column axis1 / gamma_star.
  std::optional<double> gamma_star;
  std::vector<std::string> notes;

  void check() const {
    axis1.check();
    if (axis2) axis2->check();
  }
};

struct SolveOptions {
  double regime_factor = kDefaultRegimeFactor;
  // When the analytic closed forms do not apply, switch to the moment solver
  // with a warning instead of failing.
  bool allow_fallback = false;
  double target_tail = 1e-8;
  int fock_cap = oracle::kDefaultFockCap;
};

struct PointResult {
  double n = std::numeric_limits<double>::quiet_NaN();
  double rz = std::numeric_limits<double>::quiet_NaN();
  std::optional<cplx> a_mean;
  std::optional<cplx> rza;
  bool regime_ok = false;
  double regime_ratio = 0.0;
  Solver solver = Solver::moments;
  std::vector<std::string> warnings;
};

namespace detail {

inline void solve_analytic(const SystemParams& p, const DressedFrame& f, PointResult& r) {
  if (p.delta_c == 0.0 && p.symmetric_rates() && p.gamma0 > 0.0) {
    r.n = n_quadratic(coefficients(p), p.epsilon);
    r.rz = rz_steady(f);
  } else {
    const Decomposition d = decomposition(p, f);
    r.n = d.total;
    r.rz = d.rz;
  }
}

inline void solve_oracle(const SystemParams& p, const DressedFrame& f,
                         oracle::HamiltonianChoice choice, const SolveOptions& opts,
                         PointResult& r) {
  const auto e = oracle::steady_auto(p, f, choice, opts.target_tail, opts.fock_cap).values;
  r.n = e.n;
  r.rz = e.rz;
  r.a_mean = e.a_mean;
  r.rza = e.rza;
}

}  // namespace detail

/// Evaluates one parameter point with the requested solver.
inline PointResult solve_point(const SystemParams& params, Solver solver,
                               const SolveOptions& opts = {}) {
  const SystemParams p = validate(params);
  const DressedFrame f = dress(p);
  PointResult r;
  r.solver = solver;
  const RegimeReport regime = regime_check(p, f, opts.regime_factor);
  r.regime_ok = regime.ok;
  r.regime_ratio = regime.worst_ratio;
  if (!regime.ok) {
    r.warnings.push_back("secular regime check failed: omega_bar / max competitor = " +
                         csv::format_double(regime.worst_ratio) + " < " +
                         csv::format_double(opts.regime_factor));
  }

  switch (solver) {
    case Solver::analytic:
      try {
        detail::solve_analytic(p, f, r);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DomainError || !opts.allow_fallback) throw;
        r.warnings.push_back(std::string("analytic closed forms do not apply (") + e.what() +
                             "); switched to the moment solver");
        r.solver = Solver::moments;
      }
      [[fallthrough]];
    case Solver::moments: {
      const MomentState s = steady_state(f, p);
      r.n = s.n;
      r.rz = s.rz;
      r.a_mean = s.a_mean;
      r.rza = s.rza;
      break;
    }
    case Solver::oracle_secular:
      detail::solve_oracle(p, f, oracle::HamiltonianChoice::secular, opts, r);
      break;
    case Solver::oracle_full:
      detail::solve_oracle(p, f, oracle::HamiltonianChoice::full, opts, r);
      break;
  }
  return r;
}

struct SweepRow {
  double x1 = 0.0;
  std::optional<double> x2;
  PointResult result;
  std::string error;
};

/// Evaluates every grid point, axis1-major. Points are independent and are
/// spread over `threads` workers; row order is fixed by grid index.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SolveOptions& opts = {},
                                       unsigned threads = 1) {
  spec.check();
  const int n1 = spec.axis1.steps;
  const int n2 = spec.axis2 ? spec.axis2->steps : 1;
  const std::size_t total = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
  std::vector<SweepRow> rows(total);

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t idx = begin; idx < total; idx += stride) {
      const int i = static_cast<int>(idx / static_cast<std::size_t>(n2));
      const int j = static_cast<int>(idx % static_cast<std::size_t>(n2));
      SweepRow& row = rows[idx];
      SystemParams p = spec.base;
      row.x1 = spec.axis1.value(i);
      apply_control(p, spec.axis1.param, row.x1);
      if (spec.axis2) {
        row.x2 = spec.axis2->value(j);
        apply_control(p, spec.axis2->param, *row.x2);
      }
      try {
        row.result = solve_point(p, spec.solver, opts);
      } catch (const Error& e) {
        row.result.solver = spec.solver;
        row.error = e.what();
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return rows;
}

inline void write_manifest(std::ostream& out, const SystemParams& base,
                           std::string_view title) {
  csv::write_comment(out, std::string("cavint ") + std::string(title));
  std::string line = "base";
  for (auto name : kParamNames) {
    line += ' ';
    line += name;
    line += '=';
    line += csv::format_double(param_value(base, name));
  }
  csv::write_comment(out, line);
}

inline void write_sweep_csv(std::ostream& out, const SweepSpec& spec,
                            const std::vector<SweepRow>& rows, const SolveOptions& opts) {
  using csv::format_double;
  write_manifest(out, spec.base, "sweep");
  csv::write_comment(out, "solver=" + std::string(to_string(spec.solver)) +
                              " regime_factor=" + format_double(opts.regime_factor));
  auto axis_line = [](const char* label, const Axis& a) {
    return std::string(label) + " " + a.param + " start=" + format_double(a.start) +
           " stop=" + format_double(a.stop) + " steps=" + std::to_string(a.steps);
  };
  csv::write_comment(out, axis_line("axis1", spec.axis1));
  if (spec.axis2) csv::write_comment(out, axis_line("axis2", *spec.axis2));
  if (spec.gamma_star) csv::write_comment(out, "gamma_star=" + format_double(*spec.gamma_star));
  for (const auto& note : spec.notes) csv::write_comment(out, note);

  std::vector<std::string> header{spec.axis1.param};
  if (spec.axis2) header.push_back(spec.axis2->param);
  if (spec.gamma_star) header.push_back(spec.axis1.param + "_over_gamma_star");
  for (const char* h : {"n", "rz", "solver", "regime_ok", "error"}) header.emplace_back(h);
  csv::write_row(out, header);

  for (const auto& row : rows) {
    std::vector<std::string> fields{format_double(row.x1)};
    if (spec.axis2) fields.push_back(format_double(row.x2.value_or(0.0)));
    if (spec.gamma_star) fields.push_back(format_double(row.x1 / *spec.gamma_star));
    fields.push_back(format_double(row.result.n));
    fields.push_back(format_double(row.result.rz));
    fields.emplace_back(to_string(row.result.solver));
    fields.emplace_back(row.error.empty() ? (row.result.regime_ok ? "1" : "0") : "");
    std::string err = row.error;
    std::replace(err.begin(), err.end(), ',', ';');
    fields.push_back(err);
    csv::write_row(out, fields);
  }
}

/// Location and value of the photon-number minimum over the weak drive ε.
struct MinimumReport {
  double eps_min = 0.0;
  double n_min = 0.0;
  std::optional<double> bound;
  std::string method;
};

/// Golden-section search over ε on the moment steady state, finished by one
/// parabolic step. The photon number is convex in ε, so any bracket that
/// contains the vertex works; |ε_min| never exceeds g/2.
inline MinimumReport numeric_minimum(const SystemParams& params) {
  const SystemParams base = validate(params);
  const DressedFrame f = dress(base);
  auto n_of = [&](double eps) {
    SystemParams q = base;
    q.epsilon = eps;
    return steady_state(f, q).n;
  };
  const double half_width = base.g + 1.0;
  ScalarMinimum m = golden_section_minimize(n_of, -half_width, half_width);
  m = parabolic_refine(n_of, m, 1e-2 * half_width);
  MinimumReport r;
  r.eps_min = m.x;
  r.n_min = m.fx;
  r.method = "golden_section";
  return r;
}

inline bool analytic_minimum_applies(const SystemParams& p) {
  return p.delta_c == 0.0 && p.symmetric_rates() && p.gamma0 > 0.0;
}

inline MinimumReport find_minimum(const SystemParams& params) {
  const SystemParams p = validate(params);
  MinimumReport r;
  if (analytic_minimum_applies(p)) {
    const QuadraticCoefficients q = coefficients(p);
    r.eps_min = q.eps_min;
    r.n_min = q.n_min;
    r.method = "analytic";
  } else {
    r = numeric_minimum(p);
  }
  if (p.symmetric_rates() && p.gamma0 > 0.0) r.bound = eps_min_bound(p);
  return r;
}

}  // namespace cavint
