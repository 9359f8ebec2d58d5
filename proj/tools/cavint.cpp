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

// Command-line front end: single-point evaluation, extremum search,
// parameter sweeps with figure presets, and oracle cross-checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cavint.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct CommonOptions {
  std::map<std::string, std::optional<double>> fields;
  std::optional<double> delta_over_omega;
  std::string preset;
  std::string config;
  std::string out;
  std::string solver = "moments";
  double regime_factor = cavint::kDefaultRegimeFactor;
};

void add_param_flags(CLI::App* cmd, CommonOptions& o, bool with_solver) {
  for (auto name : cavint::kParamNames) {
    auto& slot = o.fields[std::string(name)];
    cmd->add_option("--" + std::string(name), slot, "override " + std::string(name));
  }
  cmd->add_option("--delta_over_omega", o.delta_over_omega,
                  "set delta_a = value * omega_rabi (applied after the other flags)");
  cmd->add_option("--preset", o.preset, "start from a figure preset's base parameters");
  cmd->add_option("--config", o.config, "flat JSON object of parameter values");
  cmd->add_option("--out", o.out, "output file (default: standard output)");
  cmd->add_option("--regime-factor", o.regime_factor, "secular-regime margin")
      ->check(CLI::PositiveNumber);
  if (with_solver) {
    cmd->add_option("--solver", o.solver, "analytic | moments | oracle_secular | oracle_full")
        ->check(CLI::IsMember({"analytic", "moments", "oracle_secular", "oracle_full"}));
  }
}

// preset base, then config file, then individual flags.
cavint::SystemParams resolve_params(const CommonOptions& o) {
  cavint::SystemParams p = o.preset.empty() ? cavint::find_preset("fig2").spec.base
                                            : cavint::find_preset(o.preset).spec.base;
  if (!o.config.empty()) p = cavint::load_params_file(o.config, p);
  for (const auto& [name, value] : o.fields) {
    if (value) cavint::param_ref(p, name) = *value;
  }
  if (o.delta_over_omega) p.delta_a = *o.delta_over_omega * p.omega_rabi;
  return cavint::validate(p);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw cavint::Error(cavint::ErrorCode::ConfigError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void warn(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

int cmd_steady(const CommonOptions& o) {
  using cavint::csv::format_double;
  const auto p = resolve_params(o);
  cavint::SolveOptions opts;
  opts.regime_factor = o.regime_factor;
  opts.allow_fallback = true;
  const auto r = cavint::solve_point(p, cavint::parse_solver(o.solver), opts);
  for (const auto& w : r.warnings) warn(w);

  Output out(o.out);
  auto& s = out.stream();
  cavint::write_manifest(s, p, "steady");
  auto opt_part = [](const std::optional<cavint::cplx>& z, bool real) {
    if (!z) return std::string("nan");
    return format_double(real ? z->real() : z->imag());
  };
  cavint::csv::write_row(s, {"n", "rz", "re_a", "im_a", "re_rza", "im_rza", "solver",
                             "regime_ok"});
  cavint::csv::write_row(
      s, {format_double(r.n), format_double(r.rz), opt_part(r.a_mean, true),
          opt_part(r.a_mean, false), opt_part(r.rza, true), opt_part(r.rza, false),
          std::string(cavint::to_string(r.solver)), r.regime_ok ? "1" : "0"});
  return 0;
}

int cmd_min(const CommonOptions& o) {
  using cavint::csv::format_double;
  const auto p = resolve_params(o);
  const auto regime = cavint::regime_check(p, cavint::dress(p), o.regime_factor);
  if (!regime.ok) {
    warn("secular regime check failed: omega_bar / max competitor = " +
         format_double(regime.worst_ratio));
  }
  const auto r = cavint::find_minimum(p);
  if (r.method != "analytic") {
    warn("closed-form minimum needs delta_c = 0 and equal spontaneous rates; "
         "used a numeric search over epsilon");
  }
  Output out(o.out);
  auto& s = out.stream();
  cavint::write_manifest(s, p, "min");
  cavint::csv::write_row(s, {"eps_min", "n_min", "bound", "method"});
  cavint::csv::write_row(s, {format_double(r.eps_min), format_double(r.n_min),
                             r.bound ? format_double(*r.bound) : "nan", r.method});
  return 0;
}

struct SweepOptions {
  std::string axis1;
  std::string axis2;
  unsigned threads = 0;
};

int cmd_sweep(const CommonOptions& o, const SweepOptions& so, const CLI::App& sub) {
  cavint::SweepSpec spec;
  if (!o.preset.empty()) spec = cavint::find_preset(o.preset).spec;
  spec.base = resolve_params(o);
  if (sub.count("--solver")) spec.solver = cavint::parse_solver(o.solver);
  if (!so.axis1.empty()) {
    spec.axis1 = cavint::parse_axis(so.axis1);
    spec.axis2.reset();
    spec.gamma_star.reset();
  } else if (o.preset.empty()) {
    throw cavint::Error(cavint::ErrorCode::InvalidArgument, "sweep needs --axis1 or --preset");
  }
  if (!so.axis2.empty()) spec.axis2 = cavint::parse_axis(so.axis2);

  cavint::SolveOptions opts;
  opts.regime_factor = o.regime_factor;
  const unsigned threads =
      so.threads ? so.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto rows = cavint::run_sweep(spec, opts, threads);

  std::size_t bad_regime = 0;
  for (const auto& r : rows) bad_regime += (r.error.empty() && !r.result.regime_ok);
  if (bad_regime) {
    warn(std::to_string(bad_regime) + " grid points fail the secular regime check");
  }
  Output out(o.out);
  cavint::write_sweep_csv(out.stream(), spec, rows, opts);
  return 0;
}

struct OracleCheckOptions {
  std::string mode = "closure";
  std::vector<double> ratios{5.0, 10.0, 20.0, 50.0};
  double t_final_kappa = 50.0;
  std::size_t record_every = 20;
  std::string dump;
};

int cmd_oracle_check(const CommonOptions& o, const OracleCheckOptions& oc) {
  const auto p = resolve_params(o);
  Output out(o.out);
  auto& s = out.stream();
  cavint::write_manifest(s, p, "oracle-check " + oc.mode);
  if (oc.mode == "closure") {
    const auto r = cavint::closure_check(p, oc.t_final_kappa, oc.record_every);
    cavint::write_closure_csv(s, r);
    if (!oc.dump.empty()) {
      std::ofstream dump(oc.dump);
      if (!dump) throw cavint::Error(cavint::ErrorCode::ConfigError, "cannot write " + oc.dump);
      cavint::oracle::write_trajectory_csv(dump, r.oracle);
    }
  } else {
    cavint::write_secular_scan_csv(s, cavint::secular_scan(p, oc.ratios));
  }
  return 0;
}

int cmd_preset(const std::string& name, const std::string& out_path) {
  Output out(out_path);
  auto& s = out.stream();
  if (name.empty()) {
    for (const auto& p : cavint::figure_presets()) s << p.name << "  " << p.description << '\n';
    return 0;
  }
  const auto p = cavint::find_preset(name);
  nlohmann::json j;
  j["name"] = p.name;
  j["description"] = p.description;
  j["params"] = cavint::to_json(p.spec.base);
  j["solver"] = std::string(cavint::to_string(p.spec.solver));
  auto axis = [](const cavint::Axis& a) {
    return nlohmann::json{{"param", a.param}, {"start", a.start}, {"stop", a.stop},
                          {"steps", a.steps}};
  };
  j["axis1"] = axis(p.spec.axis1);
  if (p.spec.axis2) j["axis2"] = axis(*p.spec.axis2);
  if (p.spec.gamma_star) j["gamma_star"] = *p.spec.gamma_star;
  j["notes"] = p.spec.notes;
  s << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavint: cavity output field of a dressed two-level emitter"};
  app.require_subcommand(1);

  CommonOptions steady_opts, min_opts, sweep_opts, check_opts;
  auto* steady = app.add_subcommand("steady", "steady state at one parameter point");
  add_param_flags(steady, steady_opts, true);

  auto* min = app.add_subcommand("min", "photon-number minimum over the weak drive epsilon");
  add_param_flags(min, min_opts, false);

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "1D/2D parameter sweep to CSV");
  add_param_flags(sweep, sweep_opts, true);
  sweep->add_option("--axis1", so.axis1, "name:start:stop:steps");
  sweep->add_option("--axis2", so.axis2, "name:start:stop:steps");
  sweep->add_option("--threads", so.threads, "worker threads (default: all cores)");

  OracleCheckOptions oc;
  auto* check = app.add_subcommand("oracle-check", "density-matrix cross-checks");
  add_param_flags(check, check_opts, false);
  check->add_option("--mode", oc.mode, "closure | secular_scan")
      ->check(CLI::IsMember({"closure", "secular_scan"}));
  check->add_option("--ratios", oc.ratios, "omega_bar / g values for secular_scan")
      ->delimiter(',');
  check->add_option("--t-final-kappa", oc.t_final_kappa, "closure horizon in units of 1/kappa")
      ->check(CLI::PositiveNumber);
  check->add_option("--record-every", oc.record_every, "closure sampling stride in steps");
  check->add_option("--dump", oc.dump, "write the oracle trajectory CSV to this file");

  std::string preset_name, preset_out;
  auto* preset = app.add_subcommand("preset", "list figure presets or show one");
  preset->add_option("--name", preset_name, "preset to resolve");
  preset->add_option("--out", preset_out, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*steady) return cmd_steady(steady_opts);
    if (*min) return cmd_min(min_opts);
    if (*sweep) return cmd_sweep(sweep_opts, so, *sweep);
    if (*check) return cmd_oracle_check(check_opts, oc);
    if (*preset) return cmd_preset(preset_name, preset_out);
  } catch (const cavint::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_usage_error() ? kExitUsage : kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitUsage;
}
