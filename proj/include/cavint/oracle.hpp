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
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "cavint/csv.hpp"
#include "cavint/dressing.hpp"
#include "cavint/error.hpp"
#include "cavint/moments.hpp"
#include "cavint/params.hpp"

// Brute-force density-matrix propagation of the dressed master equation in
// a truncated qubit ⊗ Fock space. Basis index is atom * N + n with atom 0
// the upper dressed state |+⟩ and atom 1 the lower state |−⟩.

namespace cavint::oracle {

using Operator = Eigen::SparseMatrix<cplx>;
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr int kMinFockDim = 10;
inline constexpr int kDefaultFockCap = 400;

struct HilbertSpace {
  int fock_dim = kMinFockDim;
  double tail_tolerance = 1e-8;

  Eigen::Index dim() const { return 2 * static_cast<Eigen::Index>(fock_dim); }
  Eigen::Index index(int atom, int photons) const {
    return static_cast<Eigen::Index>(atom) * fock_dim + photons;
  }
};

inline HilbertSpace space_for_photon_number(double n_pred, double target_tail,
                                            int cap = kDefaultFockCap) {
  if (!(target_tail > 0.0 && target_tail < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "target_tail must lie in (0, 1)");
  }
  n_pred = std::max(0.0, n_pred);
  const double wanted = std::ceil(n_pred + 6.0 * std::sqrt(n_pred) + 10.0);
  if (wanted > cap) {
    throw Error(ErrorCode::TruncationTooLarge,
                "Fock dimension " + std::to_string(static_cast<long>(wanted)) +
                    " exceeds cap " + std::to_string(cap) +
                    "; reduce epsilon to lower the photon number");
  }
  HilbertSpace s;
  s.fock_dim = std::max(kMinFockDim, static_cast<int>(wanted));
  s.tail_tolerance = target_tail;
  return s;
}

/// Sizes the Fock space from the steady photon number of the moment system.
inline HilbertSpace build_space(const SystemParams& p, const DressedFrame& f,
                                double target_tail, int cap = kDefaultFockCap) {
  return space_for_photon_number(steady_state(f, p).n, target_tail, cap);
}

struct OperatorSet {
  Operator a;
  Operator a_dag;
  Operator number;
  Operator r_plus;   // |+⟩⟨−|
  Operator r_minus;  // |−⟩⟨+|
  Operator r_z;      // |+⟩⟨+| − |−⟩⟨−|
  Operator rz_a;
  Operator tail_projector;  // atom ⊗ |N−1⟩⟨N−1|
  Operator identity;
};

namespace detail {

// atom ⊗ fock for a 2×2 atomic matrix and a sparse Fock-space matrix.
inline Operator kron_atom(const Eigen::Matrix2cd& atom, const Operator& fock) {
  const Eigen::Index n = fock.rows();
  std::vector<Eigen::Triplet<cplx>> trips;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (atom(i, j) == cplx{}) continue;
      for (Eigen::Index k = 0; k < fock.outerSize(); ++k) {
        for (Operator::InnerIterator it(fock, k); it; ++it) {
          trips.emplace_back(i * n + it.row(), j * n + it.col(), atom(i, j) * it.value());
        }
      }
    }
  }
  Operator out(2 * n, 2 * n);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

inline Operator fock_annihilation(int n) {
  std::vector<Eigen::Triplet<cplx>> trips;
  for (int k = 1; k < n; ++k) trips.emplace_back(k - 1, k, std::sqrt(static_cast<double>(k)));
  Operator a(n, n);
  a.setFromTriplets(trips.begin(), trips.end());
  return a;
}

inline Operator fock_identity(int n) {
  Operator id(n, n);
  id.setIdentity();
  return id;
}

}  // namespace detail

inline OperatorSet make_operators(const HilbertSpace& space) {
  const int n = space.fock_dim;
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "fock_dim must be >= 2");
  const Operator a = detail::fock_annihilation(n);
  const Operator id = detail::fock_identity(n);
  Operator edge(n, n);
  edge.insert(n - 1, n - 1) = 1.0;

  Eigen::Matrix2cd one = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd rp = Eigen::Matrix2cd::Zero();
  rp(0, 1) = 1.0;
  Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
  rz(0, 0) = 1.0;
  rz(1, 1) = -1.0;

  OperatorSet ops;
  ops.a = detail::kron_atom(one, a);
  ops.a_dag = ops.a.adjoint();
  ops.number = ops.a_dag * ops.a;
  ops.r_plus = detail::kron_atom(rp, id);
  ops.r_minus = ops.r_plus.adjoint();
  ops.r_z = detail::kron_atom(rz, id);
  ops.rz_a = ops.r_z * ops.a;
  ops.tail_projector = detail::kron_atom(one, edge);
  ops.identity = detail::kron_atom(one, id);
  return ops;
}

/// Secular dressed Hamiltonian (ħ = 1). `include_splitting = false` drops
/// Ω̄ R_z, which commutes with the whole secular generator and leaves every
/// tracked expectation unchanged.
inline Operator build_h0(const SystemParams& p, const DressedFrame& f,
                         const HilbertSpace& space, bool include_splitting = true) {
  const OperatorSet ops = make_operators(space);
  Operator h = p.delta_c * ops.number + cplx(p.epsilon) * (ops.a_dag + ops.a) +
               ops.r_z * (std::conj(f.g0) * ops.a_dag + f.g0 * ops.a);
  if (include_splitting) h += cplx(f.omega_bar) * ops.r_z;
  h.prune(cplx{});
  return h;
}

/// Secular Hamiltonian plus the counter-rotating terms at ±2Ω̄.
inline Operator build_h_full(const SystemParams& p, const DressedFrame& f,
                             const HilbertSpace& space) {
  const OperatorSet ops = make_operators(space);
  const double c2 = 0.5 * (1.0 + f.cos2theta);  // cos²θ
  const double s2 = 0.5 * (1.0 - f.cos2theta);  // sin²θ
  const cplx phase = std::polar(1.0, p.phi);
  Operator lower = c2 * ops.r_minus - s2 * ops.r_plus;
  Operator raise = c2 * ops.r_plus - s2 * ops.r_minus;
  Operator h = build_h0(p, f, space) +
               (p.g * std::conj(phase)) * Operator(lower * ops.a_dag) +
               (p.g * phase) * Operator(raise * ops.a);
  h.prune(cplx{});
  return h;
}

enum class HamiltonianChoice { secular, full };

/// One dissipation channel rate · (2 L ρ L† − L†L ρ − ρ L†L).
struct Channel {
  double rate;
  Operator jump;
};

inline std::vector<Channel> dissipation_channels(const DressedFrame& f, const SystemParams& p,
                                                 const OperatorSet& ops) {
  return {{p.kappa, ops.a},
          {f.gamma_cap_0, ops.r_z},
          {f.gamma_cap_plus, ops.r_minus},
          {f.gamma_cap_minus, ops.r_plus}};
}

/// Generator of the master equation,
///   dρ/dt = −i[H, ρ] − Σ c ([L†, L ρ] + h.c.),
/// applied through the effective non-Hermitian Hamiltonian.
class LindbladGenerator {
 public:
  LindbladGenerator(const Operator& hamiltonian, std::vector<Channel> channels)
      : hamiltonian_(hamiltonian), channels_(std::move(channels)) {
    const Eigen::Index d = hamiltonian.rows();
    Operator decay(d, d);
    for (const auto& ch : channels_) {
      if (ch.rate == 0.0) continue;
      decay += ch.rate * Operator(ch.jump.adjoint() * ch.jump);
      active_.push_back({2.0 * ch.rate, ch.jump, ch.jump.adjoint()});
    }
    h_eff_ = hamiltonian - cplx(0.0, 1.0) * decay;
    h_eff_.prune(cplx{});
    h_eff_adj_ = h_eff_.adjoint();
  }

  DensityMatrix apply(const DensityMatrix& rho) const {
    const cplx i{0.0, 1.0};
    DensityMatrix out = -i * (h_eff_ * rho);
    out.noalias() += i * (rho * h_eff_adj_);
    for (const auto& j : active_) {
      DensityMatrix tmp = j.jump * rho;
      out.noalias() += j.weight * (tmp * j.jump_adj);
    }
    return out;
  }

  /// Same as apply() for Hermitian ρ, using only sparse-times-dense
  /// products. The result is assembled as Y + Y† with
  /// Y = −i H_eff ρ + Σ c L (L ρ)†, so it is Hermitian to the last bit.
  DensityMatrix apply_hermitian(const DensityMatrix& rho) const {
    const cplx i{0.0, 1.0};
    DensityMatrix y = h_eff_ * rho;
    y *= -i;
    DensityMatrix tmp(rho.rows(), rho.cols());
    for (const auto& j : active_) {
      tmp.noalias() = j.jump * rho;
      y.noalias() += (0.5 * j.weight) * (j.jump * tmp.adjoint());
    }
    return y + y.adjoint();
  }

  /// Matrix of the generator acting on column-major vec(ρ).
  Operator superoperator() const {
    const Eigen::Index d = hamiltonian_.rows();
    const cplx i{0.0, 1.0};
    std::vector<Eigen::Triplet<cplx>> trips;
    // vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ)
    auto add_kron = [&](const Operator& bt, const Operator& a, cplx scale) {
      for (Eigen::Index kb = 0; kb < bt.outerSize(); ++kb) {
        for (Operator::InnerIterator ib(bt, kb); ib; ++ib) {
          for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka) {
            for (Operator::InnerIterator ia(a, ka); ia; ++ia) {
              trips.emplace_back(ib.row() * d + ia.row(), ib.col() * d + ia.col(),
                                 scale * ib.value() * ia.value());
            }
          }
        }
      }
    };
    Operator id(d, d);
    id.setIdentity();
    add_kron(id, h_eff_, -i);
    add_kron(Operator(h_eff_adj_.transpose()), id, i);
    for (const auto& j : active_) {
      add_kron(Operator(j.jump_adj.transpose()), j.jump, j.weight);
    }
    Operator out(d * d, d * d);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
  }

  const Operator& hamiltonian() const { return hamiltonian_; }

 private:
  struct Jump {
    double weight;
    Operator jump;
    Operator jump_adj;
  };
  Operator hamiltonian_;
  std::vector<Channel> channels_;
  std::vector<Jump> active_;
  Operator h_eff_;
  Operator h_eff_adj_;
};

inline LindbladGenerator make_generator(const SystemParams& p, const DressedFrame& f,
                                        const HilbertSpace& space,
                                        const Operator& hamiltonian) {
  return LindbladGenerator(hamiltonian, dissipation_channels(f, p, make_operators(space)));
}

inline DensityMatrix lindblad_rhs(const DensityMatrix& rho, const SystemParams& p,
                                  const DressedFrame& f, const HilbertSpace& space,
                                  const Operator& hamiltonian) {
  return make_generator(p, f, space, hamiltonian).apply(rho);
}

/// Tr(O ρ) for sparse O.
inline cplx expect(const Operator& op, const DensityMatrix& rho) {
  cplx acc{};
  for (Eigen::Index k = 0; k < op.outerSize(); ++k) {
    for (Operator::InnerIterator it(op, k); it; ++it) {
      acc += it.value() * rho(it.col(), it.row());
    }
  }
  return acc;
}

struct Expectations {
  double n = 0.0;
  cplx rza{};
  cplx a_mean{};
  double rz = 0.0;
  double tail_pop = 0.0;
  double trace = 0.0;

  MomentState moments() const { return {n, rza, a_mean, rz}; }
};

inline Expectations expectations(const DensityMatrix& rho, const OperatorSet& ops) {
  Expectations e;
  e.n = expect(ops.number, rho).real();
  e.rza = expect(ops.rz_a, rho);
  e.a_mean = expect(ops.a, rho);
  e.rz = expect(ops.r_z, rho).real();
  e.tail_pop = expect(ops.tail_projector, rho).real();
  e.trace = rho.trace().real();
  return e;
}

/// |−⟩ ⊗ |vac⟩.
inline DensityMatrix ground_state(const HilbertSpace& space) {
  DensityMatrix rho = DensityMatrix::Zero(space.dim(), space.dim());
  const auto k = space.index(1, 0);
  rho(k, k) = 1.0;
  return rho;
}

/// Coherent field |α⟩ (truncated and renormalised) with the atom in |+⟩ or |−⟩.
inline DensityMatrix coherent_state(const HilbertSpace& space, cplx alpha, bool upper) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dim());
  const int atom = upper ? 0 : 1;
  cplx amp = std::exp(-0.5 * std::norm(alpha));
  for (int k = 0; k < space.fock_dim; ++k) {
    psi(space.index(atom, k)) = amp;
    amp *= alpha / std::sqrt(static_cast<double>(k + 1));
  }
  psi.normalize();
  return psi * psi.adjoint();
}

/// Largest step the fixed-step integrator accepts for a given Hamiltonian.
inline double max_oracle_dt(const SystemParams& p, const DressedFrame& f,
                            HamiltonianChoice choice) {
  double scale = std::max({p.kappa, f.gamma_cap_0, f.gamma_cap_plus, f.gamma_cap_minus,
                           p.g, p.epsilon, std::abs(p.delta_c)});
  if (choice == HamiltonianChoice::full) scale = std::max(scale, f.omega_bar);
  return 0.05 / scale;
}

struct OracleTrajectory {
  std::vector<double> times;
  std::vector<Expectations> samples;
};

/// Fixed-step RK4 propagation of ρ. The secular choice runs in the frame
/// co-rotating with Ω̄ R_z, so its step is not limited by Ω̄.
inline OracleTrajectory evolve_rho(const DensityMatrix& rho0, const SystemParams& p,
                                   const DressedFrame& f, const HilbertSpace& space,
                                   double t_final, double dt, HamiltonianChoice choice,
                                   std::size_t record_every = 1) {
  if (!(t_final > 0.0) || !(dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "evolve_rho needs t_final > 0 and dt > 0");
  }
  if (rho0.rows() != space.dim() || rho0.cols() != space.dim()) {
    throw Error(ErrorCode::InvalidArgument, "initial state has the wrong dimension");
  }
  const double dt_max = max_oracle_dt(p, f, choice);
  if (dt > dt_max * (1.0 + 1e-12)) {
    throw Error(ErrorCode::InvalidArgument,
                "dt " + csv::format_double(dt) + " exceeds the stable step " +
                    csv::format_double(dt_max));
  }
  if (record_every == 0) record_every = 1;

  const OperatorSet ops = make_operators(space);
  const Operator h = choice == HamiltonianChoice::secular
                         ? build_h0(p, f, space, /*include_splitting=*/false)
                         : build_h_full(p, f, space);
  const LindbladGenerator gen(h, dissipation_channels(f, p, ops));

  OracleTrajectory traj;
  auto record = [&](double t, const DensityMatrix& rho) {
    Expectations e = expectations(rho, ops);
    if (e.tail_pop > space.tail_tolerance) {
      throw Error(ErrorCode::TruncationBreached,
                  "population of the top Fock level reached " +
                      csv::format_double(e.tail_pop) + " at t = " + csv::format_double(t));
    }
    traj.times.push_back(t);
    traj.samples.push_back(e);
  };

  // Hermitian inputs stay Hermitian under the generator, so the cheaper
  // product form applies at every stage.
  const bool hermitian = (rho0 - rho0.adjoint()).cwiseAbs().maxCoeff() <= 1e-12;
  auto step_rhs = [&](const DensityMatrix& r) {
    return hermitian ? gen.apply_hermitian(r) : gen.apply(r);
  };

  DensityMatrix rho = hermitian ? DensityMatrix(0.5 * (rho0 + rho0.adjoint())) : rho0;
  record(0.0, rho);
  const std::size_t steps = step_count(t_final, dt);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t0 = static_cast<double>(k) * dt;
    const double h_step = (k + 1 == steps) ? t_final - t0 : dt;
    const DensityMatrix k1 = step_rhs(rho);
    const DensityMatrix k2 = step_rhs(rho + (0.5 * h_step) * k1);
    const DensityMatrix k3 = step_rhs(rho + (0.5 * h_step) * k2);
    const DensityMatrix k4 = step_rhs(rho + h_step * k3);
    rho += (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if ((k + 1) % record_every == 0 || k + 1 == steps) {
      if (!rho.allFinite()) {
        throw Error(ErrorCode::NonFiniteState, "density matrix overflowed");
      }
      record(k + 1 == steps ? t_final : t0 + h_step, rho);
    }
  }
  return traj;
}

enum class SteadyMethod { linear_solve, time_evolution };

struct SteadyOptions {
  SteadyMethod method = SteadyMethod::linear_solve;
  double change_tolerance = 1e-9;  // per 1/κ of evolution
  double horizon = 1e5;            // in units of 1/κ
};

namespace detail {

inline DensityMatrix steady_linear(const LindbladGenerator& gen, Eigen::Index d) {
  const Operator l = gen.superoperator();
  std::vector<Eigen::Triplet<cplx>> trips;
  trips.reserve(static_cast<std::size_t>(l.nonZeros() + d));
  // Row 0 (the ρ₀₀ equation) is linearly dependent on the other diagonal
  // rows; it is replaced by the normalisation Tr ρ = 1.
  for (Eigen::Index k = 0; k < l.outerSize(); ++k) {
    for (Operator::InnerIterator it(l, k); it; ++it) {
      if (it.row() != 0) trips.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (Eigen::Index i = 0; i < d; ++i) trips.emplace_back(0, i * d + i, 1.0);
  Operator system(d * d, d * d);
  system.setFromTriplets(trips.begin(), trips.end());
  system.makeCompressed();

  Eigen::SparseLU<Operator, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(system);
  if (lu.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "steady-state Liouvillian is singular");
  }
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(d * d);
  rhs(0) = 1.0;
  const Eigen::VectorXcd v = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !v.allFinite()) {
    throw Error(ErrorCode::NoConvergence, "steady-state solve failed");
  }
  DensityMatrix rho = Eigen::Map<const DensityMatrix>(v.data(), d, d);
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace detail

/// Long-time limit of the master equation, either from the stacked linear
/// fixed-point system or by propagating until the tracked expectations stall.
inline DensityMatrix steady_rho(const SystemParams& p, const DressedFrame& f,
                                const HilbertSpace& space, HamiltonianChoice choice,
                                const SteadyOptions& opts = {}) {
  if (!(p.kappa > 0.0)) throw Error(ErrorCode::SingularCavity, "kappa must be > 0");
  if (f.relaxation_sum() == 0.0) {
    throw Error(ErrorCode::ZeroRelaxation, "dressed relaxation rates are both zero");
  }
  const OperatorSet ops = make_operators(space);

  if (opts.method == SteadyMethod::linear_solve) {
    const Operator h = choice == HamiltonianChoice::secular ? build_h0(p, f, space)
                                                            : build_h_full(p, f, space);
    return detail::steady_linear(LindbladGenerator(h, dissipation_channels(f, p, ops)),
                                 space.dim());
  }

  const Operator h = choice == HamiltonianChoice::secular
                         ? build_h0(p, f, space, /*include_splitting=*/false)
                         : build_h_full(p, f, space);
  const LindbladGenerator gen(h, dissipation_channels(f, p, ops));
  const double dt_max = max_oracle_dt(p, f, choice);
  const double chunk = 1.0 / p.kappa;
  const auto steps = static_cast<std::size_t>(std::ceil(chunk / dt_max));
  const double dt = chunk / static_cast<double>(steps);

  DensityMatrix rho = ground_state(space);
  MomentState last = expectations(rho, ops).moments();
  for (double t = 0.0; t < opts.horizon * chunk; t += chunk) {
    for (std::size_t k = 0; k < steps; ++k) {
      const DensityMatrix k1 = gen.apply_hermitian(rho);
      const DensityMatrix k2 = gen.apply_hermitian(rho + (0.5 * dt) * k1);
      const DensityMatrix k3 = gen.apply_hermitian(rho + (0.5 * dt) * k2);
      const DensityMatrix k4 = gen.apply_hermitian(rho + dt * k3);
      rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const MomentState now = expectations(rho, ops).moments();
    if (max_abs_diff(now, last) < opts.change_tolerance) {
      return 0.5 * (rho + DensityMatrix(rho.adjoint()));
    }
    last = now;
  }
  throw Error(ErrorCode::NoConvergence, "oracle evolution did not settle within the horizon");
}

/// Steady state on a Fock space grown until the truncation no longer matters.
struct SteadySolution {
  HilbertSpace space;
  DensityMatrix rho;
  Expectations values;
};

/// Starts from the size suggested by the mean photon number and enlarges
/// the space by half until the top-level population is below the tolerance
/// and ⟨a†a⟩ moved by less than `n_rel_tolerance` over the last enlargement.
/// Near interference minima the mean is small while the field distribution
/// is broad and slowly decaying, so neither the mean nor the tail alone
/// is a safe stopping rule.
inline SteadySolution steady_auto(const SystemParams& p, const DressedFrame& f,
                                  HamiltonianChoice choice, double target_tail,
                                  int cap = kDefaultFockCap, double n_rel_tolerance = 1e-9,
                                  const SteadyOptions& opts = {}) {
  SteadySolution s;
  s.space = build_space(p, f, target_tail, cap);
  double previous_n = std::numeric_limits<double>::quiet_NaN();
  while (true) {
    s.rho = steady_rho(p, f, s.space, choice, opts);
    s.values = expectations(s.rho, make_operators(s.space));
    const bool tail_ok = s.values.tail_pop <= s.space.tail_tolerance;
    const bool settled = std::abs(s.values.n - previous_n) <=
                         n_rel_tolerance * std::max(s.values.n, 1e-300);
    if (tail_ok && settled) return s;
    if (s.space.fock_dim >= cap) {
      throw Error(ErrorCode::TruncationBreached,
                  "photon number not converged in Fock space (top level population " +
                      csv::format_double(s.values.tail_pop) + ") at the cap " +
                      std::to_string(cap) + "; reduce epsilon");
    }
    previous_n = s.values.n;
    s.space.fock_dim = std::min(cap, s.space.fock_dim + (s.space.fock_dim + 1) / 2);
  }
}

inline void write_trajectory_csv(std::ostream& out, const OracleTrajectory& traj) {
  using csv::format_double;
  csv::write_row(out, {"t", "n", "re_a", "im_a", "re_rza", "im_rza", "rz", "tail_pop"});
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const auto& e = traj.samples[k];
    csv::write_row(out, {format_double(traj.times[k]), format_double(e.n),
                         format_double(e.a_mean.real()), format_double(e.a_mean.imag()),
                         format_double(e.rza.real()), format_double(e.rza.imag()),
                         format_double(e.rz), format_double(e.tail_pop)});
  }
}

}  // namespace cavint::oracle
