// Copyright 2026 The hqcdfs Authors
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

#include <bit>
#include <thread>

#include "hqcdfs/gates.hpp"
#include "hqcdfs/random.hpp"
#include "hqcdfs/spectral.hpp"

// Collective dephasing: every qubit couples to the environment through
// J = sum_k Z_k. Two independent stand-ins for the unspecified bath:
//   - PhaseEnsemble: quasi-static random collective phase e^{-i phi J},
//     phi ~ N(0, strength^2), Monte Carlo averaged;
//   - Lindblad: Markovian generator kappa (2 J rho J - {J^2, rho}).
// With phase variance 2*kappa*t the two give identical single-qubit
// coherence decay e^{-4 kappa t}.

namespace hqcdfs {

constexpr std::uint64_t kDefaultSeed = 42;

struct NoiseConfig {
  enum class Model { PhaseEnsemble, Lindblad };
  Model model = Model::Lindblad;
  double strength = 0.0;  // PhaseEnsemble: std dev of phi; Lindblad: rate kappa
  int n_samples = 512;    // ensemble size
  double dt = 0.0;        // integrator step; 0 selects tau/2000
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;        // >1 parallelizes the ensemble (chunked, deterministic)

  void validate() const {
    if (strength < 0.0) throw std::invalid_argument("noise strength must be >= 0");
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (dt < 0.0) throw std::invalid_argument("dt must be >= 0");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  }
};

using DensityMatrix = ComplexMatrix;

inline void validate_density(const DensityMatrix& rho, double tol_herm = Tolerances{}.herm) {
  if (!rho.square()) throw std::invalid_argument("density matrix must be square");
  if (hermiticity_residual(rho) > tol_herm)
    throw std::invalid_argument("density matrix not Hermitian");
  if (std::abs(trace(rho) - cx(1.0)) > 1e-9)
    throw std::invalid_argument("density matrix trace must be 1");
  Spectrum s = hermitian_eig(rho, tol_herm);
  if (s.eigenvalues.front() < -1e-9)
    throw std::invalid_argument("density matrix not positive semidefinite");
}

inline int qubit_count_of_dim(int dim) {
  int n = std::countr_zero(unsigned(dim));
  if (dim <= 0 || (1 << n) != dim || n > kMaxQubits)
    throw std::invalid_argument("dimension is not a valid qubit-register size");
  return n;
}

/// Diagonal of J = sum_k Z_k in the computational basis: n - 2 * popcount.
inline std::vector<double> collective_z_diagonal(int n_qubits) {
  check_qubit_count(n_qubits);
  std::vector<double> j(std::size_t(1) << n_qubits);
  for (int m = 0; m < int(j.size()); ++m)
    j[m] = double(n_qubits - 2 * std::popcount(unsigned(m)));
  return j;
}

/// E_phi[e^{-i phi J} rho e^{+i phi J}], phi ~ N(0, strength^2) from the
/// seeded generator. Exactly trace preserving (diagonal conjugation).
inline DensityMatrix collective_phase_channel(const DensityMatrix& rho,
                                              const NoiseConfig& config) {
  config.validate();
  if (config.model != NoiseConfig::Model::PhaseEnsemble)
    throw std::invalid_argument("collective_phase_channel: config.model mismatch");
  const int dim = rho.rows;
  const int n_qubits = qubit_count_of_dim(dim);
  const std::vector<double> j = collective_z_diagonal(n_qubits);

  // Per-entry dephasing factor E[e^{-i phi (j_m - j_n)}]. Sample s draws
  // from its own generator seeded by mix_seed(seed, s), so the values do
  // not depend on how samples are chunked across workers; only the partial
  // sum bracketing does (sequential mode, workers = 1, is the reference).
  const int s_total = config.n_samples;
  const int workers = std::min(config.workers, s_total);
  const int chunk = (s_total + workers - 1) / workers;
  std::vector<ComplexMatrix> partial(workers, ComplexMatrix(dim, dim));

  auto run_chunk = [&](int w) {
    const int s_begin = w * chunk;
    const int s_end = std::min(s_total, s_begin + chunk);
    ComplexMatrix& acc = partial[w];
    for (int s = s_begin; s < s_end; ++s) {
      Rng rng(mix_seed(config.seed, std::uint64_t(s)));
      const double phi = config.strength * rng.gaussian();
      for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n)
          acc(m, n) += std::exp(cx(0.0, -phi * (j[m] - j[n])));
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& t : pool) t.join();
  }

  ComplexMatrix factor(dim, dim);
  for (int w = 0; w < workers; ++w) factor = add(factor, partial[w]);
  DensityMatrix out(dim, dim);
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) out(m, n) = rho(m, n) * factor(m, n) / double(s_total);
  return out;
}

namespace detail {

// d rho / dt = -i [H, rho] + kappa (2 J rho J - {J^2, rho}). With diagonal J
// the dissipator is entrywise: -kappa (j_m - j_n)^2 rho_mn. For Hermitian
// stage inputs the commutator needs a single product, [H, rho] = B - B^dag.
inline ComplexMatrix lindblad_rhs(const ComplexMatrix& h, const std::vector<double>& j,
                                  double kappa, const ComplexMatrix& rho) {
  const int dim = rho.rows;
  ComplexMatrix b = matmul(h, rho);
  ComplexMatrix out(dim, dim);
  const cx mi(0.0, -1.0);
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) {
      const double d = j[m] - j[n];
      out(m, n) = mi * (b(m, n) - std::conj(b(n, m))) - kappa * d * d * rho(m, n);
    }
  return out;
}

inline ComplexMatrix axpy(const ComplexMatrix& x, double a, const ComplexMatrix& y) {
  ComplexMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.data.size(); ++i) r.data[i] = x.data[i] + a * y.data[i];
  return r;
}

}  // namespace detail

/// Classical RK4 integration of the collective-dephasing master equation
/// over [0, t_final]. Throws if trace or positivity drifts past 1e-6.
inline DensityMatrix lindblad_rk4(const DensityMatrix& rho0, const ComplexMatrix& h,
                                  double kappa, double t_final, double dt) {
  if (!rho0.square() || rho0.rows != h.rows)
    throw std::invalid_argument("lindblad_rk4: dimension mismatch");
  if (kappa < 0.0) throw std::invalid_argument("lindblad_rk4: kappa must be >= 0");
  if (dt <= 0.0) throw std::invalid_argument("lindblad_rk4: dt must be positive");
  const int n_qubits = qubit_count_of_dim(rho0.rows);
  const std::vector<double> j = collective_z_diagonal(n_qubits);

  const int steps = std::max(1, int(std::ceil(t_final / dt - 1e-12)));
  const double h_step = t_final / double(steps);
  const double trace0 = trace(rho0).real();

  ComplexMatrix rho = rho0;
  for (int s = 0; s < steps; ++s) {
    ComplexMatrix k1 = detail::lindblad_rhs(h, j, kappa, rho);
    ComplexMatrix k2 = detail::lindblad_rhs(h, j, kappa, detail::axpy(rho, h_step / 2, k1));
    ComplexMatrix k3 = detail::lindblad_rhs(h, j, kappa, detail::axpy(rho, h_step / 2, k2));
    ComplexMatrix k4 = detail::lindblad_rhs(h, j, kappa, detail::axpy(rho, h_step, k3));
    for (std::size_t i = 0; i < rho.data.size(); ++i)
      rho.data[i] += (h_step / 6.0) *
                     (k1.data[i] + 2.0 * k2.data[i] + 2.0 * k3.data[i] + k4.data[i]);

    const double drift = std::abs(trace(rho).real() - trace0);
    double min_diag = 0.0;
    for (int m = 0; m < rho.rows; ++m) min_diag = std::min(min_diag, rho(m, m).real());
    if (drift > 1e-6 || min_diag < -1e-6)
      throw std::runtime_error("lindblad_rk4: step instability (trace drift " +
                               std::to_string(drift) + ", min diagonal " +
                               std::to_string(min_diag) + " at step " + std::to_string(s) +
                               "); reduce dt");
  }
  return rho;
}

/// Step-doubling self-check: max-norm distance between integrations at dt
/// and dt/2. Stays below 1e-8 when dt resolves the dynamics.
inline double lindblad_step_doubling_residual(const DensityMatrix& rho0, const ComplexMatrix& h,
                                              double kappa, double t_final, double dt) {
  return max_abs_diff(lindblad_rk4(rho0, h, kappa, t_final, dt),
                      lindblad_rk4(rho0, h, kappa, t_final, dt / 2));
}

/// Closed form for H = 0: rho_mn(t) = rho_mn(0) e^{-kappa (j_m - j_n)^2 t}.
/// Independent oracle for the integrator.
inline DensityMatrix dephasing_closed_form(const DensityMatrix& rho0, double kappa, double t) {
  const int n_qubits = qubit_count_of_dim(rho0.rows);
  const std::vector<double> j = collective_z_diagonal(n_qubits);
  DensityMatrix out = rho0;
  for (int m = 0; m < out.rows; ++m)
    for (int n = 0; n < out.cols; ++n) {
      const double d = j[m] - j[n];
      out(m, n) *= std::exp(-kappa * d * d * t);
    }
  return out;
}

/// Fidelity <psi_ideal| rho(tau) |psi_ideal> of the gate run under noise,
/// for a pure logical input state.
inline double noisy_gate_fidelity(const GateInstance& inst, const DfsEncoding& encoding,
                                  const CVector& psi_logical, const NoiseConfig& config) {
  config.validate();
  if (!inst.minimal_register())
    throw std::invalid_argument("noisy_gate_fidelity: minimal register only");
  if (encoding.n_logical != inst.encoding.n_logical)
    throw std::invalid_argument("noisy_gate_fidelity: encoding mismatch");
  CVector psi = embed_logical_state(encoding, psi_logical);
  const double nrm = vnorm(psi);
  if (std::abs(nrm - 1.0) > 1e-9)
    throw std::invalid_argument("noisy_gate_fidelity: state must be normalized");

  const CVector psi_ideal = matvec(inst.u_core, psi);
  DensityMatrix rho = outer(psi, psi);
  if (config.model == NoiseConfig::Model::Lindblad) {
    const double dt = config.dt > 0.0 ? config.dt : inst.tau / 2000.0;
    rho = lindblad_rk4(rho, inst.h_core, config.strength, inst.tau, dt);
  } else {
    // the kick commutes with the gate Hamiltonian, so applying it after the
    // closed-system evolution is exact
    DensityMatrix rho_out = matmul(matmul(inst.u_core, rho), dagger(inst.u_core));
    rho = collective_phase_channel(rho_out, config);
  }
  return std::clamp(std::real(vdot(psi_ideal, matvec(rho, psi_ideal))), 0.0, 1.0);
}

/// Unencoded reference gate: a bare two-qubit controlled-NOT generated over
/// the same pulse time, with the superposition input (|0>+|1>)|0>/sqrt(2)
/// whose ideal output is a Bell state.
struct BareCnot {
  ComplexMatrix h;
  double tau = 0.0;
  CVector input;
  CVector ideal;
};

inline BareCnot bare_cnot_reference(double omega = 1.0) {
  BareCnot ref;
  ref.tau = kPi / omega;
  // H = (pi/tau) |1><1| x (I - X)/2 generates the controlled flip at t = tau
  OperatorExpr e;
  e.n_qubits = 2;
  const double g = kPi / ref.tau;
  detail::add_projected(e, 0.25 * g, {}, {{1, -1}});
  detail::add_projected(e, -0.25 * g, {{2, PauliKind::X}}, {{1, -1}});
  ref.h = compile(e);
  ref.input.assign(4, cx(0.0));
  ref.input[0b00] = 1.0 / std::numbers::sqrt2;
  ref.input[0b10] = 1.0 / std::numbers::sqrt2;
  ref.ideal = matvec(evolve(ref.h, ref.tau), ref.input);
  return ref;
}

/// Fidelity of the bare controlled-NOT under collective dephasing. The
/// input straddles two weight sectors, so this one degrades.
inline double bare_cnot_noisy_fidelity(const NoiseConfig& config, double omega = 1.0) {
  config.validate();
  const BareCnot ref = bare_cnot_reference(omega);
  DensityMatrix rho = outer(ref.input, ref.input);
  if (config.model == NoiseConfig::Model::Lindblad) {
    const double dt = config.dt > 0.0 ? config.dt : ref.tau / 2000.0;
    rho = lindblad_rk4(rho, ref.h, config.strength, ref.tau, dt);
  } else {
    // quasi-static kick applied after the pulse; enough to expose the
    // unprotected inter-sector coherence
    rho = matmul(matmul(evolve(ref.h, ref.tau), rho), dagger(evolve(ref.h, ref.tau)));
    rho = collective_phase_channel(rho, config);
  }
  return std::clamp(std::real(vdot(ref.ideal, matvec(rho, ref.ideal))), 0.0, 1.0);
}

}  // namespace hqcdfs
