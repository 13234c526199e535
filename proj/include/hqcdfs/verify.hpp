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

#include "hqcdfs/gates.hpp"

// Machine checks for the two holonomy conditions, subspace invariance, and
// gate equivalence. Every check returns a residual; pass/fail is residual
// against tolerance, nothing else.

namespace hqcdfs {

struct HolonomyCheckConfig {
  int n_time_samples = 64;  // sampling of the geometric condition over [0, tau]
  double tolerance = 1e-8;

  void validate() const {
    if (n_time_samples < 2) throw std::invalid_argument("n_time_samples must be >= 2");
    if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
  }
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline CheckResult make_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual <= tolerance};
}

struct VerificationReport {
  std::string gate;
  std::vector<CheckResult> checks;
  double fidelity = 0.0;
  double phase_distance = 0.0;
  bool logical_unitary = false;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const CheckResult& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Cyclic-evolution residual ||U P U^dag - P||_max for P the subspace
/// projector. Zero iff the subspace returns to itself after the loop.
inline double check_cyclic(const ComplexMatrix& u_tau, const Subspace& s) {
  if (u_tau.rows != s.ambient_dim || !u_tau.square())
    throw std::invalid_argument("check_cyclic: dimension mismatch");
  ComplexMatrix p = s.projector();
  return max_abs_diff(matmul(matmul(u_tau, p), dagger(u_tau)), p);
}

/// Geometric-evolution residual: max over sampled t in [0, tau] and basis
/// pairs (m, l) of |<psi_m(t)|H|psi_l(t)>|, with |psi(t)> = e^{-iHt}|psi(0)>.
/// For constant H the samples coincide; they are still taken to keep the
/// check meaningful for piecewise-constant schedules.
inline double check_parallel_transport(const ComplexMatrix& h, const Subspace& s, double tau,
                                       const HolonomyCheckConfig& config = {}) {
  config.validate();
  if (h.rows != s.ambient_dim || !h.square())
    throw std::invalid_argument("check_parallel_transport: dimension mismatch");
  Propagator prop(h);
  double worst = 0.0;
  const int n = config.n_time_samples;
  for (int i = 0; i <= n; ++i) {
    const double t = tau * double(i) / double(n);
    ComplexMatrix bt = prop.apply(t, s.basis);
    ComplexMatrix g = matmul(dagger(bt), matmul(h, bt));
    worst = std::max(worst, matrix_norm_max(g));
  }
  return worst;
}

/// Dynamical-closure residual ||(I - P) H P||_max: zero iff H never maps the
/// subspace out of itself.
inline double check_dfs_invariance(const ComplexMatrix& h, const Subspace& d) {
  if (h.rows != d.ambient_dim || !h.square())
    throw std::invalid_argument("check_dfs_invariance: dimension mismatch");
  ComplexMatrix p = d.projector();
  ComplexMatrix hp = matmul(h, p);
  return max_abs_diff(hp, matmul(p, hp));
}

struct GateFidelity {
  double fidelity = 0.0;        // |tr(V^dag U)| / d
  double phase_distance = 0.0;  // ||U - e^{i phi} V||_max at phi = arg tr(V^dag U)
  bool inputs_unitary = false;
};

/// Global-phase-insensitive comparison of two gates.
inline GateFidelity gate_fidelity(const ComplexMatrix& u, const ComplexMatrix& v,
                                  double tol_unit = Tolerances{}.unit) {
  if (u.rows != v.rows || u.cols != v.cols || !u.square())
    throw std::invalid_argument("gate_fidelity: dimension mismatch");
  GateFidelity out;
  out.inputs_unitary = is_unitary(u, tol_unit) && is_unitary(v, tol_unit);
  const cx tr = trace(matmul(dagger(v), u));
  out.fidelity = std::abs(tr) / double(u.rows);
  const cx phase = std::abs(tr) > 0.0 ? tr / std::abs(tr) : cx(1.0);
  out.phase_distance = max_abs_diff(u, scale(phase, v));
  return out;
}

/// Run the full check battery on one gate instance. All checks act on the
/// active pairs (the full register for minimal instances); the fidelity
/// compares the full logical action against the analytic target.
inline VerificationReport verify_gate(const GateInstance& inst,
                                      const HolonomyCheckConfig& config = {}) {
  config.validate();
  VerificationReport rep;
  rep.gate = inst.name();

  const Subspace logical = logical_subspace(inst.core_encoding);
  const Subspace dfs = gate_dfs(inst.core_encoding);

  rep.checks.push_back(
      make_check("unitarity", unitarity_residual(inst.u_core), Tolerances{}.unit));
  rep.checks.push_back(
      make_check("cyclic", check_cyclic(inst.u_core, logical), config.tolerance));
  rep.checks.push_back(make_check(
      "parallel_transport", check_parallel_transport(inst.h_core, logical, inst.tau, config),
      config.tolerance));
  rep.checks.push_back(
      make_check("dfs_invariance", check_dfs_invariance(inst.h_core, dfs), config.tolerance));

  GateFidelity f = gate_fidelity(inst.u_logical, inst.target);
  rep.fidelity = f.fidelity;
  rep.phase_distance = f.phase_distance;
  rep.logical_unitary = is_unitary(inst.u_logical, 10.0 * Tolerances{}.unit);
  rep.checks.push_back(
      make_check("gate_fidelity", std::max(0.0, 1.0 - f.fidelity), config.tolerance));
  return rep;
}

}  // namespace hqcdfs
