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

#include <numbers>
#include <string>

#include "hqcdfs/dfs.hpp"
#include "hqcdfs/pauli.hpp"
#include "hqcdfs/spectral.hpp"

// Controlled-gate Hamiltonians on pair-encoded logical qubits. Each gate is
// a Lambda system: one ancilla level coupled to dressed logical states, a
// pi pulse around the loop imprints the geometric phases.

namespace hqcdfs {

constexpr double kPi = std::numbers::pi;

enum class GateKind { C1U, CNOT, C2U, Toffoli, Fredkin };

inline int gate_arity(GateKind kind) {
  return (kind == GateKind::C1U || kind == GateKind::CNOT) ? 2 : 3;
}

inline std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::C1U: return "c1u";
    case GateKind::CNOT: return "cnot";
    case GateKind::C2U: return "c2u";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::Fredkin: return "fredkin";
  }
  return "?";
}

/// Controllable angles of the U-family gates. Couplings are derived:
///   Delta_1 = -W sin(xi),            Delta_2 = -W sin(gamma),
///   W_1 = W cos(xi) cos(a/2),        W_3 = -W cos(gamma) cos(a/2),
///   W_2 = W e^{ib} cos(xi) sin(a/2), W_4 = W e^{ib} cos(gamma) sin(a/2).
struct GateParams {
  double omega = 1.0;  // overall coupling scale (inverse time)
  double xi = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  double delta1() const { return -omega * std::sin(xi); }
  double delta2() const { return -omega * std::sin(gamma); }
  cx omega1() const { return omega * std::cos(xi) * std::cos(alpha / 2); }
  cx omega2() const {
    return omega * std::exp(cx(0, beta)) * std::cos(xi) * std::sin(alpha / 2);
  }
  cx omega3() const { return -omega * std::cos(gamma) * std::cos(alpha / 2); }
  cx omega4() const {
    return omega * std::exp(cx(0, beta)) * std::cos(gamma) * std::sin(alpha / 2);
  }
};

struct FredkinParams {
  double eta = 1.0;  // coupling of the exchange drive (inverse time)
};

/// Gate phases. Raw values come straight from the defining relations
///   delta - theta/2 = pi + pi sin(xi),  delta + theta/2 = pi + pi sin(gamma);
/// delta and theta are the canonical representative with both angles in
/// (-pi, pi] and both relations still holding mod 2pi.
struct PhaseAngles {
  double delta_raw = 0.0;
  double theta_raw = 0.0;
  double delta = 0.0;
  double theta = 0.0;
};

/// Reduce to (-pi, pi].
inline double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

inline PhaseAngles phase_angles(const GateParams& p) {
  const double a = kPi + kPi * std::sin(p.xi);
  const double b = kPi + kPi * std::sin(p.gamma);
  PhaseAngles out;
  out.delta_raw = 0.5 * (a + b);
  out.theta_raw = b - a;
  out.theta = wrap_angle(out.theta_raw);
  // shifting theta by 2pi*k keeps the relations only if delta shifts by pi*k
  const long k = std::lround((out.theta - out.theta_raw) / (2.0 * kPi));
  out.delta = wrap_angle(out.delta_raw + kPi * double(k));
  return out;
}

/// Invert the phase relations: angles (xi, gamma) realizing given (delta,
/// theta). The branch with xi, gamma in [-pi/2, pi/2] is returned.
inline GateParams params_from_phases(double delta, double theta, double alpha, double beta,
                                     double omega = 1.0) {
  auto to_sine = [](double x) {
    double a = x - 2.0 * kPi * std::floor(x / (2.0 * kPi));  // [0, 2pi)
    return std::clamp((a - kPi) / kPi, -1.0, 1.0);
  };
  GateParams p;
  p.omega = omega;
  p.xi = std::asin(to_sine(delta - theta / 2));
  p.gamma = std::asin(to_sine(delta + theta / 2));
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

/// Logical-qubit roles of one gate instance. Two-qubit gates use control m
/// and target n; three-qubit controlled-U uses controls m, n and target l;
/// the controlled swap uses control m and targets n, l.
struct Placement {
  int m = 1;
  int n = 2;
  int l = 3;
  int n_logical = 2;

  static Placement two(int m, int n, int n_logical) { return {m, n, 3, n_logical}; }
  static Placement three(int m, int n, int l, int n_logical) { return {m, n, l, n_logical}; }
};

inline void validate_placement(GateKind kind, const Placement& pl) {
  const int arity = gate_arity(kind);
  if (pl.n_logical < arity || pl.n_logical > 6)
    throw std::invalid_argument("placement: n_logical out of range");
  auto in_range = [&](int k) { return k >= 1 && k <= pl.n_logical; };
  if (!in_range(pl.m) || !in_range(pl.n) || pl.m == pl.n)
    throw std::invalid_argument("placement: invalid role indices");
  if (arity == 3 && (!in_range(pl.l) || pl.l == pl.m || pl.l == pl.n))
    throw std::invalid_argument("placement: invalid role indices");
}

namespace detail {

inline void add_term(OperatorExpr& e, cx coeff, std::vector<PauliFactor> factors) {
  e.terms.push_back({coeff, std::move(factors)});
}

// Append coeff * string * prod_k (I + sign_k Z_{q_k}), expanded.
inline void add_projected(OperatorExpr& e, cx coeff, const std::vector<PauliFactor>& factors,
                          const std::vector<std::pair<int, int>>& projectors) {
  const int k = int(projectors.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    cx c = coeff;
    std::vector<PauliFactor> f = factors;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) {
        c *= double(projectors[i].second);
        f.push_back({projectors[i].first, PauliKind::Z});
      }
    add_term(e, c, std::move(f));
  }
}

// coeff * s-_i s+_j + h.c., under the same projector product
inline void add_exchange(OperatorExpr& e, cx coeff, int i, int j,
                         const std::vector<std::pair<int, int>>& projectors) {
  add_projected(e, coeff, {{i, PauliKind::SigmaMinus}, {j, PauliKind::SigmaPlus}}, projectors);
  add_projected(e, std::conj(coeff), {{i, PauliKind::SigmaPlus}, {j, PauliKind::SigmaMinus}},
                projectors);
}

}  // namespace detail

/// Two-qubit controlled-U Hamiltonian: control pair (2m-1, 2m), target pair
/// (2n-1, 2n).
inline OperatorExpr h1_expr(const GateParams& p, const Placement& pl) {
  validate_placement(GateKind::C1U, pl);
  const int c1 = 2 * pl.m - 1, c2 = 2 * pl.m;
  const int t1 = 2 * pl.n - 1, t2 = 2 * pl.n;
  OperatorExpr e;
  e.n_qubits = 2 * pl.n_logical;
  // control pair |00>: detuned ancilla level plus exchange toward the target
  detail::add_projected(e, 0.5 * p.delta1(), {}, {{c1, +1}, {c2, +1}});
  detail::add_exchange(e, 0.5 * p.omega1(), c1, t1, {{c2, +1}});
  detail::add_exchange(e, 0.5 * p.omega2(), c1, t2, {{c2, +1}});
  // control pair |11>: the conjugate branch
  detail::add_projected(e, 0.5 * p.delta2(), {}, {{c1, -1}, {c2, -1}});
  detail::add_exchange(e, 0.5 * p.omega3(), c2, t1, {{c1, -1}});
  detail::add_exchange(e, 0.5 * p.omega4(), c2, t2, {{c1, -1}});
  return e;
}

/// Three-qubit controlled-U Hamiltonian: controls m, n, target l.
inline OperatorExpr h2_expr(const GateParams& p, const Placement& pl) {
  validate_placement(GateKind::C2U, pl);
  const int a1 = 2 * pl.m - 1;
  const int b1 = 2 * pl.n - 1, b2 = 2 * pl.n;
  const int t1 = 2 * pl.l - 1, t2 = 2 * pl.l;
  OperatorExpr e;
  e.n_qubits = 2 * pl.n_logical;
  detail::add_projected(e, 0.25 * p.delta1(), {}, {{a1, -1}, {b2, +1}, {b1, +1}});
  detail::add_exchange(e, 0.25 * p.omega1(), b1, t1, {{a1, -1}, {b2, +1}});
  detail::add_exchange(e, 0.25 * p.omega2(), b1, t2, {{a1, -1}, {b2, +1}});
  detail::add_projected(e, 0.25 * p.delta2(), {}, {{a1, -1}, {b1, -1}, {b2, -1}});
  detail::add_exchange(e, 0.25 * p.omega3(), b2, t1, {{a1, -1}, {b1, -1}});
  detail::add_exchange(e, 0.25 * p.omega4(), b2, t2, {{a1, -1}, {b1, -1}});
  return e;
}

/// Controlled-swap Hamiltonian: control m, targets n, l.
inline OperatorExpr h3_expr(const FredkinParams& p, const Placement& pl) {
  validate_placement(GateKind::Fredkin, pl);
  const int a1 = 2 * pl.m - 1;
  const int n1 = 2 * pl.n - 1, n2 = 2 * pl.n;
  const int l1 = 2 * pl.l - 1, l2 = 2 * pl.l;
  OperatorExpr e;
  e.n_qubits = 2 * pl.n_logical;
  const double g = p.eta / (2.0 * std::numbers::sqrt2);
  detail::add_exchange(e, g, n1, l1, {{a1, -1}});
  detail::add_exchange(e, -g, n2, l2, {{a1, -1}});
  return e;
}

inline ComplexMatrix build_h1(const GateParams& p, const Placement& pl) {
  return compile(h1_expr(p, pl));
}
inline ComplexMatrix build_h2(const GateParams& p, const Placement& pl) {
  return compile(h2_expr(p, pl));
}
inline ComplexMatrix build_h3(const FredkinParams& p, const Placement& pl) {
  return compile(h3_expr(p, pl));
}

/// Evolution period fixed by the pulse-area condition.
struct Pulse {
  double tau = 0.0;
};

/// W tau = pi
inline Pulse pi_pulse(double omega) {
  if (omega <= 0.0) throw std::invalid_argument("pi_pulse: omega must be positive");
  return {kPi / omega};
}

/// eta tau = pi / sqrt(2)
inline Pulse swap_pulse(double eta) {
  if (eta <= 0.0) throw std::invalid_argument("swap_pulse: eta must be positive");
  return {kPi / (std::numbers::sqrt2 * eta)};
}

inline ComplexMatrix run_gate(const ComplexMatrix& h, const Pulse& pulse) {
  return evolve(h, pulse.tau);
}

// ---------------------------------------------------------------------------
// Analytic targets
// ---------------------------------------------------------------------------

/// U = e^{i(delta-theta/2)}|+><+| + e^{i(delta+theta/2)}|-><-| in the
/// {|0>_L, |1>_L} basis.
inline ComplexMatrix target_u(double delta, double theta, double alpha, double beta) {
  const cx eib = std::exp(cx(0, beta));
  const double ca = std::cos(alpha / 2), sa = std::sin(alpha / 2);
  const CVector plus = {ca, eib * sa};
  const CVector minus = {std::conj(eib) * sa, -ca};
  const cx pp = std::exp(cx(0, delta - theta / 2));
  const cx pm = std::exp(cx(0, delta + theta / 2));
  return add(scale(pp, outer(plus, plus)), scale(pm, outer(minus, minus)));
}

/// The same gate as e^{i delta} exp(-i theta/2 n.sigma) with rotation axis
/// n = (sin a cos b, sin a sin b, cos a). Kept as an independent route.
inline ComplexMatrix target_u_rotation(double delta, double theta, double alpha, double beta) {
  const double nx = std::sin(alpha) * std::cos(beta);
  const double ny = std::sin(alpha) * std::sin(beta);
  const double nz = std::cos(alpha);
  ComplexMatrix nsigma =
      add(add(scale(nx, pauli_matrix(PauliKind::X)), scale(ny, pauli_matrix(PauliKind::Y))),
          scale(nz, pauli_matrix(PauliKind::Z)));
  ComplexMatrix rot = add(scale(std::cos(theta / 2), ComplexMatrix::identity(2)),
                          scale(cx(0, -std::sin(theta / 2)), nsigma));
  return scale(std::exp(cx(0, delta)), rot);
}

namespace detail {
inline void require_unitary(const ComplexMatrix& u, const char* what) {
  if (!is_unitary(u)) throw std::invalid_argument(std::string(what) + ": input not unitary");
}
}  // namespace detail

/// Controlled gate on n_logical qubits in the binary-ascending logical
/// basis, built entry-by-entry from the role bits.
inline ComplexMatrix controlled_target(GateKind kind, const ComplexMatrix& u,
                                       const Placement& pl) {
  validate_placement(kind, pl);
  if (kind != GateKind::Fredkin) detail::require_unitary(u, "controlled_target");
  const int nl = pl.n_logical;
  const int dim = 1 << nl;
  auto bit_of = [&](int b, int k) { return (b >> (nl - k)) & 1; };
  auto with_bit = [&](int b, int k, int v) {
    return (b & ~(1 << (nl - k))) | (v << (nl - k));
  };
  ComplexMatrix t(dim, dim);
  for (int b = 0; b < dim; ++b) {
    switch (kind) {
      case GateKind::C1U:
      case GateKind::CNOT:
        if (bit_of(b, pl.m) == 0) {
          t(b, b) = 1.0;
        } else {
          int tb = bit_of(b, pl.n);
          for (int r = 0; r < 2; ++r) t(with_bit(b, pl.n, r), b) += u(r, tb);
        }
        break;
      case GateKind::C2U:
      case GateKind::Toffoli:
        if (bit_of(b, pl.m) == 0 || bit_of(b, pl.n) == 0) {
          t(b, b) = 1.0;
        } else {
          int tb = bit_of(b, pl.l);
          for (int r = 0; r < 2; ++r) t(with_bit(b, pl.l, r), b) += u(r, tb);
        }
        break;
      case GateKind::Fredkin:
        if (bit_of(b, pl.m) == 0) {
          t(b, b) = 1.0;
        } else {
          int swapped = with_bit(with_bit(b, pl.n, bit_of(b, pl.l)), pl.l, bit_of(b, pl.n));
          t(swapped, b) = 1.0;
        }
        break;
    }
  }
  return t;
}

inline ComplexMatrix target_c1u(const ComplexMatrix& u) {
  detail::require_unitary(u, "target_c1u");
  return controlled_target(GateKind::C1U, u, Placement::two(1, 2, 2));
}

inline ComplexMatrix target_c2u(const ComplexMatrix& u) {
  detail::require_unitary(u, "target_c2u");
  return controlled_target(GateKind::C2U, u, Placement::three(1, 2, 3, 3));
}

inline ComplexMatrix target_fredkin() {
  return controlled_target(GateKind::Fredkin, ComplexMatrix::identity(2),
                           Placement::three(1, 2, 3, 3));
}

// ---------------------------------------------------------------------------
// Gate instances
// ---------------------------------------------------------------------------

inline GateParams canonical_not_params(double omega = 1.0) {
  // sin(xi) = 1 so that delta - theta/2 = 2pi; gamma = 0, alpha = pi/2,
  // beta = 0 give delta = theta/2 = pi/2 and U = X.
  return {omega, kPi / 2, 0.0, kPi / 2, 0.0};
}

/// One built gate: Hamiltonian, pulse, evolution, logical action and its
/// analytic target. The evolution is computed on the qubits the gate acts
/// on (`active_qubits`); for the minimal register that is the full space.
struct GateInstance {
  GateKind kind = GateKind::CNOT;
  Placement placement;
  GateParams params;
  FredkinParams fredkin;
  PhaseAngles angles;
  double tau = 0.0;

  OperatorExpr h_expr;            // full-register Hamiltonian
  DfsEncoding encoding;           // pair encoding of the full register
  std::vector<int> active_qubits; // physical qubits the gate touches, ascending
  Placement core_placement;       // roles re-indexed to the active pairs
  DfsEncoding core_encoding;      // pair encoding of the active pairs
  ComplexMatrix h_core;           // Hamiltonian on the active pairs
  ComplexMatrix u_core;           // evolve(h_core, tau)
  ComplexMatrix u_logical;        // logical block on the full register
  ComplexMatrix target;           // analytic controlled gate

  int arity() const { return gate_arity(kind); }
  bool minimal_register() const { return placement.n_logical == arity(); }
  std::string name() const { return to_string(kind); }
};

namespace detail {

inline std::vector<int> sorted_role_pairs(GateKind kind, const Placement& pl) {
  std::vector<int> pairs = {pl.m, pl.n};
  if (gate_arity(kind) == 3) pairs.push_back(pl.l);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

inline int pair_rank(const std::vector<int>& sorted_pairs, int pair) {
  for (int i = 0; i < int(sorted_pairs.size()); ++i)
    if (sorted_pairs[i] == pair) return i + 1;
  throw std::logic_error("pair_rank: pair not active");
}

/// Logical block of the evolution assembled from the active-pair unitary:
/// spectator pairs are untouched, so each logical column is read off from
/// one column of u_core merged with the spectator bits.
inline ComplexMatrix assemble_logical(const ComplexMatrix& u_core,
                                      const std::vector<int>& active_qubits,
                                      const DfsEncoding& enc) {
  const int dl = enc.dim_logical();
  std::vector<int> logical_of(enc.dim_physical(), -1);
  for (int b = 0; b < dl; ++b) logical_of[enc.physical_index(b)] = b;
  ComplexMatrix m(dl, dl);
  for (int b = 0; b < dl; ++b) {
    const int p = enc.physical_index(b);
    for (auto [i, v] : apply_embedded(u_core, active_qubits, enc.n_physical, p)) {
      int lb = logical_of[i];
      if (lb >= 0) m(lb, b) += v;
    }
  }
  return m;
}

inline void finish_instance(GateInstance& inst) {
  inst.encoding = standard_encoding(inst.placement.n_logical);
  const auto pairs = sorted_role_pairs(inst.kind, inst.placement);
  inst.active_qubits.clear();
  for (int pr : pairs) {
    inst.active_qubits.push_back(2 * pr - 1);
    inst.active_qubits.push_back(2 * pr);
  }
  inst.core_placement = inst.placement;
  inst.core_placement.n_logical = inst.arity();
  inst.core_placement.m = pair_rank(pairs, inst.placement.m);
  inst.core_placement.n = pair_rank(pairs, inst.placement.n);
  if (inst.arity() == 3) inst.core_placement.l = pair_rank(pairs, inst.placement.l);
  inst.core_encoding = standard_encoding(inst.arity());

  if (inst.kind == GateKind::Fredkin) {
    inst.h_expr = h3_expr(inst.fredkin, inst.placement);
    inst.h_core = build_h3(inst.fredkin, inst.core_placement);
    inst.tau = swap_pulse(inst.fredkin.eta).tau;
  } else {
    const bool two = inst.arity() == 2;
    inst.h_expr = two ? h1_expr(inst.params, inst.placement)
                      : h2_expr(inst.params, inst.placement);
    inst.h_core = two ? build_h1(inst.params, inst.core_placement)
                      : build_h2(inst.params, inst.core_placement);
    inst.tau = pi_pulse(inst.params.omega).tau;
    inst.angles = phase_angles(inst.params);
  }
  inst.u_core = evolve(inst.h_core, inst.tau);
  inst.u_logical = inst.minimal_register()
                       ? extract_logical(inst.encoding, inst.u_core)
                       : assemble_logical(inst.u_core, inst.active_qubits, inst.encoding);

  if (inst.kind == GateKind::Fredkin) {
    inst.target = controlled_target(GateKind::Fredkin, ComplexMatrix::identity(2),
                                    inst.placement);
  } else {
    ComplexMatrix u = target_u(inst.angles.delta, inst.angles.theta, inst.params.alpha,
                               inst.params.beta);
    inst.target = controlled_target(inst.kind, u, inst.placement);
  }
}

inline bool params_close(const GateParams& a, const GateParams& b) {
  return std::abs(a.xi - b.xi) < 1e-12 && std::abs(a.gamma - b.gamma) < 1e-12 &&
         std::abs(a.alpha - b.alpha) < 1e-12 && std::abs(a.beta - b.beta) < 1e-12;
}

}  // namespace detail

/// Build a U-family gate (C1U, CNOT, C2U, Toffoli). CNOT and Toffoli accept
/// only their fixed parameters.
inline GateInstance make_gate(GateKind kind, const GateParams& params, const Placement& pl) {
  if (kind == GateKind::Fredkin)
    throw std::invalid_argument("make_gate: Fredkin takes FredkinParams");
  validate_placement(kind, pl);
  if ((kind == GateKind::CNOT || kind == GateKind::Toffoli) &&
      !detail::params_close(params, canonical_not_params(params.omega)))
    throw std::invalid_argument("make_gate: parameters inconsistent with the NOT gates");
  GateInstance inst;
  inst.kind = kind;
  inst.placement = pl;
  inst.params = params;
  detail::finish_instance(inst);
  return inst;
}

inline GateInstance make_gate(GateKind kind, const FredkinParams& params, const Placement& pl) {
  if (kind != GateKind::Fredkin)
    throw std::invalid_argument("make_gate: only Fredkin takes FredkinParams");
  validate_placement(kind, pl);
  GateInstance inst;
  inst.kind = kind;
  inst.placement = pl;
  inst.fredkin = params;
  detail::finish_instance(inst);
  return inst;
}

/// Defaults: minimal register, canonical parameters where the kind fixes them.
inline GateInstance make_gate(GateKind kind) {
  const int arity = gate_arity(kind);
  Placement pl = arity == 2 ? Placement::two(1, 2, 2) : Placement::three(1, 2, 3, 3);
  if (kind == GateKind::Fredkin) return make_gate(kind, FredkinParams{}, pl);
  if (kind == GateKind::CNOT || kind == GateKind::Toffoli)
    return make_gate(kind, canonical_not_params(), pl);
  return make_gate(kind, GateParams{}, pl);
}

/// Full-register Hamiltonian / evolution, materialized densely. Intended
/// for cross-checks at small registers; dimension grows as 4^n_logical.
inline ComplexMatrix full_hamiltonian(const GateInstance& inst) { return compile(inst.h_expr); }

inline ComplexMatrix full_unitary(const GateInstance& inst) {
  if (inst.minimal_register()) return inst.u_core;
  const int dim = inst.encoding.dim_physical();
  ComplexMatrix u(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (auto [i, v] : apply_embedded(inst.u_core, inst.active_qubits,
                                      inst.encoding.n_physical, j))
      u(i, j) += v;
  return u;
}

/// Negative control: admix eps * X_1 and rerun the pulse.
inline GateInstance with_perturbation(const GateInstance& inst, double eps) {
  if (!inst.minimal_register())
    throw std::invalid_argument("with_perturbation: minimal register only");
  GateInstance out = inst;
  out.h_core = add(inst.h_core, scale(eps, embed(PauliKind::X, 1, 2 * inst.arity())));
  detail::add_term(out.h_expr, eps, {{1, PauliKind::X}});
  out.u_core = evolve(out.h_core, out.tau);
  out.u_logical = extract_logical(out.encoding, out.u_core);
  return out;
}

/// Negative control: run the pulse at a wrong area (factor * pi).
inline GateInstance with_pulse_area(const GateInstance& inst, double factor) {
  GateInstance out = inst;
  out.tau = factor * inst.tau;
  out.u_core = evolve(out.h_core, out.tau);
  out.u_logical = out.minimal_register()
                      ? extract_logical(out.encoding, out.u_core)
                      : detail::assemble_logical(out.u_core, out.active_qubits, out.encoding);
  return out;
}

/// Permutation unitary on n qubits: bit at position k moves to
/// new_pos_of[k-1] (1-based positions, qubit 1 most significant).
inline ComplexMatrix qubit_permutation(const std::vector<int>& new_pos_of, int n_qubits) {
  if (int(new_pos_of.size()) != n_qubits)
    throw std::invalid_argument("qubit_permutation: size mismatch");
  const int dim = 1 << n_qubits;
  ComplexMatrix p(dim, dim);
  for (int b = 0; b < dim; ++b) {
    int bp = 0;
    for (int k = 1; k <= n_qubits; ++k) {
      int bit = (b >> (n_qubits - k)) & 1;
      bp |= bit << (n_qubits - new_pos_of[k - 1]);
    }
    p(bp, b) = 1.0;
  }
  return p;
}

/// The permutation that moves a placement's roles onto the leading logical
/// positions (control(s) first, then target(s), spectators in order).
inline ComplexMatrix placement_permutation(GateKind kind, const Placement& pl) {
  std::vector<int> roles = {pl.m, pl.n};
  if (gate_arity(kind) == 3) roles.push_back(pl.l);
  std::vector<int> new_pos_of(pl.n_logical, 0);
  for (int i = 0; i < int(roles.size()); ++i) new_pos_of[roles[i] - 1] = i + 1;
  int next = int(roles.size()) + 1;
  for (int k = 1; k <= pl.n_logical; ++k)
    if (new_pos_of[k - 1] == 0) new_pos_of[k - 1] = next++;
  return qubit_permutation(new_pos_of, pl.n_logical);
}

/// Dressed six-state basis of the two-qubit gate: ancillas first, then
/// |0>_L|+/->_L and |1>_L|+/->_L, as columns in the 16-dimensional space.
inline ComplexMatrix c1_dressed_basis(const GateParams& p) {
  DfsEncoding enc = standard_encoding(2);
  auto [plus, minus] = plus_minus_states(enc, 2, p.alpha, p.beta);
  CVector pair0 = basis_vector(4, 0b01), pair1 = basis_vector(4, 0b10);
  std::vector<CVector> cols;
  cols.push_back(basis_vector(16, enc.ancilla_index("a1")));
  cols.push_back(basis_vector(16, enc.ancilla_index("a2")));
  cols.push_back(vkron(pair0, plus));
  cols.push_back(vkron(pair0, minus));
  cols.push_back(vkron(pair1, plus));
  cols.push_back(vkron(pair1, minus));
  return column_matrix(cols);
}

}  // namespace hqcdfs
