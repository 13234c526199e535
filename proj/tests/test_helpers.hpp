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

#include "hqcdfs/complex_matrix.hpp"
#include "hqcdfs/gates.hpp"
#include "hqcdfs/random.hpp"

// Oracles used across the suites. They deliberately avoid the spectral
// route so evolve() has something independent to be checked against.

namespace testutil {

using namespace hqcdfs;

inline ComplexMatrix random_hermitian(Rng& rng, int n, double scale = 1.0) {
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = scale * cx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

/// Taylor series exp(A) with scaling and squaring; `terms` series terms at
/// scaled norm <= 0.5.
inline ComplexMatrix expm_series(const ComplexMatrix& a, int terms = 30) {
  int s = 0;
  double norm = frobenius(a);
  while (norm > 0.5 && s < 40) {
    norm /= 2.0;
    ++s;
  }
  ComplexMatrix b = scale(1.0 / double(1 << s), a);
  ComplexMatrix sum = ComplexMatrix::identity(a.rows);
  ComplexMatrix power = ComplexMatrix::identity(a.rows);
  double factorial = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power = matmul(power, b);
    factorial *= double(k);
    sum = add(sum, scale(1.0 / factorial, power));
  }
  for (int k = 0; k < s; ++k) sum = matmul(sum, sum);
  return sum;
}

/// exp(-iHt) by pure series summation.
inline ComplexMatrix evolve_oracle(const ComplexMatrix& h, double t) {
  return expm_series(scale(cx(0.0, -t), h));
}

inline GateParams random_params(Rng& rng) {
  GateParams p;
  p.omega = 1.0;
  p.xi = rng.uniform(-kPi, kPi);
  p.gamma = rng.uniform(-kPi, kPi);
  p.alpha = rng.uniform(-kPi, kPi);
  p.beta = rng.uniform(-kPi, kPi);
  return p;
}

inline ComplexMatrix random_unitary(Rng& rng, int n) {
  return evolve_oracle(random_hermitian(rng, n), 1.0);
}

/// The active-pair Hamiltonian must reproduce the full expression on every
/// basis state; checked matrix-free, column by column.
inline double factorization_residual(const GateInstance& inst) {
  const int n = inst.encoding.n_physical;
  const int dim = 1 << n;
  double worst = 0.0;
  for (int j = 0; j < dim; ++j) {
    CVector full(dim, cx(0.0)), factored(dim, cx(0.0));
    for (auto [i, v] : apply_to_basis(inst.h_expr, j)) full[i] += v;
    for (auto [i, v] : apply_embedded(inst.h_core, inst.active_qubits, n, j))
      factored[i] += v;
    for (int i = 0; i < dim; ++i) worst = std::max(worst, std::abs(full[i] - factored[i]));
  }
  return worst;
}

/// Default-placement gate conjugated by the logical-qubit permutation: the
/// reference the placed logical action must match entrywise.
inline ComplexMatrix covariance_reference(const GateInstance& inst) {
  ComplexMatrix g;
  if (inst.kind == GateKind::Fredkin) {
    g = controlled_target(GateKind::Fredkin, ComplexMatrix::identity(2),
                          Placement::three(1, 2, 3, inst.placement.n_logical));
  } else {
    ComplexMatrix u = target_u(inst.angles.delta, inst.angles.theta, inst.params.alpha,
                               inst.params.beta);
    Placement def = inst.arity() == 2 ? Placement::two(1, 2, inst.placement.n_logical)
                                      : Placement::three(1, 2, 3, inst.placement.n_logical);
    g = controlled_target(inst.kind, u, def);
  }
  ComplexMatrix perm = placement_permutation(inst.kind, inst.placement);
  return matmul(dagger(perm), matmul(g, perm));
}

/// Worst of: tensor-factorization residual, covariance residual, and the
/// unitarity of the assembled logical block.
inline double placement_residual(const GateInstance& inst) {
  double r = factorization_residual(inst);
  r = std::max(r, max_abs_diff(inst.u_logical, covariance_reference(inst)));
  r = std::max(r, unitarity_residual(inst.u_logical));
  return r;
}

}  // namespace testutil
