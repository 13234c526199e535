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

#include <catch2/catch_amalgamated.hpp>

#include "hqcdfs/noise.hpp"
#include "test_helpers.hpp"

using namespace hqcdfs;

namespace {

NoiseConfig ensemble(double strength, int samples = 512, std::uint64_t seed = kDefaultSeed) {
  NoiseConfig c;
  c.model = NoiseConfig::Model::PhaseEnsemble;
  c.strength = strength;
  c.n_samples = samples;
  c.seed = seed;
  return c;
}

DensityMatrix random_density(Rng& rng, int dim) {
  ComplexMatrix a(dim, dim);
  for (auto& v : a.data) v = cx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  ComplexMatrix rho = matmul(a, dagger(a));
  return scale(1.0 / trace(rho).real(), rho);
}

}  // namespace

TEST_CASE("phase ensemble leaves fixed-weight states alone") {
  Rng rng(139);
  // a pure state inside the weight-1 subspace of two qubits
  CVector psi(4, cx(0.0));
  psi[0b01] = std::sqrt(0.3);
  psi[0b10] = std::exp(cx(0, 0.8)) * std::sqrt(0.7);
  DensityMatrix rho = outer(psi, psi);
  DensityMatrix out = collective_phase_channel(rho, ensemble(2.5, 64));
  CHECK(max_abs_diff(out, rho) < 1e-12);

  // strength zero is the identity channel on anything
  DensityMatrix any = random_density(rng, 8);
  CHECK(max_abs_diff(collective_phase_channel(any, ensemble(0.0, 16)), any) < 1e-14);
}

TEST_CASE("phase ensemble decoheres a single-qubit superposition") {
  CVector plus = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  DensityMatrix rho = outer(plus, plus);
  const double strength = 0.5;
  const int samples = 4096;
  DensityMatrix out = collective_phase_channel(rho, ensemble(strength, samples));
  // E[e^{-2 i phi}] = e^{-2 strength^2} for phi ~ N(0, strength^2)
  const double expected = 0.5 * std::exp(-2.0 * strength * strength);
  // ensemble standard error of cos(2 phi)/2
  const double se = 0.5 / std::sqrt(double(samples));
  CHECK(std::abs(out(0, 1).real() - expected) < 3.0 * se);
  CHECK(std::abs(out(0, 0) - cx(0.5)) < 1e-12);  // populations untouched
}

TEST_CASE("channels preserve trace and hermiticity") {
  Rng rng(149);
  DensityMatrix rho = random_density(rng, 16);
  DensityMatrix a = collective_phase_channel(rho, ensemble(0.7, 32));
  CHECK(std::abs(trace(a) - trace(rho)) < 1e-12);
  CHECK(hermiticity_residual(a) < 1e-9);

  ComplexMatrix h = testutil::random_hermitian(rng, 16);
  DensityMatrix b = lindblad_rk4(rho, h, 0.3, 0.5, 0.5 / 400);
  CHECK(std::abs(trace(b) - trace(rho)) < 1e-8);
  CHECK(hermiticity_residual(b) < 1e-9);
  validate_density(b);
}

TEST_CASE("closed-system limit of the integrator") {
  Rng rng(151);
  GateInstance cnot = make_gate(GateKind::CNOT);
  CVector psi = embed_logical_state(cnot.encoding, {0.5, cx(0, 0.5), 0.5, -0.5});
  DensityMatrix rho0 = outer(psi, psi);
  DensityMatrix rho = lindblad_rk4(rho0, cnot.h_core, 0.0, cnot.tau, cnot.tau / 2000);
  ComplexMatrix u = evolve(cnot.h_core, cnot.tau);
  DensityMatrix expected = matmul(matmul(u, rho0), dagger(u));
  CHECK(max_abs_diff(rho, expected) < 1e-7);
}

TEST_CASE("dephasing-free sectors and the analytic decay") {
  // H = 0, any state inside one weight sector is a fixed point
  CVector psi(4, cx(0.0));
  psi[0b01] = 0.6;
  psi[0b10] = 0.8;
  DensityMatrix rho0 = outer(psi, psi);
  DensityMatrix out = lindblad_rk4(rho0, ComplexMatrix(4, 4), 3.0, 1.0, 1.0 / 2000);
  CHECK(max_abs_diff(out, rho0) < 1e-10);

  // a single qubit decoheres as e^{-4 kappa t}
  const double kappa = 1.0, t = 1.0 / kappa;
  CVector plus = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  DensityMatrix rho = lindblad_rk4(outer(plus, plus), ComplexMatrix(2, 2), kappa, t, t / 2000);
  const double expected = 0.5 * std::exp(-4.0 * kappa * t);
  CHECK(std::abs(rho(0, 1).real() / expected - 1.0) < 1e-4);

  // and the integrator tracks the closed form entrywise
  Rng rng(157);
  DensityMatrix r8 = random_density(rng, 8);
  DensityMatrix got = lindblad_rk4(r8, ComplexMatrix(8, 8), 0.4, 0.7, 0.7 / 2000);
  CHECK(max_abs_diff(got, dephasing_closed_form(r8, 0.4, 0.7)) < 1e-9);
}

TEST_CASE("step-doubling self-check and instability detection") {
  GateInstance cnot = make_gate(GateKind::CNOT);
  CVector psi = embed_logical_state(cnot.encoding, {0.0, 0.0, 1.0, 0.0});
  DensityMatrix rho0 = outer(psi, psi);
  CHECK(lindblad_step_doubling_residual(rho0, cnot.h_core, 0.5, cnot.tau, cnot.tau / 2000) <
        1e-8);
  // a grossly unstable step must be caught, not silently returned
  CHECK_THROWS_AS(lindblad_rk4(rho0, cnot.h_core, 50.0, cnot.tau, cnot.tau / 10),
                  std::runtime_error);
  CHECK_THROWS_AS(lindblad_rk4(rho0, cnot.h_core, -1.0, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("the two noise models agree where they overlap") {
  // single qubit, H = 0: ensemble with variance 2 kappa t vs the master
  // equation at time t
  const double kappa = 0.35, t = 0.8;
  CVector plus = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  DensityMatrix rho0 = outer(plus, plus);
  DensityMatrix via_lindblad = lindblad_rk4(rho0, ComplexMatrix(2, 2), kappa, t, t / 1000);
  const int samples = 8192;
  DensityMatrix via_ensemble =
      collective_phase_channel(rho0, ensemble(std::sqrt(2.0 * kappa * t), samples));
  const double se = 0.5 / std::sqrt(double(samples));
  CHECK(std::abs(via_ensemble(0, 1).real() - via_lindblad(0, 1).real()) < 3.0 * se);
}

TEST_CASE("encoded gates are immune to collective dephasing") {
  GateInstance cnot = make_gate(GateKind::CNOT);
  CVector psi_l(4, cx(0.0));
  psi_l[0b10] = 1.0;
  for (double kappa : {0.0, 0.1, 1.0, 10.0}) {
    NoiseConfig c;
    c.model = NoiseConfig::Model::Lindblad;
    c.strength = kappa;
    const double f = noisy_gate_fidelity(cnot, cnot.encoding, psi_l, c);
    CHECK(f >= 1.0 - 1e-6);
  }
  // superpositions inside the logical subspace are protected too
  CVector cat = {0.5, 0.5, 0.5, -0.5};
  NoiseConfig c;
  c.strength = 1.0;
  CHECK(noisy_gate_fidelity(cnot, cnot.encoding, cat, c) >= 1.0 - 1e-6);

  // ensemble model, same conclusion
  NoiseConfig e = ensemble(2.0, 32);
  CHECK(noisy_gate_fidelity(cnot, cnot.encoding, psi_l, e) >= 1.0 - 1e-9);
}

TEST_CASE("every fixed-weight state is a fixed point of both models") {
  Rng rng(167);
  for (int n : {2, 4}) {
    for (int w = 0; w <= n; ++w) {
      Subspace s = weight_subspace(n, w);
      // random pure state inside the sector
      CVector psi(1 << n, cx(0.0));
      for (int c = 0; c < s.dim(); ++c) {
        cx amp(rng.uniform(-1, 1), rng.uniform(-1, 1));
        for (int r = 0; r < s.basis.rows; ++r) psi[r] += amp * s.basis(r, c);
      }
      psi = vscale(1.0 / vnorm(psi), psi);
      DensityMatrix rho = outer(psi, psi);

      DensityMatrix via_channel = collective_phase_channel(rho, ensemble(3.0, 8));
      CHECK(std::real(vdot(psi, matvec(via_channel, psi))) >= 1.0 - 1e-9);
      DensityMatrix via_lindblad = lindblad_rk4(rho, ComplexMatrix(1 << n, 1 << n), 5.0,
                                                0.3, 0.3 / 2000);
      CHECK(std::real(vdot(psi, matvec(via_lindblad, psi))) >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("gate action is rate-independent for all three gates") {
  CVector target0 = {0.0, 0.0, 1.0, 0.0};  // |10>_L
  GateInstance cnot = make_gate(GateKind::CNOT);
  double reference = -1.0;
  for (double kappa : {0.0, 0.1, 1.0, 10.0}) {
    NoiseConfig c;
    c.strength = kappa;
    const double f = noisy_gate_fidelity(cnot, cnot.encoding, target0, c);
    if (reference < 0.0) reference = f;
    CHECK(std::abs(f - reference) < 1e-6);
  }

  // the three-logical-qubit gates, coarser grid (64-dimensional integrations)
  CVector in3(8, cx(0.0));
  in3[0b110] = 1.0;
  for (GateKind kind : {GateKind::Toffoli, GateKind::Fredkin}) {
    GateInstance g = make_gate(kind);
    double ref = -1.0;
    for (double kappa : {0.0, 10.0}) {
      NoiseConfig c;
      c.strength = kappa;
      c.dt = kappa > 1.0 ? g.tau / 2000 : g.tau / 500;
      const double f = noisy_gate_fidelity(g, g.encoding, in3, c);
      if (ref < 0.0) ref = f;
      CHECK(f >= 1.0 - 1e-6);
      CHECK(std::abs(f - ref) < 1e-6);
    }
  }
}

TEST_CASE("noisy_gate_fidelity validates its input state") {
  GateInstance cnot = make_gate(GateKind::CNOT);
  NoiseConfig c;
  CHECK_THROWS_AS(noisy_gate_fidelity(cnot, cnot.encoding, {1.0, 1.0, 0.0, 0.0}, c),
                  std::invalid_argument);
}

TEST_CASE("the bare gate is not protected") {
  NoiseConfig c;
  c.strength = 0.1;
  const double f = bare_cnot_noisy_fidelity(c);
  CHECK(f < 1.0 - 1e-3);
  NoiseConfig c0;
  c0.strength = 0.0;
  CHECK(bare_cnot_noisy_fidelity(c0) >= 1.0 - 1e-7);
  // monotone degradation
  NoiseConfig c2;
  c2.strength = 1.0;
  CHECK(bare_cnot_noisy_fidelity(c2) < f);
}

TEST_CASE("seeded runs are bit-reproducible") {
  Rng rng(163);
  DensityMatrix rho = random_density(rng, 4);
  DensityMatrix a = collective_phase_channel(rho, ensemble(0.9, 128, 7));
  DensityMatrix b = collective_phase_channel(rho, ensemble(0.9, 128, 7));
  CHECK(max_abs_diff(a, b) == 0.0);
  DensityMatrix other = collective_phase_channel(rho, ensemble(0.9, 128, 8));
  CHECK(max_abs_diff(a, other) > 0.0);

  // per-sample seeding: the worker count does not change the samples drawn,
  // only the partial-sum bracketing
  NoiseConfig par = ensemble(0.9, 128, 7);
  par.workers = 2;
  DensityMatrix c = collective_phase_channel(rho, par);
  CHECK(max_abs_diff(a, c) < 1e-13);
}

TEST_CASE("density validation catches bad states") {
  ComplexMatrix not_normalized = scale(2.0, ComplexMatrix::identity(2));
  CHECK_THROWS_AS(validate_density(not_normalized), std::invalid_argument);
  ComplexMatrix negative = ComplexMatrix::from_rows({{1.5, 0}, {0, -0.5}});
  CHECK_THROWS_AS(validate_density(negative), std::invalid_argument);
  CHECK_THROWS_AS(qubit_count_of_dim(3), std::invalid_argument);
}
