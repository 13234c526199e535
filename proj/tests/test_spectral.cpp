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

#include "hqcdfs/spectral.hpp"
#include "test_helpers.hpp"

using namespace hqcdfs;
using testutil::evolve_oracle;
using testutil::random_hermitian;

namespace {

ComplexMatrix reconstruct(const Spectrum& s) {
  const int n = int(s.eigenvalues.size());
  ComplexMatrix lambda(n, n);
  for (int i = 0; i < n; ++i) lambda(i, i) = s.eigenvalues[i];
  return matmul(matmul(s.eigenvectors, lambda), dagger(s.eigenvectors));
}

}  // namespace

TEST_CASE("eigenvalues of small fixed matrices") {
  ComplexMatrix d = ComplexMatrix::from_rows({{3, 0}, {0, -1}});
  Spectrum s = hermitian_eig(d);
  CHECK(s.eigenvalues[0] == Catch::Approx(-1.0));
  CHECK(s.eigenvalues[1] == Catch::Approx(3.0));

  Spectrum sx = hermitian_eig(pauli_matrix(PauliKind::X));
  CHECK(sx.eigenvalues[0] == Catch::Approx(-1.0));
  CHECK(sx.eigenvalues[1] == Catch::Approx(1.0));
  // eigenvectors (|0> -+ |1>)/sqrt(2) up to phase
  for (int k = 0; k < 2; ++k) {
    CVector v = {sx.eigenvectors(0, k), sx.eigenvectors(1, k)};
    double expected_sign = k == 0 ? -1.0 : 1.0;
    CHECK(std::abs(std::abs(v[0]) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(v[1] / v[0] - expected_sign) < 1e-12);
  }
}

TEST_CASE("two-level block spectrum matches the quadratic formula") {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const double omega = 1.0, xi = rng.uniform(-kPi, kPi);
    ComplexMatrix block = ComplexMatrix::from_rows(
        {{-2.0 * omega * std::sin(xi), omega * std::cos(xi)},
         {omega * std::cos(xi), 0.0}});
    Spectrum s = hermitian_eig(block);
    // roots of l^2 + 2 W sin(xi) l - W^2 cos^2(xi), via the quadratic formula
    const double b = 2.0 * omega * std::sin(xi);
    const double c = -omega * omega * std::cos(xi) * std::cos(xi);
    const double disc = std::sqrt(b * b - 4.0 * c);
    const double lo = (-b - disc) / 2.0, hi = (-b + disc) / 2.0;
    CHECK(s.eigenvalues[0] == Catch::Approx(lo).margin(1e-10));
    CHECK(s.eigenvalues[1] == Catch::Approx(hi).margin(1e-10));
    // equivalently -W sin(xi) -+ W
    CHECK(s.eigenvalues[0] == Catch::Approx(-omega * std::sin(xi) - omega).margin(1e-10));
  }
}

TEST_CASE("reconstruction and orthonormality at 64x64") {
  Rng rng(13);
  ComplexMatrix h = random_hermitian(rng, 64);
  Spectrum s = hermitian_eig(h);
  CHECK(max_abs_diff(reconstruct(s), h) < 1e-10);
  CHECK(max_abs_diff(matmul(dagger(s.eigenvectors), s.eigenvectors),
                     ComplexMatrix::identity(64)) < 1e-10);
  for (int k = 1; k < 64; ++k) CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(pauli_matrix(PauliKind::SigmaMinus)), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("evolve fixed cases") {
  CHECK(max_abs_diff(evolve(ComplexMatrix(4, 4), 2.7), ComplexMatrix::identity(4)) == 0.0);

  ComplexMatrix uz = evolve(pauli_matrix(PauliKind::Z), kPi / 2);
  ComplexMatrix expected = ComplexMatrix::from_rows(
      {{std::exp(cx(0, -kPi / 2)), 0}, {0, std::exp(cx(0, kPi / 2))}});
  CHECK(max_abs_diff(uz, expected) < 1e-12);

  // pi pulse about X flips the sign of everything
  const double omega = 0.7;
  ComplexMatrix ux = evolve(scale(omega, pauli_matrix(PauliKind::X)), kPi / omega);
  CHECK(max_abs_diff(ux, scale(-1.0, ComplexMatrix::identity(2))) < 1e-12);
  CHECK(max_abs_diff(ux, evolve_oracle(scale(omega, pauli_matrix(PauliKind::X)), kPi / omega)) <
        1e-9);
}

TEST_CASE("evolve matches the series oracle") {
  Rng rng(29);
  for (int n : {2, 8, 64}) {
    ComplexMatrix h = random_hermitian(rng, n);
    const double t = 1.0 / std::max(1.0, frobenius(h));  // ||H|| t <= 1
    CHECK(max_abs_diff(evolve(h, t), evolve_oracle(h, t)) < 1e-9);
  }
}

TEST_CASE("evolve group and inverse properties") {
  Rng rng(31);
  for (int n : {2, 8, 64}) {
    ComplexMatrix h = random_hermitian(rng, n);
    const double t = rng.uniform(-1.0, 1.0), s = rng.uniform(-1.0, 1.0);
    Propagator prop(h);
    CHECK(max_abs_diff(matmul(prop.at(t), prop.at(s)), prop.at(t + s)) < 1e-10);
    CHECK(max_abs_diff(dagger(prop.at(t)), prop.at(-t)) < 1e-10);
    CHECK(unitarity_residual(prop.at(t)) < 1e-9);
  }
}
