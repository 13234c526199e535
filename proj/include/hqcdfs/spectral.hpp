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

#include <numeric>

#include "hqcdfs/complex_matrix.hpp"

namespace hqcdfs {

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, orthonormal eigenvectors as columns.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi diagonalization with complex Givens rotations. Converges
/// when the off-diagonal Frobenius mass drops below 1e-12 (relative to the
/// input scale); capped at 100 sweeps.
inline Spectrum hermitian_eig(const ComplexMatrix& h, double tol_herm = Tolerances{}.herm) {
  if (!h.square()) throw std::invalid_argument("hermitian_eig: non-square input");
  if (hermiticity_residual(h) > tol_herm)
    throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");

  const int n = h.rows;
  ComplexMatrix a = h;
  // symmetrize exactly so rotations see a clean Hermitian matrix
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      cx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
    a(i, i) = cx(a(i, i).real(), 0.0);
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius(a);
  const double off_target = 1e-12 * std::max(1.0, scale);
  const int max_sweeps = 100;

  int sweep = 0;
  while (detail::offdiag_frobenius(a) > off_target) {
    if (++sweep > max_sweeps) throw std::runtime_error("hermitian_eig: iteration budget exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cx apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq == 0.0) continue;
        // Rotation G = P*J: P = diag(1, e^{-i phi}) strips the phase of
        // a_pq, J is the real Jacobi rotation annihilating the block.
        const cx phase = apq / abs_apq;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * abs_apq);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cx gpq = s * std::conj(phase) * (-1.0);  // G(q,p) = -s e^{-i phi}
        const cx gqq = c * std::conj(phase);           // G(q,q) =  c e^{-i phi}
        // A <- G^dag A (rows p, q)
        for (int j = 0; j < n; ++j) {
          const cx xp = a(p, j), xq = a(q, j);
          a(p, j) = c * xp + std::conj(gpq) * xq;
          a(q, j) = s * xp + std::conj(gqq) * xq;
        }
        // A <- A G, V <- V G (columns p, q)
        for (int i = 0; i < n; ++i) {
          const cx xp = a(i, p), xq = a(i, q);
          a(i, p) = c * xp + gpq * xq;
          a(i, q) = s * xp + gqq * xq;
          const cx yp = v(i, p), yq = v(i, q);
          v(i, p) = c * yp + gpq * yq;
          v(i, q) = s * yp + gqq * yq;
        }
        a(p, q) = cx(0.0);
        a(q, p) = cx(0.0);
        a(p, p) = cx(a(p, p).real(), 0.0);
        a(q, q) = cx(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Reusable spectral propagator for exp(-iHt) at many times t (hbar = 1).
class Propagator {
 public:
  explicit Propagator(const ComplexMatrix& h, double tol_herm = Tolerances{}.herm)
      : spec_(hermitian_eig(h, tol_herm)) {}
  explicit Propagator(Spectrum spec) : spec_(std::move(spec)) {}

  const Spectrum& spectrum() const { return spec_; }
  int dim() const { return spec_.eigenvectors.rows; }

  /// U(t) = V exp(-i lambda t) V^dag
  ComplexMatrix at(double t) const {
    const int n = dim();
    const ComplexMatrix& vmat = spec_.eigenvectors;
    ComplexMatrix w(n, n);  // W = V exp(-i lambda t)
    for (int k = 0; k < n; ++k) {
      cx ph = std::exp(cx(0.0, -spec_.eigenvalues[k] * t));
      for (int i = 0; i < n; ++i) w(i, k) = vmat(i, k) * ph;
    }
    return matmul(w, dagger(vmat));
  }

  /// Columns of U(t)*B without forming U(t).
  ComplexMatrix apply(double t, const ComplexMatrix& b) const {
    const ComplexMatrix& vmat = spec_.eigenvectors;
    if (b.rows != dim()) throw std::invalid_argument("Propagator::apply: dimension mismatch");
    ComplexMatrix w = matmul(dagger(vmat), b);
    for (int k = 0; k < w.rows; ++k) {
      cx ph = std::exp(cx(0.0, -spec_.eigenvalues[k] * t));
      for (int j = 0; j < w.cols; ++j) w(k, j) *= ph;
    }
    return matmul(vmat, w);
  }

 private:
  Spectrum spec_;
};

/// exp(-iHt) for Hermitian H via the spectral route.
inline ComplexMatrix evolve(const ComplexMatrix& h, double t,
                            double tol_herm = Tolerances{}.herm) {
  return Propagator(h, tol_herm).at(t);
}

}  // namespace hqcdfs
