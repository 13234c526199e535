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
#include <string>

#include "hqcdfs/complex_matrix.hpp"
#include "hqcdfs/pauli.hpp"

// Logical qubits live on neighboring physical-qubit pairs, |0>_L = |01>,
// |1>_L = |10>. States of fixed Hamming weight share one eigenvalue of
// sum_k Z_k and are therefore untouched by collective dephasing.

namespace hqcdfs {

/// Subspace of a 2^n-dimensional space, columns orthonormal.
struct Subspace {
  int ambient_dim = 0;
  ComplexMatrix basis;  // ambient_dim x dim, orthonormal columns

  int dim() const { return basis.cols; }

  ComplexMatrix projector() const { return matmul(basis, dagger(basis)); }
};

/// All computational-basis states of the given Hamming weight, ascending.
inline Subspace weight_subspace(int n_physical, int weight) {
  check_qubit_count(n_physical);
  if (weight < 0 || weight > n_physical)
    throw std::invalid_argument("weight_subspace: weight out of range");
  const int dim = 1 << n_physical;
  std::vector<int> idx;
  for (int j = 0; j < dim; ++j)
    if (std::popcount(unsigned(j)) == weight) idx.push_back(j);
  Subspace s;
  s.ambient_dim = dim;
  s.basis = ComplexMatrix(dim, int(idx.size()));
  for (int c = 0; c < int(idx.size()); ++c) s.basis(idx[c], c) = 1.0;
  return s;
}

struct DfsEncoding {
  int n_logical = 0;
  int n_physical = 0;
  std::vector<int> logical_to_physical;            // 2^n_logical entries
  std::vector<std::pair<std::string, int>> ancillas;  // (name, physical index)

  int dim_logical() const { return 1 << n_logical; }
  int dim_physical() const { return 1 << n_physical; }

  int physical_index(int logical) const {
    if (logical < 0 || logical >= dim_logical())
      throw std::invalid_argument("physical_index: logical index out of range");
    return logical_to_physical[logical];
  }

  int ancilla_index(const std::string& name) const {
    for (const auto& [n, idx] : ancillas)
      if (n == name) return idx;
    throw std::invalid_argument("ancilla_index: no ancilla named " + name);
  }
};

/// Pair encoding: logical qubit k occupies physical qubits (2k-1, 2k). The
/// two- and three-qubit encodings carry the named ancilla states used by the
/// controlled gates.
inline DfsEncoding standard_encoding(int n_logical) {
  if (n_logical < 1 || n_logical > 6)
    throw std::invalid_argument("standard_encoding: n_logical must be in [1, 6]");
  DfsEncoding enc;
  enc.n_logical = n_logical;
  enc.n_physical = 2 * n_logical;
  enc.logical_to_physical.resize(std::size_t(1) << n_logical);
  for (int b = 0; b < enc.dim_logical(); ++b) {
    int p = 0;
    for (int k = 1; k <= n_logical; ++k) {
      int bit = (b >> (n_logical - k)) & 1;
      // |0>_L -> |01> sets qubit 2k, |1>_L -> |10> sets qubit 2k-1
      int pos = bit ? (enc.n_physical - (2 * k - 1)) : (enc.n_physical - 2 * k);
      p |= 1 << pos;
    }
    enc.logical_to_physical[b] = p;
  }
  if (n_logical == 2) {
    enc.ancillas = {{"a1", 0b0011}, {"a2", 0b1100}};
  } else if (n_logical == 3) {
    enc.ancillas = {{"a3", 0b100011}, {"a4", 0b101100}};
  }
  return enc;
}

/// The pair-encoded states |+>_L = cos(a/2)|0>_L + e^{ib} sin(a/2)|1>_L and
/// |->_L = e^{-ib} sin(a/2)|0>_L - cos(a/2)|1>_L of one logical qubit, as
/// 4-dimensional vectors on its physical pair. Multi-qubit dressed states
/// are assembled by kron with the other pairs.
inline std::pair<CVector, CVector> plus_minus_states(const DfsEncoding& enc,
                                                     int target_logical_qubit,
                                                     double alpha, double beta) {
  if (target_logical_qubit < 1 || target_logical_qubit > enc.n_logical)
    throw std::invalid_argument("plus_minus_states: target qubit out of range");
  const cx eib = std::exp(cx(0.0, beta));
  const double ca = std::cos(alpha / 2.0), sa = std::sin(alpha / 2.0);
  CVector plus(4, cx(0.0)), minus(4, cx(0.0));
  plus[0b01] = ca;
  plus[0b10] = eib * sa;
  minus[0b01] = std::conj(eib) * sa;
  minus[0b10] = -ca;
  return {plus, minus};
}

/// Columns are the physical images of |00...0>_L, ..., |11...1>_L in
/// binary-ascending order (logical qubit 1 most significant).
inline Subspace logical_subspace(const DfsEncoding& enc) {
  Subspace s;
  s.ambient_dim = enc.dim_physical();
  s.basis = ComplexMatrix(s.ambient_dim, enc.dim_logical());
  for (int b = 0; b < enc.dim_logical(); ++b) s.basis(enc.physical_index(b), b) = 1.0;
  return s;
}

/// The gate-invariant DFS: logical images plus the named ancilla states.
/// For two logical qubits this spans the full weight-2 subspace; for three
/// it is the ten-dimensional subspace the controlled gates act in.
inline Subspace gate_dfs(const DfsEncoding& enc) {
  Subspace s;
  s.ambient_dim = enc.dim_physical();
  s.basis = ComplexMatrix(s.ambient_dim, enc.dim_logical() + int(enc.ancillas.size()));
  int c = 0;
  for (int b = 0; b < enc.dim_logical(); ++b) s.basis(enc.physical_index(b), c++) = 1.0;
  for (const auto& [name, idx] : enc.ancillas) s.basis(idx, c++) = 1.0;
  return s;
}

/// B M B^dag: place a logical operator into the physical space.
inline ComplexMatrix embed_logical_operator(const DfsEncoding& enc, const ComplexMatrix& m) {
  const int dl = enc.dim_logical();
  if (m.rows != dl || m.cols != dl)
    throw std::invalid_argument("embed_logical_operator: dimension mismatch");
  ComplexMatrix u(enc.dim_physical(), enc.dim_physical());
  for (int r = 0; r < dl; ++r)
    for (int c = 0; c < dl; ++c) u(enc.physical_index(r), enc.physical_index(c)) = m(r, c);
  return u;
}

/// B^dag U B: the logical block of a physical operator.
inline ComplexMatrix extract_logical(const DfsEncoding& enc, const ComplexMatrix& u) {
  if (u.rows != enc.dim_physical() || u.cols != enc.dim_physical())
    throw std::invalid_argument("extract_logical: dimension mismatch");
  const int dl = enc.dim_logical();
  ComplexMatrix m(dl, dl);
  for (int r = 0; r < dl; ++r)
    for (int c = 0; c < dl; ++c) m(r, c) = u(enc.physical_index(r), enc.physical_index(c));
  return m;
}

/// Physical state of a full logical register: amplitudes on logical basis
/// states mapped onto their physical images.
inline CVector embed_logical_state(const DfsEncoding& enc, const CVector& psi_logical) {
  if (int(psi_logical.size()) != enc.dim_logical())
    throw std::invalid_argument("embed_logical_state: dimension mismatch");
  CVector psi(enc.dim_physical(), cx(0.0));
  for (int b = 0; b < enc.dim_logical(); ++b) psi[enc.physical_index(b)] = psi_logical[b];
  return psi;
}

}  // namespace hqcdfs
