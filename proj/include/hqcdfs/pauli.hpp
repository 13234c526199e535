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

#include <cstdint>
#include <utility>

#include "hqcdfs/complex_matrix.hpp"

// Pauli-string operators on n qubits. Conventions, fixed globally:
//   - qubit 1 is the leftmost tensor factor and the most significant bit of
//     the computational-basis index;
//   - Z|0> = +|0>.

namespace hqcdfs {

enum class PauliKind { I, X, Y, Z, SigmaMinus, SigmaPlus };

/// The 2x2 matrix in the {|0>,|1>} basis. SigmaMinus = (X-iY)/2 = |1><0|,
/// SigmaPlus = (X+iY)/2 = |0><1|.
inline ComplexMatrix pauli_matrix(PauliKind kind) {
  const cx i(0.0, 1.0);
  switch (kind) {
    case PauliKind::I: return ComplexMatrix::from_rows({{1, 0}, {0, 1}});
    case PauliKind::X: return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    case PauliKind::Y: return ComplexMatrix::from_rows({{0, -i}, {i, 0}});
    case PauliKind::Z: return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
    case PauliKind::SigmaMinus: return ComplexMatrix::from_rows({{0, 0}, {1, 0}});
    case PauliKind::SigmaPlus: return ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  }
  throw std::invalid_argument("pauli_matrix: unknown kind");
}

inline void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, 12]");
}

/// I x ... x P x ... x I with P at 1-based position `index` (leftmost = 1).
inline ComplexMatrix embed(PauliKind kind, int index, int n_qubits) {
  check_qubit_count(n_qubits);
  if (index < 1 || index > n_qubits) throw std::invalid_argument("embed: index out of range");
  const ComplexMatrix p = pauli_matrix(kind);
  const int dim = 1 << n_qubits;
  const int shift = n_qubits - index;  // bit position of this qubit
  ComplexMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    int b = (j >> shift) & 1;
    for (int r = 0; r < 2; ++r) {
      cx v = p(r, b);
      if (v == cx(0.0)) continue;
      int i = (j & ~(1 << shift)) | (r << shift);
      m(i, j) += v;
    }
  }
  return m;
}

struct PauliFactor {
  int qubit = 1;  // 1-based
  PauliKind kind = PauliKind::I;
};

struct PauliTerm {
  cx coeff{1.0};
  std::vector<PauliFactor> factors;  // at most one factor per qubit
};

/// Weighted sum of Pauli-string terms on n qubits.
struct OperatorExpr {
  int n_qubits = 1;
  std::vector<PauliTerm> terms;
};

inline void validate(const OperatorExpr& expr) {
  check_qubit_count(expr.n_qubits);
  for (const PauliTerm& t : expr.terms) {
    std::uint32_t seen = 0;
    for (const PauliFactor& f : t.factors) {
      if (f.qubit < 1 || f.qubit > expr.n_qubits)
        throw std::invalid_argument("OperatorExpr: factor qubit out of range");
      std::uint32_t bit = 1u << (f.qubit - 1);
      if (seen & bit) throw std::invalid_argument("OperatorExpr: duplicate qubit in term");
      seen |= bit;
    }
  }
}

namespace detail {
// Column structure of the 2x2 generators: each column holds at most one
// nonzero entry, so every Pauli string maps a basis state to at most one
// basis state. (row, value) per column; value 0 marks an empty column.
struct PauliColumns {
  int row[2];
  cx val[2];
};

inline PauliColumns pauli_columns(PauliKind kind) {
  const cx i(0.0, 1.0);
  switch (kind) {
    case PauliKind::I: return {{0, 1}, {1.0, 1.0}};
    case PauliKind::X: return {{1, 0}, {1.0, 1.0}};
    case PauliKind::Y: return {{1, 0}, {i, -i}};
    case PauliKind::Z: return {{0, 1}, {1.0, -1.0}};
    case PauliKind::SigmaMinus: return {{1, 1}, {1.0, 0.0}};
    case PauliKind::SigmaPlus: return {{0, 0}, {0.0, 1.0}};
  }
  throw std::invalid_argument("pauli_columns: unknown kind");
}
}  // namespace detail

/// Image of the basis state |j> under one term: at most one (index, amplitude).
inline std::pair<int, cx> term_apply_basis(const PauliTerm& term, int j, int n_qubits) {
  int i = j;
  cx amp = term.coeff;
  for (const PauliFactor& f : term.factors) {
    int shift = n_qubits - f.qubit;
    int b = (j >> shift) & 1;
    auto cols = detail::pauli_columns(f.kind);
    if (cols.val[b] == cx(0.0)) return {0, cx(0.0)};
    amp *= cols.val[b];
    i = (i & ~(1 << shift)) | (cols.row[b] << shift);
  }
  return {i, amp};
}

/// expr|j> as a sparse list of (basis index, amplitude), one entry per
/// contributing term (indices may repeat).
inline std::vector<std::pair<int, cx>> apply_to_basis(const OperatorExpr& expr, int j) {
  std::vector<std::pair<int, cx>> out;
  out.reserve(expr.terms.size());
  for (const PauliTerm& t : expr.terms) {
    auto [i, amp] = term_apply_basis(t, j, expr.n_qubits);
    if (amp != cx(0.0)) out.emplace_back(i, amp);
  }
  return out;
}

inline ComplexMatrix compile(const OperatorExpr& expr) {
  validate(expr);
  const int dim = 1 << expr.n_qubits;
  ComplexMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (const PauliTerm& t : expr.terms) {
      auto [i, amp] = term_apply_basis(t, j, expr.n_qubits);
      if (amp != cx(0.0)) m(i, j) += amp;
    }
  return m;
}

inline CVector apply_expr(const OperatorExpr& expr, const CVector& v) {
  const int dim = 1 << expr.n_qubits;
  if (int(v.size()) != dim) throw std::invalid_argument("apply_expr: dimension mismatch");
  CVector r(dim, cx(0.0));
  for (int j = 0; j < dim; ++j) {
    if (v[j] == cx(0.0)) continue;
    for (const PauliTerm& t : expr.terms) {
      auto [i, amp] = term_apply_basis(t, j, expr.n_qubits);
      if (amp != cx(0.0)) r[i] += amp * v[j];
    }
  }
  return r;
}

/// Apply a dense operator supported on a qubit subset to the basis state |j>
/// of the full n-qubit space. `qubits` are 1-based, strictly ascending; the
/// first listed qubit is the most significant bit of op's index space.
inline std::vector<std::pair<int, cx>> apply_embedded(const ComplexMatrix& op,
                                                      const std::vector<int>& qubits,
                                                      int n_qubits, int j) {
  const int k = int(qubits.size());
  if (op.rows != (1 << k) || op.cols != (1 << k))
    throw std::invalid_argument("apply_embedded: operator/qubit-count mismatch");
  for (int q = 0; q < k; ++q) {
    if (qubits[q] < 1 || qubits[q] > n_qubits)
      throw std::invalid_argument("apply_embedded: qubit out of range");
    if (q > 0 && qubits[q] <= qubits[q - 1])
      throw std::invalid_argument("apply_embedded: qubits must be ascending");
  }
  int sub = 0;   // op-space column index extracted from j
  int mask = 0;  // bits of the full space covered by `qubits`
  for (int q = 0; q < k; ++q) {
    int shift = n_qubits - qubits[q];
    mask |= 1 << shift;
    sub = (sub << 1) | ((j >> shift) & 1);
  }
  const int rest = j & ~mask;
  std::vector<std::pair<int, cx>> out;
  for (int r = 0; r < op.rows; ++r) {
    cx v = op(r, sub);
    if (v == cx(0.0)) continue;
    int i = rest;
    for (int q = 0; q < k; ++q) {
      int bit = (r >> (k - 1 - q)) & 1;
      i |= bit << (n_qubits - qubits[q]);
    }
    out.emplace_back(i, v);
  }
  return out;
}

}  // namespace hqcdfs
