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

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqcdfs {

using cx = std::complex<double>;
using CVector = std::vector<cx>;

constexpr int kMaxQubits = 12;  // hard cap: 2^12-dimensional operators

struct Tolerances {
  double herm = 1e-9;
  double unit = 1e-9;
  double eig = 1e-10;
};

/// Dense row-major complex matrix. Value type, no aliasing.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cx> data;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * std::size_t(c)) {
    if (r < 0 || c < 0) throw std::invalid_argument("ComplexMatrix: negative dimension");
  }

  cx& operator()(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const cx& operator()(int r, int c) const { return data[std::size_t(r) * cols + c]; }

  bool square() const { return rows == cols; }

  static ComplexMatrix zero(int r, int c) { return ComplexMatrix(r, c); }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  // rows given as nested initializer lists; all rows must have equal length
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cx>> rs) {
    int r = int(rs.size());
    int c = r > 0 ? int(rs.begin()->size()) : 0;
    ComplexMatrix m(r, c);
    int i = 0;
    for (const auto& row : rs) {
      if (int(row.size()) != c) throw std::invalid_argument("from_rows: ragged rows");
      int j = 0;
      for (cx v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }
};

inline void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "add");
  ComplexMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
  return c;
}

inline ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "sub");
  ComplexMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
  return c;
}

inline ComplexMatrix scale(cx s, const ComplexMatrix& a) {
  ComplexMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = s * a.data[i];
  return c;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimension mismatch");
  ComplexMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    cx* ci = &c.data[std::size_t(i) * c.cols];
    for (int k = 0; k < a.cols; ++k) {
      cx aik = a(i, k);
      if (aik == cx(0.0)) continue;
      const cx* bk = &b.data[std::size_t(k) * b.cols];
      for (int j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

inline ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix c(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c(j, i) = std::conj(a(i, j));
  return c;
}

/// Kronecker product; the first factor is the leftmost (most significant) one.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows * b.rows, a.cols * b.cols);
  for (int i1 = 0; i1 < a.rows; ++i1)
    for (int j1 = 0; j1 < a.cols; ++j1) {
      cx v = a(i1, j1);
      if (v == cx(0.0)) continue;
      for (int i2 = 0; i2 < b.rows; ++i2)
        for (int j2 = 0; j2 < b.cols; ++j2)
          c(i1 * b.rows + i2, j1 * b.cols + j2) = v * b(i2, j2);
    }
  return c;
}

inline cx trace(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("trace: non-square");
  cx t = 0.0;
  for (int i = 0; i < a.rows; ++i) t += a(i, i);
  return t;
}

/// max_{i,j} |A_{ij}|
inline double matrix_norm_max(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cx& v : a.data) m = std::max(m, std::abs(v));
  return m;
}

inline double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const cx& v : a.data) s += std::norm(v);
  return std::sqrt(s);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

inline double hermiticity_residual(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("hermiticity_residual: non-square");
  double m = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j <= i; ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = Tolerances{}.herm) {
  return a.square() && hermiticity_residual(a) <= tol;
}

/// ||A^dag A - I||_max
inline double unitarity_residual(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("unitarity_residual: non-square");
  return max_abs_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.rows));
}

inline bool is_unitary(const ComplexMatrix& a, double tol = Tolerances{}.unit) {
  return a.square() && unitarity_residual(a) <= tol;
}

inline CVector matvec(const ComplexMatrix& a, const CVector& v) {
  if (a.cols != int(v.size())) throw std::invalid_argument("matvec: dimension mismatch");
  CVector r(a.rows, cx(0.0));
  for (int i = 0; i < a.rows; ++i) {
    const cx* ai = &a.data[std::size_t(i) * a.cols];
    cx s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += ai[j] * v[j];
    r[i] = s;
  }
  return r;
}

inline CVector basis_vector(int dim, int index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("basis_vector: index out of range");
  CVector v(dim, cx(0.0));
  v[index] = 1.0;
  return v;
}

/// <a|b> with the first argument conjugated
inline cx vdot(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vdot: dimension mismatch");
  cx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double vnorm(const CVector& a) { return std::sqrt(std::abs(vdot(a, a))); }

inline CVector vadd(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vadd: dimension mismatch");
  CVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline CVector vscale(cx s, const CVector& a) {
  CVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline CVector vkron(const CVector& a, const CVector& b) {
  CVector r(a.size() * b.size());
  std::size_t k = 0;
  for (const cx& x : a)
    for (const cx& y : b) r[k++] = x * y;
  return r;
}

/// |a><b|
inline ComplexMatrix outer(const CVector& a, const CVector& b) {
  ComplexMatrix m(int(a.size()), int(b.size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

inline ComplexMatrix column_matrix(const std::vector<CVector>& cols) {
  if (cols.empty()) throw std::invalid_argument("column_matrix: no columns");
  int n = int(cols.front().size());
  ComplexMatrix m(n, int(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (int(cols[j].size()) != n) throw std::invalid_argument("column_matrix: ragged columns");
    for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace hqcdfs
