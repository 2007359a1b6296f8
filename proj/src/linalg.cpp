// Copyright 2026 uur contributors
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

#include "uur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uur {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnsortedInput: return "UnsortedInput";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorKind::InvalidParameter, "matrix dimensions must be nonnegative");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
  }
  ComplexMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (int c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix comparison dimension mismatch");
  }
  double worst = 0.0;
  for (size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

double ComplexMatrix::self_adjoint_deviation() const {
  if (!is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "self-adjointness requires a square matrix");
  }
  double worst = 0.0;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r; c < cols_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) {
    throw Error(ErrorKind::InvalidParameter, "cannot normalize a zero vector");
  }
  for (Complex& a : amplitudes) a /= n;
}

namespace {

constexpr double kSelfAdjointTol = 1e-10;
constexpr int kMaxSweeps = 60;

// One cyclic Jacobi pass: annihilate each off-diagonal (p, q), p < q, in
// row-major order with a unitary 2x2 rotation, accumulating eigenvectors in v.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const int n = a.rows();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double mod = std::abs(apq);
      if (mod == 0.0) continue;

      const double alpha = a(p, p).real();
      const double beta = a(q, q).real();
      // Zero a(p,q): with s = t*c*phase, t solves t^2 + 2*tau*t - 1 = 0.
      const double tau = (beta - alpha) / (2.0 * mod);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const Complex phase = apq / mod;
      const Complex s = t * c * phase;
      const Complex sconj = std::conj(s);

      // Columns p, q of A <- A * J, with J = [[c, s], [-conj(s), c]].
      for (int r = 0; r < n; ++r) {
        const Complex arp = a(r, p);
        const Complex arq = a(r, q);
        a(r, p) = c * arp - sconj * arq;
        a(r, q) = s * arp + c * arq;
      }
      // Rows p, q of A <- J^dagger * A.
      for (int col = 0; col < n; ++col) {
        const Complex apc = a(p, col);
        const Complex aqc = a(q, col);
        a(p, col) = c * apc - s * aqc;
        a(q, col) = sconj * apc + c * aqc;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = Complex(a(p, p).real(), 0.0);
      a(q, q) = Complex(a(q, q).real(), 0.0);

      for (int r = 0; r < n; ++r) {
        const Complex vrp = v(r, p);
        const Complex vrq = v(r, q);
        v(r, p) = c * vrp - sconj * vrq;
        v(r, q) = s * vrp + c * vrq;
      }
    }
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.rows();
  for (int p = 0; p < n - 1; ++p)
    for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(a(p, q));
  return std::sqrt(s);
}

double matrix_scale(const ComplexMatrix& a) {
  double scale = 0.0;
  for (const Complex& z : a.flat()) scale = std::max(scale, std::abs(z));
  return scale;
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "eigensystem requires a square matrix");
  }
  if (!m.all_finite()) {
    throw Error(ErrorKind::NonFinite, "matrix has non-finite entries");
  }
  if (m.self_adjoint_deviation() > kSelfAdjointTol) {
    throw Error(ErrorKind::NotSelfAdjoint, "matrix is not self-adjoint within 1e-10");
  }

  const int n = m.rows();
  // Symmetrize to suppress rounding drift before rotating.
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = matrix_scale(a);
  const double stop = std::max({tol, scale * 1e-15, std::numeric_limits<double>::min()});
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > stop; ++sweep) {
    jacobi_sweep(a, v);
  }

  EigenSystem result;
  result.eigenvalues.resize(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&diag](int lhs, int rhs) { return diag[lhs] < diag[rhs]; });

  result.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    result.eigenvalues[j] = diag[order[j]];
    for (int r = 0; r < n; ++r) result.eigenvectors(r, j) = v(r, order[j]);
  }
  return result;
}

double hermitian_max_eigenvalue(const ComplexMatrix& m, double tol) {
  const EigenSystem sys = hermitian_eigensystem(m, tol);
  return sys.eigenvalues.empty() ? 0.0 : sys.eigenvalues.back();
}

StateVector hermitian_top_eigenvector(const ComplexMatrix& m, double tol) {
  const EigenSystem sys = hermitian_eigensystem(m, tol);
  const int n = m.rows();
  StateVector psi;
  psi.amplitudes.resize(n);
  for (int r = 0; r < n; ++r) psi.amplitudes[r] = sys.eigenvectors(r, n - 1);

  // Phase convention: largest-modulus component real nonnegative.
  int pivot = 0;
  double best = -1.0;
  for (int r = 0; r < n; ++r) {
    const double mod = std::abs(psi.amplitudes[r]);
    if (mod > best) {
      best = mod;
      pivot = r;
    }
  }
  if (best > 0.0) {
    const Complex rot = std::conj(psi.amplitudes[pivot]) / best;
    for (Complex& z : psi.amplitudes) z *= rot;
  }
  psi.normalize();
  return psi;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square() || u.rows() == 0) return false;
  if (!u.all_finite()) return false;
  const ComplexMatrix gram = u.adjoint() * u;
  return gram.max_abs_diff(ComplexMatrix::identity(u.rows())) <= tol;
}

ComplexMatrix projector_sum(const ComplexMatrix& overlap_unitary,
                            std::span<const int> r_indices,
                            std::span<const int> s_indices) {
  const int d = overlap_unitary.rows();
  auto check = [d](std::span<const int> set, const char* name) {
    for (size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > d) {
        throw Error(ErrorKind::IndexOutOfRange,
                    std::string(name) + " index out of range [1, d]");
      }
      for (size_t j = i + 1; j < set.size(); ++j) {
        if (set[i] == set[j]) {
          throw Error(ErrorKind::InvalidParameter,
                      std::string(name) + " indices must be distinct");
        }
      }
    }
  };
  check(r_indices, "R");
  check(s_indices, "S");

  // Canonical accumulation order, so permutations of R or S are bit-identical.
  std::vector<int> r_sorted(r_indices.begin(), r_indices.end());
  std::vector<int> s_sorted(s_indices.begin(), s_indices.end());
  std::sort(r_sorted.begin(), r_sorted.end());
  std::sort(s_sorted.begin(), s_sorted.end());

  ComplexMatrix out(d, d);
  for (int m : r_sorted) out(m - 1, m - 1) += 1.0;
  for (int n : s_sorted) {
    for (int r = 0; r < d; ++r) {
      const Complex ur = overlap_unitary(r, n - 1);
      for (int c = 0; c < d; ++c) {
        out(r, c) += ur * std::conj(overlap_unitary(c, n - 1));
      }
    }
  }
  // Exact Hermitian symmetry regardless of rounding in the outer products.
  for (int r = 0; r < d; ++r) {
    out(r, r) = Complex(out(r, r).real(), 0.0);
    for (int c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = avg;
      out(c, r) = std::conj(avg);
    }
  }
  return out;
}

double gram_schmidt_columns(ComplexMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "Gram-Schmidt expects a square matrix");
  }
  const int d = m.rows();
  double deviation = 0.0;
  {
    const ComplexMatrix gram = m.adjoint() * m;
    deviation = gram.max_abs_diff(ComplexMatrix::identity(d));
  }
  for (int j = 0; j < d; ++j) {
    // Two projection passes keep orthogonality near machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Complex overlap = 0.0;
        for (int r = 0; r < d; ++r) overlap += std::conj(m(r, i)) * m(r, j);
        for (int r = 0; r < d; ++r) m(r, j) -= overlap * m(r, i);
      }
    }
    double nrm = 0.0;
    for (int r = 0; r < d; ++r) nrm += std::norm(m(r, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) {
      throw Error(ErrorKind::InvalidParameter,
                  "columns are linearly dependent; cannot orthonormalize");
    }
    for (int r = 0; r < d; ++r) m(r, j) /= nrm;
  }
  return deviation;
}

}  // namespace uur
