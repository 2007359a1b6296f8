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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "uur/error.hpp"

namespace uur {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Dimensions are tiny throughout (d <= ~8),
/// so everything is value-semantic and heap-light.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int dim);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  bool all_finite() const noexcept;
  /// max_ij |A_ij - B_ij|
  double max_abs_diff(const ComplexMatrix& other) const;
  /// max_ij |(A - A^dagger)_ij|
  double self_adjoint_deviation() const;

  std::span<const Complex> flat() const noexcept { return data_; }
  std::span<Complex> flat() noexcept { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// Pure state amplitudes in the A eigenbasis.
struct StateVector {
  std::vector<Complex> amplitudes;

  int dim() const noexcept { return static_cast<int>(amplitudes.size()); }
  double norm() const;
  void normalize();
};

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

/// Full eigendecomposition of a self-adjoint matrix by cyclic Jacobi with
/// complex 2x2 rotations. Fixed sweep order, so identical inputs give
/// bit-identical results on one platform. The input is symmetrized as
/// (M + M^dagger)/2 first; asymmetry beyond 1e-10 entrywise is rejected.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double tol = 1e-12);

/// Largest eigenvalue of a self-adjoint matrix, accurate to tol.
double hermitian_max_eigenvalue(const ComplexMatrix& m, double tol = 1e-12);

/// Unit-norm eigenvector for the largest eigenvalue, phase-fixed so the
/// largest-modulus component is real nonnegative.
StateVector hermitian_top_eigenvector(const ComplexMatrix& m, double tol = 1e-12);

/// True iff max-entry deviation of U^dagger U from the identity is <= tol.
/// Non-square input returns false.
bool is_unitary(const ComplexMatrix& u, double tol = 1e-8);

/// P_R + Q_S in the A eigenbasis: P_R diagonal with ones at R,
/// Q_S = sum_{n in S} u_n u_n^dagger with u_n the n-th column of the overlap
/// unitary. Indices are 1-based and must be distinct within each set.
ComplexMatrix projector_sum(const ComplexMatrix& overlap_unitary,
                            std::span<const int> r_indices,
                            std::span<const int> s_indices);

/// In-place Gram-Schmidt on the columns, in column order. Returns the
/// max-entry deviation of U^dagger U from the identity before correction.
double gram_schmidt_columns(ComplexMatrix& m);

}  // namespace uur
