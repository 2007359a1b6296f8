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

#include <cstdint>
#include <random>
#include <vector>

#include "uur/linalg.hpp"

namespace uur {

/// Two orthonormal bases of a d-dimensional space, encoded by the overlap
/// unitary U with U_mn = <a_m|b_n>. Everything downstream works in the A
/// eigenbasis, where |a_m> = e_m and |b_n> is the n-th column of U.
class BasisPair {
 public:
  /// Validates dim >= 2 and unitarity at tolerance 1e-8.
  explicit BasisPair(ComplexMatrix overlap_unitary);

  int dim() const noexcept { return unitary_.rows(); }
  const ComplexMatrix& overlap_unitary() const noexcept { return unitary_; }

 private:
  ComplexMatrix unitary_;
};

/// Measurement outcome distribution. Entries in [-1e-12, ...) are clamped to
/// zero on construction; the total must be 1 within 1e-9.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> weights);

  int size() const noexcept { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

struct OverlapStats {
  double c;        // max_mn |U_mn|
  double c21;      // max same-row two-column root-sum-square
  double c22;      // max same-column two-row root-sum-square
  double c_prime;  // max(c21, c22)
};

enum class Basis { A, B };

/// Matrix of moduli |U_mn|. Squared entries are doubly stochastic.
ComplexMatrix overlap_matrix(const BasisPair& pair);

OverlapStats overlap_stats(const BasisPair& pair);

/// Outcome distribution of measuring |psi> in basis A (p_m = |psi_m|^2) or
/// basis B (q_n = |<column_n(U), psi>|^2).
ProbabilityVector probabilities(const BasisPair& pair, const StateVector& psi, Basis which);

/// Deterministic stream of doubles/gaussians on top of mt19937_64, so results
/// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in (0, 1].
  double uniform();
  /// Standard normal via Box-Muller.
  double gaussian();
  Complex standard_complex_gaussian();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes,
/// normalized. Reproducible given the seed.
StateVector sample_haar_state(int dim, std::uint64_t seed);
StateVector sample_haar_state(int dim, Rng& rng);

/// Haar-ish random unitary for tests and ensembles: complex Gaussian matrix
/// followed by Gram-Schmidt in deterministic column order.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

inline ComplexMatrix projector_sum(const BasisPair& pair,
                                   std::span<const int> r_indices,
                                   std::span<const int> s_indices) {
  return projector_sum(pair.overlap_unitary(), r_indices, s_indices);
}

}  // namespace uur
