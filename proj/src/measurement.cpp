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

#include "uur/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uur {

BasisPair::BasisPair(ComplexMatrix overlap_unitary) : unitary_(std::move(overlap_unitary)) {
  if (!unitary_.is_square() || unitary_.rows() < 2) {
    throw Error(ErrorKind::InvalidParameter, "basis pair requires a square unitary with d >= 2");
  }
  if (!is_unitary(unitary_, 1e-8)) {
    throw Error(ErrorKind::InvalidParameter,
                "overlap matrix is not unitary within tolerance 1e-8");
  }
}

ProbabilityVector::ProbabilityVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw Error(ErrorKind::InvalidParameter, "probability vector must be nonempty");
  }
  double total = 0.0;
  for (double& w : weights_) {
    if (!std::isfinite(w)) {
      throw Error(ErrorKind::NonFinite, "probability weight is not finite");
    }
    if (w < 0.0) {
      if (w < -1e-12) {
        throw Error(ErrorKind::InvalidParameter, "probability weight below -1e-12");
      }
      w = 0.0;
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidParameter, "probability weights must sum to 1 within 1e-9");
  }
}

ComplexMatrix overlap_matrix(const BasisPair& pair) {
  const int d = pair.dim();
  ComplexMatrix out(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = std::abs(pair.overlap_unitary()(m, n));
  return out;
}

OverlapStats overlap_stats(const BasisPair& pair) {
  const int d = pair.dim();
  const ComplexMatrix& u = pair.overlap_unitary();

  std::vector<std::vector<double>> sq(d, std::vector<double>(d));
  double c = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      sq[m][n] = std::norm(u(m, n));
      c = std::max(c, std::sqrt(sq[m][n]));
    }
  }

  double c21 = 0.0;  // one row, two columns
  double c22 = 0.0;  // one column, two rows
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int n2 = n + 1; n2 < d; ++n2)
        c21 = std::max(c21, std::sqrt(sq[m][n] + sq[m][n2]));
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      for (int m2 = m + 1; m2 < d; ++m2)
        c22 = std::max(c22, std::sqrt(sq[m][n] + sq[m2][n]));

  OverlapStats stats{c, c21, c22, std::max(c21, c22)};
  // Consistency guards: c >= 1/sqrt(d) by pigeonhole, c <= 1, c' >= c.
  if (stats.c < 1.0 / std::sqrt(static_cast<double>(d)) - 1e-9 || stats.c > 1.0 + 1e-9 ||
      stats.c_prime < stats.c - 1e-12) {
    throw Error(ErrorKind::InvalidParameter, "overlap statistics violate unitarity bounds");
  }
  stats.c = std::min(stats.c, 1.0);
  return stats;
}

ProbabilityVector probabilities(const BasisPair& pair, const StateVector& psi, Basis which) {
  const int d = pair.dim();
  if (psi.dim() != d) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension does not match basis pair");
  }
  std::vector<double> w(static_cast<size_t>(d));
  if (which == Basis::A) {
    for (int m = 0; m < d; ++m) w[m] = std::norm(psi.amplitudes[m]);
  } else {
    const ComplexMatrix& u = pair.overlap_unitary();
    for (int n = 0; n < d; ++n) {
      Complex amp = 0.0;
      for (int m = 0; m < d; ++m) amp += std::conj(u(m, n)) * psi.amplitudes[m];
      w[n] = std::norm(amp);
    }
  }
  return ProbabilityVector(std::move(w));
}

double Rng::uniform() {
  // 53-bit mantissa, shifted into (0, 1].
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::standard_complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

StateVector sample_haar_state(int dim, Rng& rng) {
  if (dim < 1) {
    throw Error(ErrorKind::InvalidParameter, "state dimension must be >= 1");
  }
  StateVector psi;
  psi.amplitudes.resize(static_cast<size_t>(dim));
  for (Complex& a : psi.amplitudes) a = rng.standard_complex_gaussian();
  psi.normalize();
  return psi;
}

StateVector sample_haar_state(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_haar_state(dim, rng);
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorKind::InvalidParameter, "unitary dimension must be >= 1");
  }
  Rng rng(seed);
  ComplexMatrix g(dim, dim);
  // Column-major fill so each column is an independent Gaussian vector.
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) g(r, c) = rng.standard_complex_gaussian();
  gram_schmidt_columns(g);
  return g;
}

}  // namespace uur
