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

#include "uur/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace uur {

namespace {

constexpr double kLemmaTol = 1e-6;

void validate_region(const BasisPair& pair, const IndexRegion& region) {
  for (const Cell& c : region.cells()) {
    if (c.row > pair.dim() || c.col > pair.dim()) {
      throw Error(ErrorKind::IndexOutOfRange, "region cell outside the d x d grid");
    }
  }
}

double objective(const BasisPair& pair, const IndexRegion& region, const StateVector& psi) {
  const ProbabilityVector p = probabilities(pair, psi, Basis::A);
  const ProbabilityVector q = probabilities(pair, psi, Basis::B);
  double f = 0.0;
  for (const Cell& c : region.cells()) f += p[c.row - 1] * q[c.col - 1];
  return f;
}

// M(psi) = 1/2 sum_{(m,n)} (q_n |a_m><a_m| + p_m |b_n><b_n|), in the A basis.
ComplexMatrix ascent_operator(const BasisPair& pair, const IndexRegion& region,
                              const StateVector& psi) {
  const int d = pair.dim();
  const ComplexMatrix& u = pair.overlap_unitary();
  const ProbabilityVector p = probabilities(pair, psi, Basis::A);
  const ProbabilityVector q = probabilities(pair, psi, Basis::B);

  ComplexMatrix m(d, d);
  for (const Cell& c : region.cells()) {
    const int row = c.row - 1;
    const int col = c.col - 1;
    m(row, row) += 0.5 * q[col];
    const double weight = 0.5 * p[row];
    for (int r = 0; r < d; ++r) {
      const Complex ur = weight * u(r, col);
      for (int cc = 0; cc < d; ++cc) m(r, cc) += ur * std::conj(u(cc, col));
    }
  }
  for (int r = 0; r < d; ++r) {
    m(r, r) = Complex(m(r, r).real(), 0.0);
    for (int cc = r + 1; cc < d; ++cc) {
      const Complex avg = 0.5 * (m(r, cc) + std::conj(m(cc, r)));
      m(r, cc) = avg;
      m(cc, r) = std::conj(avg);
    }
  }
  return m;
}

}  // namespace

std::pair<double, bool> region_max_with_status(const BasisPair& pair, const IndexRegion& region,
                                               const OracleOptions& opts) {
  if (pair.dim() > 5) {
    throw Error(ErrorKind::DimensionCapExceeded, "region_max supports d <= 5");
  }
  if (opts.starts < 1) {
    throw Error(ErrorKind::InvalidParameter, "at least one start is required");
  }
  validate_region(pair, region);

  Rng rng(opts.seed);
  double best = 0.0;
  bool all_converged = true;
  for (int start = 0; start < opts.starts; ++start) {
    StateVector psi = sample_haar_state(pair.dim(), rng);
    double f = objective(pair, region, psi);
    double f_two_back = -1.0;
    best = std::max(best, f);
    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
      psi = hermitian_top_eigenvector(ascent_operator(pair, region, psi));
      const double next = objective(pair, region, psi);
      best = std::max(best, next);
      // Degenerate spectra can trap the iterate in a period-2 orbit; either
      // stall condition means no further ascent is possible.
      if (std::abs(next - f) < opts.tol || std::abs(next - f_two_back) < opts.tol) {
        converged = true;
        break;
      }
      f_two_back = f;
      f = next;
    }
    all_converged = all_converged && converged;
  }
  return {best, all_converged};
}

double region_max(const BasisPair& pair, const IndexRegion& region, const OracleOptions& opts) {
  return region_max_with_status(pair, region, opts).first;
}

namespace {

// All C(d^2, k) cell subsets, cells ordered row-major, subsets in colex order.
std::vector<IndexRegion> all_regions(int d, int k) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(d) * d);
  for (int r = 1; r <= d; ++r)
    for (int c = 1; c <= d; ++c) cells.push_back({r, c});

  std::vector<IndexRegion> out;
  for_each_subset(d * d, k, [&](std::span<const int> subset) {
    std::vector<Cell> chosen;
    chosen.reserve(subset.size());
    for (int idx : subset) chosen.push_back(cells[static_cast<size_t>(idx - 1)]);
    out.emplace_back(std::move(chosen));
  });
  return out;
}

std::vector<IndexRegion> partition_family(int d, int k) {
  std::vector<IndexRegion> out;
  for (const Partition& p : partitions_of(k, d)) {
    for (IndexRegion& region : relabeled_partition_regions(p, d)) {
      out.push_back(std::move(region));
    }
  }
  return out;
}

}  // namespace

OracleReport brute_force_omega_k(const BasisPair& pair, int k, RegionFamily family,
                                 const OracleOptions& opts) {
  const int d = pair.dim();
  if (k < 1 || k > d) {
    throw Error(ErrorKind::OutOfRange, "k must lie in [1, d]");
  }
  if (family == RegionFamily::Exhaustive && d > 3) {
    throw Error(ErrorKind::DimensionCapExceeded,
                "exhaustive region enumeration supports d <= 3");
  }
  if (family == RegionFamily::PartitionShaped && d > 5) {
    throw Error(ErrorKind::DimensionCapExceeded,
                "partition-shaped enumeration supports d <= 5");
  }

  OracleReport report;
  report.k = k;
  report.exhaustive = (family == RegionFamily::Exhaustive);
  report.starts_used = opts.starts;
  report.converged = true;

  double partition_best = 0.0;
  const std::vector<IndexRegion> regions = report.exhaustive
                                               ? all_regions(d, k)
                                               : partition_family(d, k);
  for (const IndexRegion& region : regions) {
    const auto [value, converged] = region_max_with_status(pair, region, opts);
    report.converged = report.converged && converged;
    if (is_partition_shaped_up_to_relabeling(region)) {
      partition_best = std::max(partition_best, value);
    }
    if (!report.best_region || value > report.oracle_value) {
      report.oracle_value = value;
      report.best_region = region;
    }
  }

  const NormTable table = build_norm_table(pair);
  report.formula_value = omega_k(k, table).first;
  report.gap = report.formula_value - report.oracle_value;
  report.best_region_is_partition_shaped = partition_best >= report.oracle_value - kLemmaTol;
  return report;
}

MixedCheckResult mixed_state_spot_check(const BasisPair& pair, const IndexRegion& region,
                                        int trials, std::uint64_t seed) {
  const int d = pair.dim();
  if (d > 4) {
    throw Error(ErrorKind::DimensionCapExceeded, "mixed-state spot check supports d <= 4");
  }
  validate_region(pair, region);
  if (trials < 0) {
    throw Error(ErrorKind::InvalidParameter, "trials must be nonnegative");
  }
  if (trials == 0) {
    return {0.0, true};
  }

  Rng rng(seed);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    // Mixture of d Haar pure states with exponential (flat Dirichlet) weights.
    std::vector<StateVector> components;
    std::vector<double> weights;
    double total = 0.0;
    for (int i = 0; i < d; ++i) {
      components.push_back(sample_haar_state(d, rng));
      const double w = -std::log(rng.uniform());
      weights.push_back(w);
      total += w;
    }
    std::vector<double> p(static_cast<size_t>(d), 0.0);
    std::vector<double> q(static_cast<size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) {
      const double w = weights[static_cast<size_t>(i)] / total;
      const ProbabilityVector pi = probabilities(pair, components[static_cast<size_t>(i)], Basis::A);
      const ProbabilityVector qi = probabilities(pair, components[static_cast<size_t>(i)], Basis::B);
      for (int j = 0; j < d; ++j) {
        p[static_cast<size_t>(j)] += w * pi[j];
        q[static_cast<size_t>(j)] += w * qi[j];
      }
    }
    double f = 0.0;
    for (const Cell& c : region.cells()) f += p[static_cast<size_t>(c.row - 1)] * q[static_cast<size_t>(c.col - 1)];
    best = std::max(best, f);
  }
  return {best, false};
}

}  // namespace uur
