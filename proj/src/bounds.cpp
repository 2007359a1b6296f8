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

#include "uur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace uur {

double mu_bound(double c, LogBase base) {
  if (!(c > 0.0) || c > 1.0) {
    throw Error(ErrorKind::OutOfRange, "overlap c must lie in (0, 1]");
  }
  const double nats = -2.0 * std::log(c) + 0.0;  // +0.0 normalizes -0.0 at c = 1
  return base == LogBase::Natural ? nats : nats / std::numbers::ln2;
}

const char* branch_name(PiecewiseBranch branch) noexcept {
  switch (branch) {
    case PiecewiseBranch::MuBranch: return "MU_branch";
    case PiecewiseBranch::MiddleUnavailable: return "middle_unavailable";
    case PiecewiseBranch::GBranch: return "G_branch";
  }
  return "unknown";
}

namespace {

PiecewiseBranch classify_branch(double c) {
  constexpr double kBoundaryTol = 1e-12;
  if (c <= std::numbers::sqrt2 / 2.0 + kBoundaryTol) return PiecewiseBranch::MuBranch;
  if (c >= kBranchCrossover - kBoundaryTol) return PiecewiseBranch::GBranch;
  return PiecewiseBranch::MiddleUnavailable;
}

}  // namespace

BoundReport jpdd_bound(const BasisPair& pair, const UncertaintyMeasure& m, int dim_cap) {
  BoundReport report;
  report.measure = m;
  report.c = overlap_stats(pair).c;
  report.b_mu = mu_bound(report.c, m.log_base);

  auto [omega, table] = omega_vector(pair, dim_cap);
  report.b_jpdd = measure_value(m, std::span<const double>(omega.entries));
  report.omega = std::move(omega);
  report.warnings = table.warnings;
  report.table = std::move(table);

  report.piecewise_branch = classify_branch(report.c);
  if (m.kind != MeasureKind::Shannon) {
    report.piecewise_value = report.b_jpdd;
  } else {
    switch (report.piecewise_branch) {
      case PiecewiseBranch::MuBranch:
        report.piecewise_value = report.b_mu;
        break;
      case PiecewiseBranch::MiddleUnavailable:
        report.piecewise_value = std::max(report.b_mu, report.b_jpdd);
        report.warnings.push_back(
            "middle branch H_1(c) unavailable; reporting max(b_mu, b_jpdd)");
        break;
      case PiecewiseBranch::GBranch:
        report.piecewise_value = report.b_jpdd;
        break;
    }
  }
  return report;
}

VerificationReport verify_uur(const BasisPair& pair, int samples, std::uint64_t seed,
                              double tol, int dim_cap) {
  if (samples < 1) {
    throw Error(ErrorKind::InvalidParameter, "at least one sample is required");
  }

  const auto [omega, table] = omega_vector(pair, dim_cap);
  const double h_omega = shannon_nats(omega.entries);

  VerificationReport report;
  report.samples = samples;
  report.seed = seed;
  report.worst_prefix_deficit = -std::numeric_limits<double>::infinity();
  report.worst_entropy_gap = -std::numeric_limits<double>::infinity();

  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const StateVector psi = sample_haar_state(pair.dim(), rng);
    const ProbabilityVector p = probabilities(pair, psi, Basis::A);
    const ProbabilityVector q = probabilities(pair, psi, Basis::B);
    const ProbabilityVector joint = tensor_distribution(p, q);

    const double deficit = majorization_deficit(omega.entries, joint.weights());
    if (deficit > report.worst_prefix_deficit) {
      report.worst_prefix_deficit = deficit;
      report.worst_majorization_sample = i;
    }
    if (deficit > tol) ++report.violations_majorization;

    const double gap =
        h_omega - (shannon_nats(p.weights()) + shannon_nats(q.weights()));
    if (gap > report.worst_entropy_gap) {
      report.worst_entropy_gap = gap;
      report.worst_entropy_sample = i;
    }
    if (gap > tol) ++report.violations_entropy;
  }
  return report;
}

}  // namespace uur
