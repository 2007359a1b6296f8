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
#include <string>
#include <vector>

#include "uur/majorization.hpp"
#include "uur/omega.hpp"

namespace uur {

/// Piecewise Shannon-bound branch, classified by the overlap c against
/// 1/sqrt(2) and the crossover constant below.
enum class PiecewiseBranch { MuBranch, MiddleUnavailable, GBranch };

/// Crossover overlap between the middle branch and the increment-vector
/// branch of the piecewise Shannon bound.
inline constexpr double kBranchCrossover = 0.834;

struct BoundReport {
  double c = 0.0;
  double b_mu = 0.0;    // -2 log c
  double b_jpdd = 0.0;  // Phi(omega)
  /// Value of the piecewise bound for this branch. Shannon: b_mu on the MU
  /// branch, max(b_mu, b_jpdd) where the middle branch is unavailable,
  /// b_jpdd on the G branch. Other measures: b_jpdd.
  double piecewise_value = 0.0;
  UncertaintyMeasure measure;
  PiecewiseBranch piecewise_branch = PiecewiseBranch::MuBranch;
  MajorizationVector omega;
  OmegaTable table;
  std::vector<std::string> warnings;
};

struct VerificationReport {
  int samples = 0;
  int violations_majorization = 0;
  double worst_prefix_deficit = 0.0;
  int worst_majorization_sample = -1;  // sample index of the worst deficit
  int violations_entropy = 0;
  double worst_entropy_gap = 0.0;  // H(omega) - (H(p) + H(q)), max over samples
  int worst_entropy_sample = -1;
  std::uint64_t seed = 0;
};

/// Maassen-Uffink bound -2 log c in the requested base.
double mu_bound(double c, LogBase base = LogBase::Natural);

const char* branch_name(PiecewiseBranch branch) noexcept;

/// Computes omega, evaluates Phi(omega) alongside the Maassen-Uffink bound,
/// and classifies the piecewise branch. The middle branch's dedicated bound
/// is out of scope, so that branch reports max(b_mu, b_jpdd) with a warning.
BoundReport jpdd_bound(const BasisPair& pair, const UncertaintyMeasure& m,
                       int dim_cap = kDefaultNormTableDimCap);

/// Haar-samples pure states and audits both the majorization relation
/// p (x) q < omega and the Shannon instance H(p) + H(q) >= H(omega).
/// Violations are counted, never fatal. Deterministic given the seed.
VerificationReport verify_uur(const BasisPair& pair, int samples, std::uint64_t seed,
                              double tol = 1e-9, int dim_cap = kDefaultNormTableDimCap);

}  // namespace uur
