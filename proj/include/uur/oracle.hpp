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
#include <optional>

#include "uur/omega.hpp"

namespace uur {

/// Which family of k-cell regions the brute-force search enumerates.
enum class RegionFamily {
  Exhaustive,       // all C(d^2, k) cell subsets; d <= 3
  PartitionShaped,  // relabeled partition diagrams only; d <= 5
};

struct OracleOptions {
  int starts = 64;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int max_iterations = 500;
};

struct OracleReport {
  int k = 0;
  double oracle_value = 0.0;
  double formula_value = 0.0;
  double gap = 0.0;  // formula - oracle, sign preserved
  std::optional<IndexRegion> best_region;
  bool best_region_is_partition_shaped = false;
  bool exhaustive = false;
  int starts_used = 0;
  bool converged = false;
};

struct MixedCheckResult {
  double value = 0.0;
  bool empty_trials = false;
};

/// Best value of f(psi) = sum_{(m,n) in region} p_m(psi) q_n(psi) over
/// multi-start fixed-point ascent: psi is repeatedly replaced by the top
/// eigenvector of M(psi) = 1/2 sum (q_n A_m + p_m B_n) until f stalls.
double region_max(const BasisPair& pair, const IndexRegion& region, const OracleOptions& opts);

/// region_max plus a converged flag (true iff every start stalled within the
/// iteration budget).
std::pair<double, bool> region_max_with_status(const BasisPair& pair, const IndexRegion& region,
                                               const OracleOptions& opts);

/// Maximizes region_max over the requested region family, compares with the
/// closed formula via the norm table, and checks whether the best value is
/// attained by a partition-shaped region within 1e-6 (the Lemma property).
OracleReport brute_force_omega_k(const BasisPair& pair, int k, RegionFamily family,
                                 const OracleOptions& opts);

/// Max of f over random mixed states (Dirichlet-weighted Haar mixtures).
/// Expected not to exceed the pure-state maximum; exceedances are the
/// caller's finding to report, never an error here.
MixedCheckResult mixed_state_spot_check(const BasisPair& pair, const IndexRegion& region,
                                        int trials, std::uint64_t seed);

}  // namespace uur
