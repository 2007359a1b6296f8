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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "uur/jpdd.hpp"

namespace uur {

/// Memoized squared operator norms: value(r, s) is the maximum over all
/// subsets |R| = r, |S| = s of lambda_max(P_R + Q_S)^2.
class NormTable {
 public:
  NormTable(int dim, std::vector<double> values);

  int dim() const noexcept { return dim_; }
  double value(int r, int s) const;

 private:
  int dim_;
  std::vector<double> values_;  // (d+1) x (d+1), row-major
};

/// Per-k maxima of the telescoped partition values, plus the raw data the
/// monotone envelope was built from.
struct OmegaTable {
  int dim = 0;
  std::vector<double> omega_k;      // enveloped and clamped to [0, 1]
  std::vector<double> raw_omega_k;  // direct partition maxima
  std::vector<Partition> argmax_partition;
  std::map<Partition, double> per_partition;
  std::vector<std::string> warnings;  // envelope/clamp corrections > 1e-6
};

/// The d^2-length increment vector (Omega_1, Omega_2 - Omega_1, ..., 0...).
struct MajorizationVector {
  std::vector<double> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  double sum() const;
};

inline constexpr int kDefaultNormTableDimCap = 8;

/// Enumerates all C(d,r) * C(d,s) subset pairs per cell (colexicographic
/// order) and caches the maxima. Cost grows combinatorially, hence the cap.
NormTable build_norm_table(const BasisPair& pair, int dim_cap = kDefaultNormTableDimCap);

/// Telescoped value of one partition:
/// (1/4) [ N(1, k_1) + sum_{i=2..n} (N(i, k_i) - N(i-1, k_i)) ].
double omega_partition_value(const Partition& p, const NormTable& table);

/// Maximum of omega_partition_value over partitions_of(k, d); ties resolve to
/// the first partition in enumeration order.
std::pair<double, Partition> omega_k(int k, const NormTable& table);

/// Full pipeline: all Omega_k, monotone envelope + [0,1] clamp (corrections
/// beyond 1e-6 are recorded as warnings, not hidden), then first differences
/// zero-padded to length d^2.
std::pair<MajorizationVector, OmegaTable> omega_vector(const BasisPair& pair,
                                                       int dim_cap = kDefaultNormTableDimCap);

/// Visits fixed-size index subsets of {1..d} in colexicographic order.
void for_each_subset(int d, int size, const std::function<void(std::span<const int>)>& fn);

}  // namespace uur
