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

#include "uur/omega.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace uur {

NormTable::NormTable(int dim, std::vector<double> values) : dim_(dim), values_(std::move(values)) {
  if (dim_ < 1 || values_.size() != static_cast<size_t>(dim_ + 1) * (dim_ + 1)) {
    throw Error(ErrorKind::InvalidParameter, "norm table size must be (d+1) x (d+1)");
  }
}

double NormTable::value(int r, int s) const {
  if (r < 0 || r > dim_ || s < 0 || s > dim_) {
    throw Error(ErrorKind::IndexOutOfRange, "norm table lookup outside [0, d]");
  }
  return values_[static_cast<size_t>(r) * (dim_ + 1) + s];
}

double MajorizationVector::sum() const {
  double total = 0.0;
  for (double x : entries) total += x;
  return total;
}

void for_each_subset(int d, int size, const std::function<void(std::span<const int>)>& fn) {
  if (size == 0) {
    fn({});
    return;
  }
  if (size < 0 || size > d) return;  // no subsets of that size
  std::vector<int> subset(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) subset[i] = i + 1;
  while (true) {
    fn(subset);
    // Colex advance: bump the smallest index with headroom, reset below it.
    int i = 0;
    while (i < size) {
      const int limit = (i + 1 < size) ? subset[i + 1] - 1 : d;
      if (subset[i] < limit) break;
      ++i;
    }
    if (i == size) return;
    ++subset[i];
    for (int j = 0; j < i; ++j) subset[j] = j + 1;
  }
}

NormTable build_norm_table(const BasisPair& pair, int dim_cap) {
  const int d = pair.dim();
  if (d > dim_cap) {
    std::ostringstream msg;
    msg << "dimension " << d << " exceeds the norm-table cap " << dim_cap;
    throw Error(ErrorKind::DimensionCapExceeded, msg.str());
  }

  std::vector<double> values(static_cast<size_t>(d + 1) * (d + 1), 0.0);
  for (int r = 0; r <= d; ++r) {
    for (int s = 0; s <= d; ++s) {
      double best = 0.0;
      for_each_subset(d, r, [&](std::span<const int> rset) {
        for_each_subset(d, s, [&](std::span<const int> sset) {
          const ComplexMatrix op = projector_sum(pair.overlap_unitary(), rset, sset);
          const double lam = hermitian_max_eigenvalue(op);
          best = std::max(best, lam * lam);
        });
      });
      values[static_cast<size_t>(r) * (d + 1) + s] = best;
    }
  }
  return NormTable(d, std::move(values));
}

double omega_partition_value(const Partition& p, const NormTable& table) {
  if (!p.fits_in_box(table.dim())) {
    throw Error(ErrorKind::OutOfRange, "partition does not fit the table's box");
  }
  const std::vector<int>& parts = p.parts();
  double bracket = table.value(1, parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) {
    const int row = static_cast<int>(i) + 1;
    bracket += table.value(row, parts[i]) - table.value(row - 1, parts[i]);
  }
  return 0.25 * bracket;
}

std::pair<double, Partition> omega_k(int k, const NormTable& table) {
  const int d = table.dim();
  if (k < 1 || k > d) {
    throw Error(ErrorKind::OutOfRange, "k must lie in [1, d]");
  }
  const std::vector<Partition> candidates = partitions_of(k, d);
  double best = -1.0;
  const Partition* arg = nullptr;
  for (const Partition& p : candidates) {
    const double v = omega_partition_value(p, table);
    if (v > best) {
      best = v;
      arg = &p;
    }
  }
  return {best, *arg};
}

std::pair<MajorizationVector, OmegaTable> omega_vector(const BasisPair& pair, int dim_cap) {
  const int d = pair.dim();
  const NormTable table = build_norm_table(pair, dim_cap);

  OmegaTable out;
  out.dim = d;
  for (int k = 1; k <= d; ++k) {
    for (const Partition& p : partitions_of(k, d)) {
      out.per_partition.emplace(p, omega_partition_value(p, table));
    }
    auto [value, argmax] = omega_k(k, table);
    out.raw_omega_k.push_back(value);
    out.argmax_partition.push_back(argmax);
  }

  // Omega_k is by definition a max over growing families and bounded by 1;
  // restore both properties and surface any correction beyond noise level.
  double running = 0.0;
  for (int k = 1; k <= d; ++k) {
    const double raw = out.raw_omega_k[static_cast<size_t>(k - 1)];
    const double adjusted = std::min(1.0, std::max(running, raw));
    if (std::abs(adjusted - raw) > 1e-6) {
      std::ostringstream msg;
      msg << "Omega_" << k << " adjusted from " << raw << " to " << adjusted
          << " (monotone envelope / [0,1] clamp); argmax partition "
          << out.argmax_partition[static_cast<size_t>(k - 1)].to_string();
      out.warnings.push_back(msg.str());
    }
    out.omega_k.push_back(adjusted);
    running = adjusted;
  }

  MajorizationVector omega;
  omega.entries.assign(static_cast<size_t>(d) * d, 0.0);
  omega.entries[0] = out.omega_k[0];
  for (int k = 2; k <= d; ++k) {
    omega.entries[static_cast<size_t>(k - 1)] =
        out.omega_k[static_cast<size_t>(k - 1)] - out.omega_k[static_cast<size_t>(k - 2)];
  }
  return {std::move(omega), std::move(out)};
}

}  // namespace uur
