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

#include <compare>
#include <string>
#include <vector>

#include "uur/measurement.hpp"

namespace uur {

/// Young-diagram row lengths (k_1 >= ... >= k_n >= 1), the shape of a
/// joint-probability-diagram region.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept;
  bool fits_in_box(int d) const noexcept;
  std::string to_string() const;  // e.g. "(2,1)"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// 1-based (row, column) cell of the d x d joint probability grid.
struct Cell {
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
};

/// A set of distinct cells. Stored sorted, so equality is set equality.
class IndexRegion {
 public:
  explicit IndexRegion(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  bool contains(Cell c) const;
  std::string to_string() const;

  auto operator<=>(const IndexRegion&) const = default;

 private:
  std::vector<Cell> cells_;
};

/// All partitions of k with at most d rows and parts <= d, in
/// lexicographically descending order. k beyond d*d is rejected.
std::vector<Partition> partitions_of(int k, int d);

/// The partitions reachable from p by adding one box: increment one row or
/// append a new row of length 1, keeping the result a valid partition inside
/// the d x d box. Deduplicated, deterministic order.
std::vector<Partition> successors(const Partition& p, int d);

/// Top-left-anchored cells of the partition: {(i, j) : j <= k_i}.
IndexRegion region_of_partition(const Partition& p);

/// Definition-3 connectedness for descending-sorted p, q: every cell
/// attaining max p_i * q_j over the region must have its upper or left
/// neighbor in the region; row-1/column-1 cells are accepted as anchored.
bool is_connected_region(const IndexRegion& region, const ProbabilityVector& p,
                         const ProbabilityVector& q);

/// True iff the region is a partition shape up to row/column relabeling:
/// the per-row column sets are totally ordered by inclusion. This is the
/// shape class the sorted-probability picture's anchored diagrams map to
/// under arbitrary index labels.
bool is_partition_shaped_up_to_relabeling(const IndexRegion& region);

/// All distinct regions obtained from the anchored diagram of p by relabeling
/// rows and columns within the d x d grid (distinct rows per diagram row,
/// nested column sets). Deterministic order.
std::vector<IndexRegion> relabeled_partition_regions(const Partition& p, int d);

}  // namespace uur
