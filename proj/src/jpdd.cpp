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

#include "uur/jpdd.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace uur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw Error(ErrorKind::InvalidParameter, "partition must have at least one part");
  }
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw Error(ErrorKind::InvalidParameter, "partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorKind::InvalidParameter, "partition parts must be descending");
    }
  }
}

int Partition::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::fits_in_box(int d) const noexcept {
  return rows() <= d && parts_.front() <= d;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

IndexRegion::IndexRegion(std::vector<Cell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw Error(ErrorKind::InvalidParameter, "region must contain at least one cell");
  }
  std::sort(cells_.begin(), cells_.end());
  for (size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].row < 1 || cells_[i].col < 1) {
      throw Error(ErrorKind::IndexOutOfRange, "region cells are 1-based");
    }
    if (i > 0 && cells_[i] == cells_[i - 1]) {
      throw Error(ErrorKind::InvalidParameter, "region cells must be distinct");
    }
  }
}

bool IndexRegion::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::string IndexRegion::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0) out += ",";
    out += "(" + std::to_string(cells_[i].row) + "," + std::to_string(cells_[i].col) + ")";
  }
  return out + "}";
}

namespace {

void emit_partitions(int remaining, int max_part, int depth_left, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (depth_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, depth_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k, int d) {
  if (d < 1) {
    throw Error(ErrorKind::InvalidParameter, "box dimension must be >= 1");
  }
  if (k < 1 || k > d * d) {
    throw Error(ErrorKind::OutOfRange, "k must lie in [1, d*d]");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(k, d, d, prefix, out);
  return out;
}

std::vector<Partition> successors(const Partition& p, int d) {
  if (!p.fits_in_box(d)) {
    throw Error(ErrorKind::OutOfRange, "partition does not fit in the box");
  }
  std::vector<Partition> out;
  const std::vector<int>& parts = p.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    const int grown = parts[i] + 1;
    if (grown > d) continue;
    if (i > 0 && grown > parts[i - 1]) continue;  // would break descending order
    std::vector<int> next = parts;
    next[i] = grown;
    Partition candidate(std::move(next));
    if (std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(std::move(candidate));
    }
  }
  if (p.rows() + 1 <= d) {
    std::vector<int> next = parts;
    next.push_back(1);
    out.emplace_back(std::move(next));
  }
  return out;
}

IndexRegion region_of_partition(const Partition& p) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(p.total()));
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 1; j <= p.parts()[i]; ++j) cells.push_back({i + 1, j});
  return IndexRegion(std::move(cells));
}

namespace {

void require_descending(const ProbabilityVector& v, const char* name) {
  for (int i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) {
      throw Error(ErrorKind::UnsortedInput,
                  std::string(name) + " must be sorted in descending order");
    }
  }
}

}  // namespace

bool is_connected_region(const IndexRegion& region, const ProbabilityVector& p,
                         const ProbabilityVector& q) {
  require_descending(p, "p");
  require_descending(q, "q");
  for (const Cell& c : region.cells()) {
    if (c.row > p.size() || c.col > q.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "region cell outside the probability grid");
    }
  }

  double max_product = 0.0;
  for (const Cell& c : region.cells()) {
    max_product = std::max(max_product, p[c.row - 1] * q[c.col - 1]);
  }
  for (const Cell& c : region.cells()) {
    if (p[c.row - 1] * q[c.col - 1] != max_product) continue;
    // Border cells count as anchored to the (1,1) corner.
    if (c.row == 1 || c.col == 1) continue;
    if (!region.contains({c.row - 1, c.col}) && !region.contains({c.row, c.col - 1})) {
      return false;
    }
  }
  return true;
}

bool is_partition_shaped_up_to_relabeling(const IndexRegion& region) {
  // Collect per-row column sets and require them to be a chain under
  // inclusion; relabeling then maps the region onto an anchored diagram.
  std::vector<std::pair<int, std::set<int>>> rows;
  for (const Cell& c : region.cells()) {
    if (rows.empty() || rows.back().first != c.row) rows.push_back({c.row, {}});
    rows.back().second.insert(c.col);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second.size() > b.second.size();
  });
  for (size_t i = 1; i < rows.size(); ++i) {
    const std::set<int>& big = rows[i - 1].second;
    for (int col : rows[i].second) {
      if (!big.count(col)) return false;
    }
  }
  return true;
}

namespace {

void emit_tuples(int d, int len, std::vector<int>& tuple, std::vector<bool>& used,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(tuple.size()) == len) {
    fn(tuple);
    return;
  }
  for (int v = 1; v <= d; ++v) {
    if (used[v]) continue;
    used[v] = true;
    tuple.push_back(v);
    emit_tuples(d, len, tuple, used, fn);
    tuple.pop_back();
    used[v] = false;
  }
}

}  // namespace

std::vector<IndexRegion> relabeled_partition_regions(const Partition& p, int d) {
  if (!p.fits_in_box(d)) {
    throw Error(ErrorKind::OutOfRange, "partition does not fit in the box");
  }
  // Row tuples assign diagram rows to grid rows; column tuples fix the nested
  // column prefixes. Distinct orderings can produce the same cell set, so the
  // results are deduplicated.
  std::set<IndexRegion> seen;
  std::vector<int> rows_tuple, cols_tuple;
  std::vector<bool> row_used(static_cast<size_t>(d) + 1, false);
  std::vector<bool> col_used(static_cast<size_t>(d) + 1, false);
  emit_tuples(d, p.rows(), rows_tuple, row_used, [&](const std::vector<int>& rows) {
    emit_tuples(d, p.parts().front(), cols_tuple, col_used,
                [&](const std::vector<int>& cols) {
                  std::vector<Cell> cells;
                  for (int i = 0; i < p.rows(); ++i)
                    for (int j = 0; j < p.parts()[i]; ++j)
                      cells.push_back({rows[i], cols[j]});
                  seen.insert(IndexRegion(std::move(cells)));
                });
  });
  return {seen.begin(), seen.end()};
}

}  // namespace uur
