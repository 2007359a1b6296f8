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

#include <span>
#include <vector>

#include "uur/measurement.hpp"

namespace uur {

enum class MeasureKind { Shannon, Renyi, Tsallis };
enum class LogBase { Natural, Two };

/// A nonnegative Schur-concave uncertainty measure.
struct UncertaintyMeasure {
  MeasureKind kind = MeasureKind::Shannon;
  double order = 0.0;  // alpha for Renyi, q for Tsallis; ignored for Shannon
  LogBase log_base = LogBase::Natural;

  static UncertaintyMeasure shannon(LogBase base = LogBase::Natural);
  static UncertaintyMeasure renyi(double alpha, LogBase base = LogBase::Natural);
  static UncertaintyMeasure tsallis(double q);
};

/// Entrywise products p_i * q_j, flattened row-major; sums to 1.
ProbabilityVector tensor_distribution(const ProbabilityVector& p, const ProbabilityVector& q);

/// True iff y majorizes x: descending prefix sums of y dominate those of x
/// within tol and the totals agree within tol. The shorter vector is
/// zero-padded.
bool majorizes(std::span<const double> y, std::span<const double> x, double tol = 1e-9);

/// Largest prefix-sum excess of x over y after descending sort (positive
/// means the majorization y > x fails by that much).
double majorization_deficit(std::span<const double> y, std::span<const double> x);

double measure_value(const UncertaintyMeasure& m, std::span<const double> v);
double measure_value(const UncertaintyMeasure& m, const ProbabilityVector& v);

/// Shannon entropy in nats (the default bound currency).
double shannon_nats(std::span<const double> v);

}  // namespace uur
