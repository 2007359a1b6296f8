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

#include "uur/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace uur {

UncertaintyMeasure UncertaintyMeasure::shannon(LogBase base) {
  return {MeasureKind::Shannon, 0.0, base};
}

UncertaintyMeasure UncertaintyMeasure::renyi(double alpha, LogBase base) {
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw Error(ErrorKind::InvalidParameter, "Renyi order must be positive and != 1");
  }
  return {MeasureKind::Renyi, alpha, base};
}

UncertaintyMeasure UncertaintyMeasure::tsallis(double q) {
  if (!(q > 0.0) || q == 1.0) {
    throw Error(ErrorKind::InvalidParameter, "Tsallis order must be positive and != 1");
  }
  return {MeasureKind::Tsallis, q, LogBase::Natural};
}

ProbabilityVector tensor_distribution(const ProbabilityVector& p, const ProbabilityVector& q) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(p.size()) * q.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < q.size(); ++j) out.push_back(p[i] * q[j]);
  return ProbabilityVector(std::move(out));
}

namespace {

std::vector<double> sorted_descending_padded(std::span<const double> v, size_t len) {
  std::vector<double> out(v.begin(), v.end());
  out.resize(len, 0.0);
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace

double majorization_deficit(std::span<const double> y, std::span<const double> x) {
  const size_t len = std::max(y.size(), x.size());
  const std::vector<double> ys = sorted_descending_padded(y, len);
  const std::vector<double> xs = sorted_descending_padded(x, len);
  double y_prefix = 0.0;
  double x_prefix = 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < len; ++i) {
    y_prefix += ys[i];
    x_prefix += xs[i];
    worst = std::max(worst, x_prefix - y_prefix);
  }
  return worst;
}

bool majorizes(std::span<const double> y, std::span<const double> x, double tol) {
  const size_t len = std::max(y.size(), x.size());
  const std::vector<double> ys = sorted_descending_padded(y, len);
  const std::vector<double> xs = sorted_descending_padded(x, len);
  double y_prefix = 0.0;
  double x_prefix = 0.0;
  for (size_t i = 0; i < len; ++i) {
    y_prefix += ys[i];
    x_prefix += xs[i];
    if (x_prefix - y_prefix > tol) return false;
  }
  return std::abs(y_prefix - x_prefix) <= tol;
}

namespace {

double apply_base(double nats, LogBase base) {
  return base == LogBase::Natural ? nats : nats / std::numbers::ln2;
}

}  // namespace

double shannon_nats(std::span<const double> v) {
  double h = 0.0;
  for (double w : v) {
    if (w > 0.0) h -= w * std::log(w);
  }
  return h;
}

double measure_value(const UncertaintyMeasure& m, std::span<const double> v) {
  switch (m.kind) {
    case MeasureKind::Shannon:
      return apply_base(shannon_nats(v), m.log_base);
    case MeasureKind::Renyi: {
      if (!(m.order > 0.0) || m.order == 1.0) {
        throw Error(ErrorKind::InvalidParameter, "Renyi order must be positive and != 1");
      }
      double power_sum = 0.0;
      for (double w : v) {
        if (w > 0.0) power_sum += std::pow(w, m.order);
      }
      return apply_base(std::log(power_sum) / (1.0 - m.order), m.log_base);
    }
    case MeasureKind::Tsallis: {
      if (!(m.order > 0.0) || m.order == 1.0) {
        throw Error(ErrorKind::InvalidParameter, "Tsallis order must be positive and != 1");
      }
      double power_sum = 0.0;
      for (double w : v) {
        if (w > 0.0) power_sum += std::pow(w, m.order);
      }
      return (1.0 - power_sum) / (m.order - 1.0);
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown measure kind");
}

double measure_value(const UncertaintyMeasure& m, const ProbabilityVector& v) {
  return measure_value(m, std::span<const double>(v.weights()));
}

}  // namespace uur
