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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "test_support.hpp"
#include "uur/majorization.hpp"

using namespace uur;
using test::apply_t_transforms;
using test::random_distribution;

TEST_CASE("tensor_distribution multiplies entrywise") {
  const ProbabilityVector point = tensor_distribution(ProbabilityVector({1.0, 0.0}),
                                                      ProbabilityVector({1.0, 0.0}));
  CHECK(point.weights() == std::vector<double>{1.0, 0.0, 0.0, 0.0});

  const ProbabilityVector uniform = tensor_distribution(ProbabilityVector({0.5, 0.5}),
                                                        ProbabilityVector({0.5, 0.5}));
  for (int i = 0; i < 4; ++i) CHECK(uniform[i] == doctest::Approx(0.25));

  const ProbabilityVector mixed = tensor_distribution(ProbabilityVector({0.7, 0.3}),
                                                      ProbabilityVector({0.6, 0.4}));
  CHECK(mixed[0] == doctest::Approx(0.42));
  CHECK(mixed[1] == doctest::Approx(0.28));
  CHECK(mixed[2] == doctest::Approx(0.18));
  CHECK(mixed[3] == doctest::Approx(0.12));
}

TEST_CASE("majorizes on the definition's examples") {
  const std::vector<double> point{1.0, 0.0};
  const std::vector<double> uniform{0.5, 0.5};
  CHECK(majorizes(point, uniform));
  CHECK_FALSE(majorizes(uniform, point));
  CHECK(majorizes(uniform, uniform));  // reflexive

  CHECK(majorizes(std::vector<double>{0.5, 0.3, 0.2}, std::vector<double>{0.4, 0.3, 0.3}));
  CHECK_FALSE(majorizes(std::vector<double>{0.4, 0.3, 0.3}, std::vector<double>{0.5, 0.3, 0.2}));
}

TEST_CASE("majorizes pads the shorter vector with zeros") {
  CHECK(majorizes(std::vector<double>{1.0}, std::vector<double>{0.5, 0.5, 0.0, 0.0}));
  CHECK(majorizes(std::vector<double>{0.6, 0.4, 0.0, 0.0}, std::vector<double>{0.6, 0.4}));
}

TEST_CASE("majorizes requires totals to agree") {
  CHECK_FALSE(majorizes(std::vector<double>{0.9}, std::vector<double>{0.5, 0.5}));
  CHECK_FALSE(majorizes(std::vector<double>{1.1}, std::vector<double>{0.5, 0.5}));
}

TEST_CASE("majorizes is permutation-invariant and transitive on random triples") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> y = random_distribution(5, rng);
    std::vector<double> x = apply_t_transforms(y, 3, rng);
    std::vector<double> w = apply_t_transforms(x, 3, rng);

    CHECK(majorizes(y, x, 1e-12));
    CHECK(majorizes(x, w, 1e-12));
    CHECK(majorizes(y, w, 1e-12));  // transitivity

    std::vector<double> y_shuffled = y;
    std::reverse(y_shuffled.begin(), y_shuffled.end());
    CHECK(majorizes(y_shuffled, x, 1e-12));
  }
}

TEST_CASE("majorization_deficit reports the worst prefix excess") {
  // Equal totals make the final prefix difference zero, so a majorizing pair
  // has deficit exactly 0 and a violated pair has the violation amount.
  CHECK(majorization_deficit(std::vector<double>{1.0, 0.0}, std::vector<double>{0.5, 0.5}) ==
        doctest::Approx(0.0));
  CHECK(majorization_deficit(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0, 0.0}) ==
        doctest::Approx(0.5));
  // Total mismatch surfaces at the last prefix.
  CHECK(majorization_deficit(std::vector<double>{0.8}, std::vector<double>{0.6, 0.4}) ==
        doctest::Approx(0.2));
}

TEST_CASE("measure_value on known distributions") {
  const UncertaintyMeasure shannon = UncertaintyMeasure::shannon();
  CHECK(measure_value(shannon, std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-12));
  CHECK(measure_value(shannon, std::vector<double>{1.0, 0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(measure_value(shannon, std::vector<double>{0.7285533905932737, 0.2714466094067263}) ==
        doctest::Approx(0.584692367784131).epsilon(1e-12));

  const UncertaintyMeasure shannon2 = UncertaintyMeasure::shannon(LogBase::Two);
  CHECK(measure_value(shannon2, std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(2.0).epsilon(1e-12));

  const std::vector<double> omega_h2{0.7285533905932737, 0.2714466094067263, 0.0, 0.0};
  CHECK(measure_value(UncertaintyMeasure::renyi(2.0), omega_h2) ==
        doctest::Approx(0.5033977708563206).epsilon(1e-12));
  CHECK(measure_value(UncertaintyMeasure::renyi(0.5), omega_h2) ==
        doctest::Approx(0.636265575786459).epsilon(1e-12));
  CHECK(measure_value(UncertaintyMeasure::tsallis(2.0), omega_h2) ==
        doctest::Approx(0.395526695296637).epsilon(1e-12));
  CHECK(measure_value(UncertaintyMeasure::tsallis(0.5), omega_h2) ==
        doctest::Approx(0.749117547746522).epsilon(1e-12));
}

TEST_CASE("invalid measure parameters are rejected") {
  CHECK_THROWS_AS(UncertaintyMeasure::renyi(1.0), Error);
  CHECK_THROWS_AS(UncertaintyMeasure::renyi(0.0), Error);
  CHECK_THROWS_AS(UncertaintyMeasure::renyi(-2.0), Error);
  CHECK_THROWS_AS(UncertaintyMeasure::tsallis(1.0), Error);
  CHECK_THROWS_AS(UncertaintyMeasure::tsallis(0.0), Error);
}

TEST_CASE("Schur-concavity: majorization implies measure monotonicity") {
  const std::vector<UncertaintyMeasure> measures{
      UncertaintyMeasure::shannon(),       UncertaintyMeasure::renyi(0.5),
      UncertaintyMeasure::renyi(2.0),      UncertaintyMeasure::tsallis(0.5),
      UncertaintyMeasure::tsallis(2.0)};
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<double> y = random_distribution(6, rng);
    const std::vector<double> x = apply_t_transforms(y, 4, rng);
    REQUIRE(majorizes(y, x, 1e-12));
    for (const UncertaintyMeasure& m : measures) {
      CHECK(measure_value(m, x) >= measure_value(m, y) - 1e-9);
    }
  }
}

TEST_CASE("Shannon additivity across tensor products") {
  Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const ProbabilityVector p(random_distribution(3, rng));
    const ProbabilityVector q(random_distribution(4, rng));
    const ProbabilityVector joint = tensor_distribution(p, q);
    CHECK(shannon_nats(joint.weights()) ==
          doctest::Approx(shannon_nats(p.weights()) + shannon_nats(q.weights())).epsilon(1e-9));
  }
}
