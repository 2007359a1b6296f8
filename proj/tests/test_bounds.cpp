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

#include <cmath>

#include "test_support.hpp"
#include "uur/bounds.hpp"
#include "uur/presets.hpp"

using namespace uur;
using test::qubit_rotation;

TEST_CASE("mu_bound closed values") {
  CHECK(mu_bound(1.0) == doctest::Approx(0.0));
  CHECK(mu_bound(std::sqrt(0.5)) == doctest::Approx(0.6931471805599455).epsilon(1e-12));
  CHECK(mu_bound(0.9) == doctest::Approx(0.21072103131565256).epsilon(1e-12));
  CHECK(mu_bound(std::sqrt(0.5), LogBase::Two) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(mu_bound(0.0), Error);
  CHECK_THROWS_AS(mu_bound(1.5), Error);
  CHECK_THROWS_AS(mu_bound(-0.2), Error);
}

TEST_CASE("identity pair: no uncertainty trade-off, boundary continuity at c = 1") {
  const BasisPair id(ComplexMatrix::identity(3));
  const BoundReport report = jpdd_bound(id, UncertaintyMeasure::shannon());
  CHECK(report.c == doctest::Approx(1.0));
  CHECK(std::abs(report.b_mu) < 1e-9);
  CHECK(std::abs(report.b_jpdd) < 1e-9);
  CHECK(report.piecewise_branch == PiecewiseBranch::GBranch);
}

TEST_CASE("Hadamard pair: MU branch at the c = 1/sqrt(2) boundary") {
  const BasisPair had(preset_hadamard().unitary);
  const BoundReport report = jpdd_bound(had, UncertaintyMeasure::shannon());
  CHECK(report.c == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(report.b_jpdd == doctest::Approx(0.584692367784131).epsilon(1e-9));
  CHECK(report.b_mu == doctest::Approx(0.6931471805599455).epsilon(1e-12));
  CHECK(report.piecewise_branch == PiecewiseBranch::MuBranch);
  CHECK(report.piecewise_value == doctest::Approx(report.b_mu));
  CHECK(report.warnings.empty());
}

TEST_CASE("c = 0.9 rotation lands on the G branch") {
  const BasisPair pair(qubit_rotation(0.9));
  const BoundReport report = jpdd_bound(pair, UncertaintyMeasure::shannon());
  CHECK(report.c == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(report.piecewise_branch == PiecewiseBranch::GBranch);
  CHECK(report.b_jpdd == doctest::Approx(0.31955492921491624).epsilon(1e-9));
  CHECK(report.piecewise_value == doctest::Approx(report.b_jpdd));
  CHECK(report.b_jpdd >= 0.0);
}

TEST_CASE("c = 0.8 rotation: middle branch is unavailable and reported as such") {
  const BasisPair pair(qubit_rotation(0.8));
  const BoundReport report = jpdd_bound(pair, UncertaintyMeasure::shannon());
  CHECK(report.piecewise_branch == PiecewiseBranch::MiddleUnavailable);
  CHECK(report.b_mu == doctest::Approx(0.4462871026284194).epsilon(1e-12));
  CHECK(report.b_jpdd == doctest::Approx(0.48622296466179216).epsilon(1e-9));
  CHECK(report.piecewise_value ==
        doctest::Approx(std::max(report.b_mu, report.b_jpdd)).epsilon(1e-12));
  REQUIRE_FALSE(report.warnings.empty());
  CHECK(report.warnings.back().find("H_1(c) unavailable") != std::string::npos);
}

TEST_CASE("non-Shannon measures report Phi(omega) as the piecewise value") {
  const BasisPair had(preset_hadamard().unitary);
  const BoundReport renyi = jpdd_bound(had, UncertaintyMeasure::renyi(2.0));
  CHECK(renyi.b_jpdd == doctest::Approx(0.5033977708563206).epsilon(1e-9));
  CHECK(renyi.piecewise_value == doctest::Approx(renyi.b_jpdd));
  CHECK(renyi.b_jpdd >= 0.0);

  const BoundReport tsallis = jpdd_bound(had, UncertaintyMeasure::tsallis(2.0));
  CHECK(tsallis.b_jpdd == doctest::Approx(0.395526695296637).epsilon(1e-9));
}

TEST_CASE("bounds are nonnegative on random pairs") {
  for (int d = 2; d <= 4; ++d) {
    for (std::uint64_t trial = 0; trial < 4; ++trial) {
      const BasisPair pair(random_unitary(d, 7000 + 10 * static_cast<std::uint64_t>(d) + trial));
      const BoundReport report = jpdd_bound(pair, UncertaintyMeasure::shannon());
      CHECK(report.b_mu >= 0.0);
      CHECK(report.b_jpdd >= 0.0);
      CHECK(report.piecewise_value >= 0.0);
    }
  }
}

TEST_CASE("verify_uur: identity pair never violates") {
  const BasisPair id(ComplexMatrix::identity(3));
  const VerificationReport report = verify_uur(id, 100, 1);
  CHECK(report.samples == 100);
  CHECK(report.violations_majorization == 0);
  CHECK(report.violations_entropy == 0);
}

TEST_CASE("verify_uur: Hadamard pair passes a thousand Haar states") {
  const BasisPair had(preset_hadamard().unitary);
  const VerificationReport report = verify_uur(had, 1000, 7);
  CHECK(report.violations_majorization == 0);
  CHECK(report.violations_entropy == 0);
  CHECK(report.worst_prefix_deficit <= 1e-9);
  CHECK(report.worst_entropy_gap <= 1e-9);
}

TEST_CASE("verify_uur: fig7 fixture at theta = 1 passes") {
  const BasisPair pair(preset_fig7(1.0).unitary);
  const VerificationReport report = verify_uur(pair, 1000, 11);
  CHECK(report.violations_majorization == 0);
  CHECK(report.violations_entropy == 0);
}

TEST_CASE("verify_uur is reproducible and validates inputs") {
  const BasisPair pair(random_unitary(3, 88));
  const VerificationReport a = verify_uur(pair, 250, 5);
  const VerificationReport b = verify_uur(pair, 250, 5);
  CHECK(a.worst_prefix_deficit == b.worst_prefix_deficit);
  CHECK(a.worst_entropy_gap == b.worst_entropy_gap);
  CHECK(a.worst_majorization_sample == b.worst_majorization_sample);
  CHECK(a.worst_entropy_sample == b.worst_entropy_sample);
  CHECK_THROWS_AS(verify_uur(pair, 0, 5), Error);
}

TEST_CASE("per-sample entropy check equals the Shannon instance of the measure bound") {
  // H(p) + H(q) == Shannon(p x q), so the entropy audit is exactly the
  // Schur-concave bound instance with Phi = Shannon.
  const BasisPair pair(random_unitary(3, 31));
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const StateVector psi = sample_haar_state(3, rng);
    const ProbabilityVector p = probabilities(pair, psi, Basis::A);
    const ProbabilityVector q = probabilities(pair, psi, Basis::B);
    const ProbabilityVector joint = tensor_distribution(p, q);
    CHECK(shannon_nats(joint.weights()) ==
          doctest::Approx(shannon_nats(p.weights()) + shannon_nats(q.weights()))
              .epsilon(1e-9));
  }
}
