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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "test_support.hpp"
#include "uur/presets.hpp"

using namespace uur;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("uur_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("built-in presets produce valid pairs") {
  CHECK(is_unitary(preset_identity(3).unitary, 1e-12));
  CHECK(is_unitary(preset_hadamard().unitary, 1e-12));
  CHECK(is_unitary(preset_fourier(3).unitary, 1e-12));
  CHECK(is_unitary(preset_fourier(5).unitary, 1e-12));
  CHECK_THROWS_AS(preset_identity(1), Error);
  CHECK_THROWS_AS(preset_fourier(1), Error);
}

TEST_CASE("fig7 fixture at theta = 0") {
  const LoadedUnitary loaded = preset_fig7(0.0);
  CHECK(loaded.reorthonormalized);
  // The printed matrix is far from unitary (row 2 repeats an entry).
  CHECK(loaded.pre_correction_deviation == doctest::Approx(0.4925).epsilon(1e-3));
  CHECK(is_unitary(loaded.unitary, 1e-12));
  // First column barely moves under Gram-Schmidt; |U_11| stays ~0.63.
  CHECK(std::abs(loaded.unitary(0, 0)) == doctest::Approx(0.63).epsilon(1e-2));

  const BasisPair pair(loaded.unitary);
  const OverlapStats st = overlap_stats(pair);
  CHECK(st.c == doctest::Approx(0.859844179).epsilon(1e-6));
}

TEST_CASE("fig7 fixture varies smoothly with theta") {
  const LoadedUnitary a = preset_fig7(1.0);
  CHECK(is_unitary(a.unitary, 1e-12));
  const LoadedUnitary b = preset_fig7(1.0 + 1e-4);
  CHECK(a.unitary.max_abs_diff(b.unitary) < 1e-2);
}

TEST_CASE("load_preset parses the selector grammar") {
  CHECK(load_preset("identity", 0.0).unitary.rows() == 2);
  CHECK(load_preset("identity:4", 0.0).unitary.rows() == 4);
  CHECK(load_preset("hadamard", 0.0).unitary.rows() == 2);
  CHECK(load_preset("fourier:3", 0.0).unitary.rows() == 3);
  CHECK(load_preset("fig7", 0.5).unitary.rows() == 4);

  CHECK_THROWS_AS(load_preset("fourier", 0.0), Error);
  CHECK_THROWS_AS(load_preset("fourier:x", 0.0), Error);
  CHECK_THROWS_AS(load_preset("hadamard:3", 0.0), Error);
  CHECK_THROWS_AS(load_preset("nonsense", 0.0), Error);
}

TEST_CASE("unitary file round trip is bit-exact") {
  const auto path = temp_file("roundtrip.json");
  const ComplexMatrix original = preset_fig7(0.3).unitary;
  write_unitary_file(path.string(), original);
  const LoadedUnitary loaded = read_unitary_file(path.string());
  REQUIRE(loaded.unitary.rows() == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(loaded.unitary(r, c) == original(r, c));
  CHECK_FALSE(loaded.reorthonormalized);
  std::filesystem::remove(path);
}

TEST_CASE("unitary file validation failures name the invariant") {
  const auto path = temp_file("invalid.json");

  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_unitary_file("/nonexistent/u.json"), Error);
  }
  SUBCASE("malformed JSON") {
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(read_unitary_file(path.string()), Error);
  }
  SUBCASE("wrong shape") {
    std::ofstream(path) << R"({"dim": 2, "matrix": [[[1,0]],[[0,0]]]})";
    CHECK_THROWS_AS(read_unitary_file(path.string()), Error);
  }
  SUBCASE("non-unitary matrix is rejected with the deviation") {
    std::ofstream(path)
        << R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[2,0]]]})";
    CHECK_THROWS_WITH_AS(read_unitary_file(path.string()),
                         doctest::Contains("unitarity invariant violated"), Error);
  }
  SUBCASE("reorthonormalize accepts mild deviation and fixes it") {
    std::ofstream(path)
        << R"({"dim": 2, "matrix": [[[1.001,0],[0,0]],[[0,0],[0.999,0]]]})";
    CHECK_THROWS_AS(read_unitary_file(path.string()), Error);  // 1e-8 gate
    const LoadedUnitary fixed = read_unitary_file(path.string(), true);
    CHECK(fixed.reorthonormalized);
    CHECK(fixed.pre_correction_deviation > 1e-4);
    CHECK(is_unitary(fixed.unitary, 1e-12));
  }
  std::filesystem::remove(path);
}

TEST_CASE("template file round trip and evaluation") {
  const auto path = temp_file("template.json");
  {
    std::ofstream out(path);
    out << R"({"dim": 2,
               "cos_matrix": [[[1,0],[0,0]],[[0,0],[1,0]]],
               "sin_matrix": [[[0,0],[-1,0]],[[1,0],[0,0]]]})";
  }
  const UnitaryTemplate tmpl = read_template_file(path.string());
  const LoadedUnitary at0 = tmpl.at(0.0);
  CHECK(at0.unitary.max_abs_diff(ComplexMatrix::identity(2)) < 1e-12);
  const LoadedUnitary at90 = tmpl.at(std::numbers::pi / 2.0);
  CHECK(std::abs(at90.unitary(0, 1) + 1.0) < 1e-12);  // rotation by 90 degrees
  std::filesystem::remove(path);
}

TEST_CASE("scan_theta validates the grid") {
  ScanOptions opts;
  opts.steps = 1;
  CHECK_THROWS_AS(scan_theta(fig7_template(), opts), Error);
  opts.steps = 4;
  opts.from = 1.0;
  opts.to = 1.0;
  CHECK_THROWS_AS(scan_theta(fig7_template(), opts), Error);
}

TEST_CASE("an 8-step fig7 scan emits finite nonnegative bounds") {
  ScanOptions opts;
  opts.steps = 8;
  const ScanResult result = scan_theta(fig7_template(), opts);
  REQUIRE(result.rows.size() == 8);
  CHECK(result.max_pre_correction_deviation > 0.1);
  for (const ScanRow& row : result.rows) {
    CHECK(std::isfinite(row.b_jpdd));
    CHECK(row.b_jpdd >= 0.0);
    CHECK(row.b_mu >= 0.0);
    CHECK(row.c > 0.0);
    CHECK(row.theta >= 0.0);
    CHECK(row.theta < 2.0 * std::numbers::pi);
  }
}

TEST_CASE("the first scan row reproduces the single-point bound") {
  ScanOptions opts;
  opts.steps = 4;
  const ScanResult result = scan_theta(fig7_template(), opts);
  const BasisPair pair(preset_fig7(0.0).unitary);
  const BoundReport bound = jpdd_bound(pair, UncertaintyMeasure::shannon());
  CHECK(result.rows[0].theta == 0.0);
  CHECK(std::abs(result.rows[0].b_jpdd - bound.b_jpdd) < 1e-12);
  CHECK(std::abs(result.rows[0].b_mu - bound.b_mu) < 1e-12);
  CHECK(std::abs(result.rows[0].c - bound.c) < 1e-12);
}

TEST_CASE("scan CSV: metadata, header, rows, byte stability") {
  const auto path = temp_file("scan.csv");
  ScanOptions opts;
  opts.steps = 5;
  const ScanResult result = scan_theta(fig7_template(), opts);
  write_scan_csv(path.string(), result, "fig7");
  const std::string first = slurp(path);

  CHECK(first.find("# source: fig7\n") != std::string::npos);
  CHECK(first.find("# max_pre_correction_deviation: ") != std::string::npos);
  CHECK(first.find("theta,c,b_jpdd,b_mu\n") != std::string::npos);

  int data_lines = 0;
  std::istringstream lines(first);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] != '#' && line[0] != 't') ++data_lines;
  }
  CHECK(data_lines == 5);

  write_scan_csv(path.string(), result, "fig7");
  CHECK(slurp(path) == first);

  CHECK_THROWS_AS(write_scan_csv("/nonexistent_dir/scan.csv", result, "fig7"), Error);
  std::filesystem::remove(path);
}
