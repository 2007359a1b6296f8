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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "uur/oracle.hpp"
#include "uur/presets.hpp"

namespace {

using namespace uur;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct InputFlags {
  std::string unitary_path;
  std::string preset;
  double theta = 0.0;
  bool reorthonormalize = false;
  std::string write_unitary_path;
  int dim_cap = kDefaultNormTableDimCap;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
  auto* unitary = cmd->add_option("--unitary", flags.unitary_path,
                                  "JSON unitary file {\"dim\": d, \"matrix\": [[[re,im],...],...]}");
  auto* preset = cmd->add_option("--preset", flags.preset,
                                 "built-in pair: identity[:d] | hadamard | fourier:d | fig7");
  unitary->excludes(preset);
  cmd->add_option("--theta", flags.theta, "angle (radians) for the fig7 preset [default 0]");
  cmd->add_flag("--reorthonormalize", flags.reorthonormalize,
                "accept files up to 1e-2 from unitarity and Gram-Schmidt correct them");
  cmd->add_option("--write-unitary", flags.write_unitary_path,
                  "save the loaded (possibly corrected) unitary to a JSON file");
  cmd->add_option("--dim-cap", flags.dim_cap,
                  "max dimension for the norm-table enumeration [default 8]");
}

LoadedUnitary resolve_input(const InputFlags& flags) {
  if (flags.unitary_path.empty() == flags.preset.empty()) {
    throw Error(ErrorKind::ParseError, "exactly one of --unitary or --preset is required");
  }
  LoadedUnitary loaded = flags.preset.empty()
                             ? read_unitary_file(flags.unitary_path, flags.reorthonormalize)
                             : load_preset(flags.preset, flags.theta);
  if (!flags.write_unitary_path.empty()) {
    write_unitary_file(flags.write_unitary_path, loaded.unitary);
  }
  return loaded;
}

void print_source(const LoadedUnitary& loaded) {
  std::printf("source: %s\n", loaded.source.c_str());
  if (loaded.reorthonormalized) {
    std::printf("reorthonormalization deviation (max |U^dag U - I| before correction): %.6g\n",
                loaded.pre_correction_deviation);
  }
}

UncertaintyMeasure parse_measure(const std::string& text, LogBase base) {
  if (text == "shannon") return UncertaintyMeasure::shannon(base);
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string name = text.substr(0, colon);
    double order = 0.0;
    try {
      size_t used = 0;
      order = std::stod(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "measure order must be a number: " + text);
    }
    if (name == "renyi") return UncertaintyMeasure::renyi(order, base);
    if (name == "tsallis") return UncertaintyMeasure::tsallis(order);
  }
  throw Error(ErrorKind::ParseError,
              "unknown measure '" + text + "' (expected shannon | renyi:alpha | tsallis:q)");
}

LogBase parse_log_base(const std::string& text) {
  if (text == "natural") return LogBase::Natural;
  if (text == "two") return LogBase::Two;
  throw Error(ErrorKind::ParseError, "log base must be 'natural' or 'two'");
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::printf("warning: %s\n", w.c_str());
}

int run_omega(const InputFlags& flags) {
  LoadedUnitary loaded = resolve_input(flags);
  print_source(loaded);
  const BasisPair pair(std::move(loaded.unitary));
  const auto [omega, table] = omega_vector(pair, flags.dim_cap);

  std::printf("dim: %d\n", table.dim);
  std::printf("%3s  %-14s %-12s %s\n", "k", "Omega_k", "argmax", "raw");
  for (int k = 1; k <= table.dim; ++k) {
    std::printf("%3d  %-14.10f %-12s %.10f\n", k, table.omega_k[k - 1],
                table.argmax_partition[k - 1].to_string().c_str(), table.raw_omega_k[k - 1]);
  }
  std::printf("omega:");
  for (double x : omega.entries) std::printf(" %.17g", x);
  std::printf("\nomega sum: %.12f\n", omega.sum());
  print_warnings(table.warnings);
  return kExitOk;
}

struct MeasureFlags {
  std::string measure = "shannon";
  std::string log_base = "natural";
};

void add_measure_flags(CLI::App* cmd, MeasureFlags& flags) {
  cmd->add_option("--measure", flags.measure, "shannon | renyi:alpha | tsallis:q [default shannon]");
  cmd->add_option("--log-base", flags.log_base, "natural | two [default natural]");
}

int run_bound(const InputFlags& flags, const MeasureFlags& mflags) {
  const UncertaintyMeasure measure = parse_measure(mflags.measure, parse_log_base(mflags.log_base));
  LoadedUnitary loaded = resolve_input(flags);
  print_source(loaded);
  const BasisPair pair(std::move(loaded.unitary));
  const BoundReport report = jpdd_bound(pair, measure, flags.dim_cap);

  std::printf("measure: %s\n", mflags.measure.c_str());
  std::printf("c: %.10f\n", report.c);
  std::printf("branch: %s (dimension-generic, as classified by c)\n",
              branch_name(report.piecewise_branch));
  std::printf("b_mu: %.10f\n", report.b_mu);
  std::printf("b_jpdd: %.10f\n", report.b_jpdd);
  std::printf("piecewise bound value: %.10f\n", report.piecewise_value);
  print_warnings(report.warnings);
  return kExitOk;
}

int run_verify(const InputFlags& flags, int samples, std::uint64_t seed, double tol) {
  LoadedUnitary loaded = resolve_input(flags);
  print_source(loaded);
  const BasisPair pair(std::move(loaded.unitary));
  const VerificationReport report = verify_uur(pair, samples, seed, tol, flags.dim_cap);

  std::printf("samples: %d (seed %llu, tol %g)\n", report.samples,
              static_cast<unsigned long long>(report.seed), tol);
  std::printf("majorization violations: %d\n", report.violations_majorization);
  std::printf("worst prefix deficit: %.3e (sample %d)\n", report.worst_prefix_deficit,
              report.worst_majorization_sample);
  std::printf("entropy violations: %d\n", report.violations_entropy);
  std::printf("worst entropy gap: %.3e (sample %d)\n", report.worst_entropy_gap,
              report.worst_entropy_sample);
  if (report.violations_majorization > 0 || report.violations_entropy > 0) {
    std::printf("RESULT: VIOLATIONS FOUND\n");
    return kExitViolations;
  }
  std::printf("RESULT: OK\n");
  return kExitOk;
}

int run_oracle(const InputFlags& flags, int k, const OracleOptions& opts,
               const std::string& regions_mode) {
  LoadedUnitary loaded = resolve_input(flags);
  print_source(loaded);
  const BasisPair pair(std::move(loaded.unitary));

  RegionFamily family;
  if (regions_mode == "auto") {
    family = pair.dim() <= 3 ? RegionFamily::Exhaustive : RegionFamily::PartitionShaped;
  } else if (regions_mode == "exhaustive") {
    family = RegionFamily::Exhaustive;
  } else if (regions_mode == "partitions") {
    family = RegionFamily::PartitionShaped;
  } else {
    throw Error(ErrorKind::ParseError, "--regions must be auto | exhaustive | partitions");
  }

  const OracleReport report = brute_force_omega_k(pair, k, family, opts);
  std::printf("k: %d\n", report.k);
  std::printf("region family: %s\n", report.exhaustive ? "exhaustive" : "partition-shaped");
  std::printf("starts: %d (seed %llu)\n", report.starts_used,
              static_cast<unsigned long long>(opts.seed));
  std::printf("oracle value: %.10f\n", report.oracle_value);
  std::printf("formula value: %.10f\n", report.formula_value);
  std::printf("gap (formula - oracle): %+.3e\n", report.gap);
  std::printf("best region: %s\n",
              report.best_region ? report.best_region->to_string().c_str() : "n/a");
  std::printf("best value attained by partition-shaped region: %s\n",
              report.best_region_is_partition_shaped ? "yes" : "no");
  std::printf("all starts converged: %s\n", report.converged ? "yes" : "no");
  return kExitOk;
}

int run_scan(const std::string& preset, const std::string& template_path, ScanOptions opts,
             const std::string& out_path, const MeasureFlags& mflags) {
  opts.measure = parse_measure(mflags.measure, parse_log_base(mflags.log_base));
  if (preset.empty() == template_path.empty()) {
    throw Error(ErrorKind::ParseError,
                "exactly one of --preset fig7 or --unitary-template is required");
  }
  std::string label;
  const UnitaryTemplate* tmpl = nullptr;
  UnitaryTemplate from_file;
  if (!preset.empty()) {
    if (preset != "fig7") {
      throw Error(ErrorKind::ParseError, "only the fig7 preset is theta-parametrized");
    }
    tmpl = &fig7_template();
    label = "fig7";
  } else {
    from_file = read_template_file(template_path);
    tmpl = &from_file;
    label = template_path;
  }

  const ScanResult result = scan_theta(*tmpl, opts);
  write_scan_csv(out_path, result, label);
  std::printf("wrote %zu rows to %s\n", result.rows.size(), out_path.c_str());
  std::printf("max reorthonormalization deviation across grid: %.6g\n",
              result.max_pre_correction_deviation);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization-based uncertainty bounds for two orthonormal bases"};
  app.require_subcommand(1);

  InputFlags omega_in, bound_in, verify_in, oracle_in;
  MeasureFlags bound_measure, scan_measure;

  auto* omega_cmd = app.add_subcommand("omega", "compute the Omega_k table and the omega vector");
  add_input_flags(omega_cmd, omega_in);

  auto* bound_cmd = app.add_subcommand("bound", "evaluate entropic lower bounds");
  add_input_flags(bound_cmd, bound_in);
  add_measure_flags(bound_cmd, bound_measure);

  auto* verify_cmd = app.add_subcommand("verify", "audit the majorization relation on Haar states");
  add_input_flags(verify_cmd, verify_in);
  int samples = 10000;
  std::uint64_t verify_seed = 1;
  double verify_tol = 1e-9;
  verify_cmd->add_option("--samples", samples, "number of Haar states [default 10000]");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed [default 1]");
  verify_cmd->add_option("--tol", verify_tol, "violation tolerance [default 1e-9]");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force Omega_k and compare with the formula");
  add_input_flags(oracle_cmd, oracle_in);
  int oracle_k = 1;
  OracleOptions oracle_opts;
  std::string regions_mode = "auto";
  oracle_cmd->add_option("--k", oracle_k, "region cardinality k")->required();
  oracle_cmd->add_option("--starts", oracle_opts.starts, "multi-start count [default 64]");
  oracle_cmd->add_option("--seed", oracle_opts.seed, "RNG seed [default 1]");
  oracle_cmd->add_option("--tol", oracle_opts.tol, "fixed-point convergence tolerance [default 1e-10]");
  oracle_cmd->add_option("--max-iters", oracle_opts.max_iterations,
                         "iteration cap per start [default 500]");
  oracle_cmd->add_option("--regions", regions_mode, "auto | exhaustive | partitions");

  auto* scan_cmd = app.add_subcommand("scan-theta", "sweep theta and emit a CSV of bounds");
  std::string scan_preset, template_path, out_path;
  ScanOptions scan_opts;
  scan_cmd->add_option("--preset", scan_preset, "theta-parametrized preset (fig7)");
  scan_cmd->add_option("--unitary-template", template_path,
                       "JSON template {\"dim\", \"cos_matrix\", \"sin_matrix\"}");
  scan_cmd->add_option("--from", scan_opts.from, "grid start (radians) [default 0]");
  scan_cmd->add_option("--to", scan_opts.to, "grid end, excluded [default 2*pi]");
  scan_cmd->add_option("--steps", scan_opts.steps, "number of grid points, >= 2 [default 200]");
  scan_cmd->add_option("--out", out_path, "output CSV path")->required();
  scan_cmd->add_option("--dim-cap", scan_opts.dim_cap, "norm-table dimension cap [default 8]");
  add_measure_flags(scan_cmd, scan_measure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (omega_cmd->parsed()) return run_omega(omega_in);
    if (bound_cmd->parsed()) return run_bound(bound_in, bound_measure);
    if (verify_cmd->parsed()) return run_verify(verify_in, samples, verify_seed, verify_tol);
    if (oracle_cmd->parsed()) return run_oracle(oracle_in, oracle_k, oracle_opts, regions_mode);
    if (scan_cmd->parsed()) return run_scan(scan_preset, template_path, scan_opts, out_path,
                                            scan_measure);
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", error_kind_name(e.kind()), e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
