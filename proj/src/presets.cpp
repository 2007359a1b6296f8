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

#include "uur/presets.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace uur {

namespace {

using nlohmann::json;

ComplexMatrix matrix_from_rows(int d, const double (*rows)[4]) {
  ComplexMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

LoadedUnitary UnitaryTemplate::at(double theta) const {
  const int d = cos_part.rows();
  ComplexMatrix u(d, d);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) u(r, c) = ct * cos_part(r, c) + st * sin_part(r, c);

  LoadedUnitary loaded;
  loaded.pre_correction_deviation = gram_schmidt_columns(u);
  loaded.reorthonormalized = true;
  loaded.unitary = std::move(u);
  return loaded;
}

const UnitaryTemplate& fig7_template() {
  static const UnitaryTemplate tmpl = [] {
    static const double cos_rows[4][4] = {
        {0.63, 0.67, -0.13, -0.37},
        {0.54, -0.62, 0.43, 0.43},
        {-0.30, 0.4, 0.86, -0.098},
        {-0.47, -0.072, -0.23, -0.85},
    };
    static const double sin_rows[4][4] = {
        {0.54, -0.62, 0.43, -0.36},
        {-0.63, -0.67, 0.13, 0.13},
        {-0.47, -0.072, -0.23, -0.85},
        {0.30, -0.4, -0.86, 0.098},
    };
    UnitaryTemplate t;
    t.cos_part = matrix_from_rows(4, cos_rows);
    t.sin_part = matrix_from_rows(4, sin_rows);
    return t;
  }();
  return tmpl;
}

LoadedUnitary preset_identity(int dim) {
  if (dim < 2) {
    throw Error(ErrorKind::InvalidParameter, "identity preset needs dim >= 2");
  }
  return {ComplexMatrix::identity(dim), "identity:" + std::to_string(dim), false, 0.0};
}

LoadedUnitary preset_hadamard() {
  ComplexMatrix u(2, 2);
  const double s = std::numbers::sqrt2 / 2.0;
  u(0, 0) = s;
  u(0, 1) = s;
  u(1, 0) = s;
  u(1, 1) = -s;
  return {std::move(u), "hadamard", false, 0.0};
}

LoadedUnitary preset_fourier(int dim) {
  if (dim < 2) {
    throw Error(ErrorKind::InvalidParameter, "fourier preset needs dim >= 2");
  }
  ComplexMatrix u(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int m = 1; m <= dim; ++m) {
    for (int n = 1; n <= dim; ++n) {
      const double phase = 2.0 * std::numbers::pi * m * n / dim;
      u(m - 1, n - 1) = scale * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return {std::move(u), "fourier:" + std::to_string(dim), false, 0.0};
}

LoadedUnitary preset_fig7(double theta) {
  LoadedUnitary loaded = fig7_template().at(theta);
  std::ostringstream label;
  label << "fig7(theta=" << theta << ")";
  loaded.source = label.str();
  return loaded;
}

LoadedUnitary load_preset(const std::string& selector, double theta) {
  const auto colon = selector.find(':');
  const std::string name = selector.substr(0, colon);
  std::optional<int> arg;
  if (colon != std::string::npos) {
    try {
      size_t used = 0;
      const int v = std::stoi(selector.substr(colon + 1), &used);
      if (used != selector.size() - colon - 1) throw std::invalid_argument("trailing");
      arg = v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "preset dimension must be an integer: " + selector);
    }
  }

  if (name == "identity") return preset_identity(arg.value_or(2));
  if (name == "hadamard") {
    if (arg) throw Error(ErrorKind::ParseError, "hadamard preset takes no dimension");
    return preset_hadamard();
  }
  if (name == "fourier") {
    if (!arg) throw Error(ErrorKind::ParseError, "fourier preset needs a dimension, e.g. fourier:3");
    return preset_fourier(*arg);
  }
  if (name == "fig7") {
    if (arg) throw Error(ErrorKind::ParseError, "fig7 preset takes no dimension");
    return preset_fig7(theta);
  }
  throw Error(ErrorKind::ParseError,
              "unknown preset '" + selector + "' (expected identity[:d] | hadamard | fourier:d | fig7)");
}

namespace {

ComplexMatrix parse_matrix(const json& node, int dim, const char* field) {
  if (!node.is_array() || static_cast<int>(node.size()) != dim) {
    throw Error(ErrorKind::ParseError, std::string(field) + " must be a dim x dim array");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = node.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw Error(ErrorKind::ParseError, std::string(field) + " row has wrong length");
    }
    for (int c = 0; c < dim; ++c) {
      const json& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number()) {
        throw Error(ErrorKind::ParseError,
                    std::string(field) + " entries must be [re, im] number pairs");
      }
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  if (!m.all_finite()) {
    throw Error(ErrorKind::ParseError, std::string(field) + " has non-finite entries");
  }
  return m;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open file: " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

int parse_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.at("dim").is_number_integer()) {
    throw Error(ErrorKind::ParseError, "file must be an object with an integer \"dim\"");
  }
  const int dim = doc.at("dim").get<int>();
  if (dim < 2) {
    throw Error(ErrorKind::ParseError, "dim must be >= 2");
  }
  return dim;
}

}  // namespace

LoadedUnitary read_unitary_file(const std::string& path, bool reorthonormalize) {
  const json doc = load_json(path);
  const int dim = parse_dim(doc);
  if (!doc.contains("matrix")) {
    throw Error(ErrorKind::ParseError, "file must contain a \"matrix\" field");
  }
  ComplexMatrix u = parse_matrix(doc.at("matrix"), dim, "matrix");

  LoadedUnitary loaded;
  loaded.source = path;
  const double gate = reorthonormalize ? 1e-2 : 1e-8;
  if (!is_unitary(u, gate)) {
    const ComplexMatrix gram = u.adjoint() * u;
    std::ostringstream msg;
    msg << "unitarity invariant violated: max |U^dag U - I| = "
        << gram.max_abs_diff(ComplexMatrix::identity(dim)) << " exceeds " << gate;
    if (!reorthonormalize) msg << " (consider --reorthonormalize)";
    throw Error(ErrorKind::InvalidParameter, msg.str());
  }
  if (reorthonormalize) {
    loaded.pre_correction_deviation = gram_schmidt_columns(u);
    loaded.reorthonormalized = true;
  }
  loaded.unitary = std::move(u);
  return loaded;
}

void write_unitary_file(const std::string& path, const ComplexMatrix& u) {
  if (!u.is_square()) {
    throw Error(ErrorKind::InvalidParameter, "unitary file requires a square matrix");
  }
  json rows = json::array();
  for (int r = 0; r < u.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < u.cols(); ++c) {
      row.push_back(json::array({u(r, c).real(), u(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  const json doc = {{"dim", u.rows()}, {"matrix", std::move(rows)}};
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::InvalidParameter, "cannot write file: " + path);
  }
  out << doc.dump(2) << "\n";
}

UnitaryTemplate read_template_file(const std::string& path) {
  const json doc = load_json(path);
  const int dim = parse_dim(doc);
  if (!doc.contains("cos_matrix") || !doc.contains("sin_matrix")) {
    throw Error(ErrorKind::ParseError,
                "template must contain \"cos_matrix\" and \"sin_matrix\"");
  }
  UnitaryTemplate tmpl;
  tmpl.cos_part = parse_matrix(doc.at("cos_matrix"), dim, "cos_matrix");
  tmpl.sin_part = parse_matrix(doc.at("sin_matrix"), dim, "sin_matrix");
  return tmpl;
}

ScanResult scan_theta(const UnitaryTemplate& tmpl, const ScanOptions& opts) {
  if (opts.steps < 2) {
    throw Error(ErrorKind::InvalidParameter, "scan needs at least 2 steps");
  }
  if (opts.from == opts.to) {
    throw Error(ErrorKind::InvalidParameter, "scan range must be nondegenerate (from != to)");
  }

  ScanResult result;
  result.rows.reserve(static_cast<size_t>(opts.steps));
  const double span = opts.to - opts.from;
  for (int i = 0; i < opts.steps; ++i) {
    const double theta = opts.from + span * i / opts.steps;  // half-open grid
    LoadedUnitary loaded = tmpl.at(theta);
    result.max_pre_correction_deviation =
        std::max(result.max_pre_correction_deviation, loaded.pre_correction_deviation);
    const BasisPair pair(std::move(loaded.unitary));
    const BoundReport bound = jpdd_bound(pair, opts.measure, opts.dim_cap);
    result.rows.push_back({theta, bound.c, bound.b_jpdd, bound.b_mu});
  }
  return result;
}

void write_scan_csv(const std::string& path, const ScanResult& result,
                    const std::string& source_label) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::InvalidParameter, "cannot write output path: " + path);
  }
  char buf[128];
  out << "# source: " << source_label << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", result.max_pre_correction_deviation);
  out << "# max_pre_correction_deviation: " << buf << "\n";
  out << "theta,c,b_jpdd,b_mu\n";
  for (const ScanRow& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", row.theta, row.c, row.b_jpdd,
                  row.b_mu);
    out << buf << "\n";
  }
  if (!out.good()) {
    throw Error(ErrorKind::InvalidParameter, "I/O failure while writing: " + path);
  }
}

}  // namespace uur
