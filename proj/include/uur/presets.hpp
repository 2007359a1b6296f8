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

#include <optional>
#include <string>

#include "uur/bounds.hpp"

namespace uur {

/// A loaded overlap unitary plus provenance: where it came from and how far
/// from unitarity it was before any re-orthonormalization.
struct LoadedUnitary {
  ComplexMatrix unitary;
  std::string source;  // preset name or file path
  bool reorthonormalized = false;
  double pre_correction_deviation = 0.0;  // max |U^dag U - I| entry before GS
};

/// theta-parametrized matrix family U(theta) = C cos(theta) + S sin(theta).
/// Loaded matrices are Gram-Schmidt re-orthonormalized in column order.
struct UnitaryTemplate {
  ComplexMatrix cos_part;
  ComplexMatrix sin_part;

  LoadedUnitary at(double theta) const;
};

/// The 4x4 two-significant-figure family from the worked 4-dimensional
/// example; far from unitary as printed, so loading re-orthonormalizes and
/// reports the deviation.
const UnitaryTemplate& fig7_template();

LoadedUnitary preset_identity(int dim);
LoadedUnitary preset_hadamard();
LoadedUnitary preset_fourier(int dim);
LoadedUnitary preset_fig7(double theta);

/// Parses a preset selector: "identity[:d]", "hadamard", "fourier:d", "fig7".
LoadedUnitary load_preset(const std::string& selector, double theta);

/// JSON unitary file: {"dim": d, "matrix": [[[re, im], ...], ...]}.
/// With reorthonormalize the unitarity gate loosens to 1e-2 and the matrix is
/// Gram-Schmidt corrected; otherwise it must pass at 1e-8.
LoadedUnitary read_unitary_file(const std::string& path, bool reorthonormalize = false);
void write_unitary_file(const std::string& path, const ComplexMatrix& u);

/// Reads {"dim": d, "cos_matrix": ..., "sin_matrix": ...} with the same
/// entry encoding as a unitary file.
UnitaryTemplate read_template_file(const std::string& path);

struct ScanOptions {
  double from = 0.0;
  double to = 2.0 * 3.14159265358979323846;
  int steps = 200;
  UncertaintyMeasure measure = UncertaintyMeasure::shannon();
  int dim_cap = kDefaultNormTableDimCap;
};

struct ScanRow {
  double theta;
  double c;
  double b_jpdd;
  double b_mu;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  double max_pre_correction_deviation = 0.0;
};

/// Evaluates the bounds on the half-open uniform grid [from, to). steps >= 2
/// and from != to are required.
ScanResult scan_theta(const UnitaryTemplate& tmpl, const ScanOptions& opts);

/// Writes '#' metadata lines (template source, re-orthonormalization
/// deviation), the header `theta,c,b_jpdd,b_mu`, and one row per grid point
/// with 17-significant-digit floats. Byte-stable for identical inputs.
void write_scan_csv(const std::string& path, const ScanResult& result,
                    const std::string& source_label);

}  // namespace uur
