// Copyright 2026 The RamseyQA Authors.
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

// Fourier estimator f(nu) = sum_n (P_n - 1/2) exp(-i 2 pi nu tau_n) and peak
// extraction on |f|.

#include <cstddef>
#include <optional>
#include <vector>

#include "ramseyqa/operators.hpp"
#include "ramseyqa/oracle.hpp"
#include "ramseyqa/protocol.hpp"

namespace ramseyqa {

/// Uniform frequency grid nu_min, nu_min + step, ... <= nu_max (GHz).
std::vector<double> frequency_grid(double nu_min, double nu_max, double step);

struct Spectrum {
  std::vector<double> nu_grid;  ///< strictly ascending (GHz)
  std::vector<Complex> values;  ///< f at each grid point
  SweepGrid source_grid;

  std::size_t size() const { return nu_grid.size(); }
  double magnitude(std::size_t k) const { return std::abs(values[k]); }
  /// Largest |f| over grid points with lo <= nu <= hi, 0 if none.
  double max_magnitude(double lo, double hi) const;
};

struct OracleMatch {
  std::size_t lower = 0;
  std::size_t upper = 0;
  double gap = 0.0;    ///< GHz
  double delta = 0.0;  ///< |refined_nu - gap| (GHz)
  bool shared = false; ///< another peak matched the same gap
};

struct Peak {
  std::size_t index = 0;  ///< grid index of the raw maximum
  double nu = 0.0;        ///< GHz
  double magnitude = 0.0;
  double refined_nu = 0.0;
  bool refined = false;   ///< false: boundary or flat neighbourhood, raw nu kept
  std::optional<OracleMatch> match;
};

struct PeakReport {
  std::vector<Peak> peaks;  ///< descending magnitude
  /// Strongest point at or below the DC cutoff; reported, never a peak.
  std::optional<Peak> dc;
  double dc_exclusion = 0.0;
  double threshold_rel = 0.0;

  /// Peaks that found no oracle gap within tolerance.
  std::vector<std::size_t> unmatched() const;
};

/// Evaluates f on every grid frequency, spread over `jobs` threads. Throws
/// ArgumentError for an empty series or grid or a non-ascending grid.
Spectrum dft(const RamseySeries& series, const std::vector<double>& nu_grid,
             unsigned jobs = 1);

/// Local maxima of |f| above dc_exclusion whose magnitude is at least
/// threshold_rel times the largest |f| above dc_exclusion. A candidate must
/// also be the largest |f| within one resolution width 1/(t_max - t_min)
/// on either side, which rejects the sidelobes of the unwindowed sum.
/// Peaks come back unrefined (refined_nu = nu).
PeakReport find_peaks(const Spectrum& spec, double dc_exclusion,
                      double threshold_rel);

struct Refinement {
  double nu = 0.0;
  bool refined = false;
};

/// Three-point parabolic interpolation of |f| around grid index `index`.
/// Returns the raw nu with refined = false on a boundary index or a flat or
/// non-concave neighbourhood.
Refinement refine_peak(const Spectrum& spec, std::size_t index);

/// refine_peak applied to every peak in the report.
void refine_peaks(const Spectrum& spec, PeakReport& report);

/// Attaches to each peak the nearest gap within `tolerance` (GHz). A gap
/// claimed by several peaks is kept on all of them with shared = true.
/// Throws ArgumentError unless tolerance > 0.
PeakReport match_to_oracle(PeakReport report, const GapTable& table,
                           double tolerance);

}  // namespace ramseyqa
