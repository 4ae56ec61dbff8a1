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

#include "ramseyqa/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "ramseyqa/errors.hpp"

namespace ramseyqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::vector<double> frequency_grid(double nu_min, double nu_max, double step) {
  if (!(step > 0.0) || !(nu_max >= nu_min) || !std::isfinite(nu_max)) {
    throw ArgumentError("frequency grid needs step > 0 and nu_max >= nu_min");
  }
  // Index-based so the points do not accumulate rounding.
  const auto n =
      static_cast<std::size_t>(std::floor((nu_max - nu_min) / step + 1e-9)) + 1;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) {
    grid[k] = nu_min + static_cast<double>(k) * step;
  }
  return grid;
}

double Spectrum::max_magnitude(double lo, double hi) const {
  double best = 0.0;
  for (std::size_t k = 0; k < size(); ++k) {
    if (nu_grid[k] >= lo && nu_grid[k] <= hi) best = std::max(best, magnitude(k));
  }
  return best;
}

std::vector<std::size_t> PeakReport::unmatched() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < peaks.size(); ++k) {
    if (!peaks[k].match) out.push_back(k);
  }
  return out;
}

Spectrum dft(const RamseySeries& series, const std::vector<double>& nu_grid,
             unsigned jobs) {
  if (series.records.empty()) throw ArgumentError("dft of an empty series");
  if (nu_grid.empty()) throw ArgumentError("dft needs a non-empty frequency grid");
  for (std::size_t k = 1; k < nu_grid.size(); ++k) {
    if (!(nu_grid[k] > nu_grid[k - 1])) {
      throw ArgumentError("frequency grid must be strictly ascending");
    }
  }

  std::vector<double> centered(series.records.size());
  std::vector<double> taus(series.records.size());
  for (std::size_t n = 0; n < series.records.size(); ++n) {
    centered[n] = series.records[n].probability - 0.5;
    taus[n] = series.records[n].tau;
  }

  Spectrum spec{nu_grid, std::vector<Complex>(nu_grid.size()), series.grid};
  detail::parallel_for(nu_grid.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double w = -kTwoPi * nu_grid[k];
      Complex acc{};
      for (std::size_t n = 0; n < centered.size(); ++n) {
        if (centered[n] != 0.0) acc += centered[n] * std::polar(1.0, w * taus[n]);
      }
      spec.values[k] = acc;
    }
  });
  return spec;
}

PeakReport find_peaks(const Spectrum& spec, double dc_exclusion,
                      double threshold_rel) {
  if (!(dc_exclusion >= 0.0)) throw ArgumentError("dc_exclusion must be >= 0");
  if (!(threshold_rel > 0.0 && threshold_rel <= 1.0)) {
    throw ArgumentError("threshold_rel must lie in (0, 1]");
  }

  PeakReport report;
  report.dc_exclusion = dc_exclusion;
  report.threshold_rel = threshold_rel;

  const std::size_t n = spec.size();
  std::vector<double> mag(n);
  for (std::size_t k = 0; k < n; ++k) mag[k] = spec.magnitude(k);

  double included_max = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (spec.nu_grid[k] <= dc_exclusion) {
      if (!report.dc || mag[k] > report.dc->magnitude) {
        report.dc = Peak{k, spec.nu_grid[k], mag[k], spec.nu_grid[k], false, {}};
      }
    } else {
      included_max = std::max(included_max, mag[k]);
    }
  }
  if (!(included_max > 0.0)) return report;

  const double lobe = spec.source_grid.t_max > spec.source_grid.t_min
                          ? spec.source_grid.resolution()
                          : 0.0;
  const double floor = threshold_rel * included_max;
  constexpr double kNone = -std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k < n; ++k) {
    if (spec.nu_grid[k] <= dc_exclusion || mag[k] < floor) continue;
    const double left = k > 0 ? mag[k - 1] : kNone;
    const double right = k + 1 < n ? mag[k + 1] : kNone;
    if (!(mag[k] > left && mag[k] >= right)) continue;

    // Sidelobes of a stronger line sit within one resolution width of
    // something larger; genuine lines dominate their own main lobe.
    bool dominant = true;
    for (std::size_t j = k; j-- > 0 && spec.nu_grid[k] - spec.nu_grid[j] <= lobe;) {
      if (mag[j] >= mag[k]) { dominant = false; break; }
    }
    for (std::size_t j = k + 1;
         dominant && j < n && spec.nu_grid[j] - spec.nu_grid[k] <= lobe; ++j) {
      if (mag[j] > mag[k]) dominant = false;
    }
    if (dominant) {
      report.peaks.push_back({k, spec.nu_grid[k], mag[k], spec.nu_grid[k], false, {}});
    }
  }
  std::stable_sort(report.peaks.begin(), report.peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.magnitude > b.magnitude; });
  return report;
}

Refinement refine_peak(const Spectrum& spec, std::size_t index) {
  if (index >= spec.size()) throw ArgumentError("refine_peak: index out of range");
  const double raw = spec.nu_grid[index];
  if (index == 0 || index + 1 >= spec.size()) return {raw, false};

  const double left = spec.magnitude(index - 1);
  const double centre = spec.magnitude(index);
  const double right = spec.magnitude(index + 1);
  const double curvature = left - 2.0 * centre + right;
  if (!(curvature < 0.0) || centre < left || centre < right) return {raw, false};

  const double offset = std::clamp(0.5 * (left - right) / curvature, -0.5, 0.5);
  const double spacing = 0.5 * (spec.nu_grid[index + 1] - spec.nu_grid[index - 1]);
  return {raw + offset * spacing, true};
}

void refine_peaks(const Spectrum& spec, PeakReport& report) {
  for (Peak& p : report.peaks) {
    const Refinement r = refine_peak(spec, p.index);
    p.refined_nu = r.nu;
    p.refined = r.refined;
  }
}

PeakReport match_to_oracle(PeakReport report, const GapTable& table,
                           double tolerance) {
  if (!(tolerance > 0.0)) throw ArgumentError("match tolerance must be positive");

  std::map<std::pair<std::size_t, std::size_t>, int> claims;
  for (Peak& p : report.peaks) {
    p.match.reset();
    const Gap* best = nullptr;
    double best_delta = std::numeric_limits<double>::infinity();
    for (const Gap& g : table.entries) {
      const double delta = std::abs(p.refined_nu - g.value);
      if (delta < best_delta) {
        best = &g;
        best_delta = delta;
      }
    }
    if (best != nullptr && best_delta <= tolerance) {
      p.match = OracleMatch{best->lower, best->upper, best->value, best_delta, false};
      ++claims[{best->lower, best->upper}];
    }
  }
  for (Peak& p : report.peaks) {
    if (p.match) p.match->shared = claims[{p.match->lower, p.match->upper}] > 1;
  }
  return report;
}

}  // namespace ramseyqa
