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

// The experiment pipeline behind the command-line tool.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramseyqa/config.hpp"
#include "ramseyqa/oracle.hpp"
#include "ramseyqa/protocol.hpp"
#include "ramseyqa/spectrum.hpp"

namespace ramseyqa {

/// Renders a double with 12 significant digits, as used in every CSV file.
std::string format_csv_number(double x);

/// series.csv: `tau_ns,probability`
void write_series_csv(const std::filesystem::path& path,
                      const RamseySeries& series);
/// spectrum.csv: `nu_ghz,re,im,abs`
void write_spectrum_csv(const std::filesystem::path& path,
                        const Spectrum& spec);

nlohmann::json peaks_to_json(const PeakReport& report);
nlohmann::json gaps_to_json(const GapTable& table);
nlohmann::json fit_to_json(const CosineFit& fit);

/// Everything produced for one anneal time T.
struct AnnealRun {
  double anneal_time = 0.0;
  std::filesystem::path series_path;
  std::filesystem::path spectrum_path;
  std::filesystem::path peaks_path;
  RamseySeries series;
  Spectrum spectrum;
  PeakReport peaks;
  std::optional<CosineFit> fit;
  /// Problem-eigenbasis populations of |psi(T)>.
  Eigen::VectorXd populations_at_hold;
  std::map<std::string, double> timings_s;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<std::string> defaults_applied;
  EigenSystem oracle;
  GapTable gap_table;
  std::vector<AnnealRun> runs;
  std::filesystem::path report_path;

  nlohmann::json to_json() const;
};

/// Subdirectory used for one anneal time, e.g. "T_37.5ns".
std::string anneal_dir_name(double anneal_time);

/// Full sweep -> dft -> peaks -> oracle match -> cosine fit chain for one T.
/// Nothing is written to disk.
AnnealRun analyse_anneal_time(const ExperimentConfig& config,
                              const EigenSystem& oracle,
                              const GapTable& table, double anneal_time,
                              unsigned jobs);

/// Runs every configured T and writes <out>/T_<T>ns/{series.csv,
/// spectrum.csv,peaks.json} plus <out>/report.json. Numerical failures are
/// rethrown as NumericalError naming the stage and T.
RunReport run_experiment(const ParsedConfig& parsed,
                         const std::filesystem::path& out_dir, unsigned jobs);

/// Output directory precedence: explicit flag, config, environment, fallback.
std::filesystem::path resolve_output_dir(const ExperimentConfig& config,
                                         const std::string& cli_override);

/// Problem-Hamiltonian energies and gaps, printed with 6 decimals.
void print_oracle_table(std::ostream& os, const EigenSystem& es,
                        const GapTable& table);
nlohmann::json oracle_to_json(const EigenSystem& es, const GapTable& table);

struct TraceSample {
  double t = 0.0;
  double schedule = 0.0;
  Eigen::VectorXd populations;
};

/// Instantaneous-eigenbasis populations of one protocol run, sampled every
/// `stride` ns plus the segment boundaries T, T + tau and 2T + tau.
std::vector<TraceSample> trace_populations(const QuantumState& psi0,
                                           const ModelParams& params,
                                           const Schedule& sched,
                                           const StepPolicy& policy,
                                           double stride);

/// trace.csv: `t_ns,A,p0,...,p{d-1}`
void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceSample>& samples);

}  // namespace ramseyqa
