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

#include "ramseyqa/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <type_traits>

#include "ramseyqa/errors.hpp"

namespace ramseyqa {

namespace fs = std::filesystem;

namespace {

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out = open_for_write(path);
  out << j.dump(2) << '\n';
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

template <class Fn>
auto timed(std::map<std::string, double>& timings, const std::string& stage,
           double anneal_time, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      timings[stage] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } else {
      auto result = fn();
      timings[stage] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return result;
    }
  } catch (const NumericalError& e) {
    throw NumericalError("stage '" + stage + "' at T = " + short_number(anneal_time) +
                         " ns: " + e.what());
  }
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

std::string format_csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_series_csv(const fs::path& path, const RamseySeries& series) {
  std::ofstream out = open_for_write(path);
  out << "tau_ns,probability\n";
  for (const RamseyRecord& r : series.records) {
    out << format_csv_number(r.tau) << ',' << format_csv_number(r.probability) << '\n';
  }
}

void write_spectrum_csv(const fs::path& path, const Spectrum& spec) {
  std::ofstream out = open_for_write(path);
  out << "nu_ghz,re,im,abs\n";
  for (std::size_t k = 0; k < spec.size(); ++k) {
    out << format_csv_number(spec.nu_grid[k]) << ','
        << format_csv_number(spec.values[k].real()) << ','
        << format_csv_number(spec.values[k].imag()) << ','
        << format_csv_number(spec.magnitude(k)) << '\n';
  }
}

nlohmann::json peaks_to_json(const PeakReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Peak& p : report.peaks) {
    nlohmann::json match = nullptr;
    if (p.match) {
      match = {{"i", p.match->lower},
               {"j", p.match->upper},
               {"gap_ghz", p.match->gap},
               {"delta_ghz", p.match->delta},
               {"shared", p.match->shared}};
    }
    arr.push_back({{"nu_ghz", p.nu},
                   {"refined_nu_ghz", p.refined_nu},
                   {"magnitude", p.magnitude},
                   {"match", match}});
  }
  return arr;
}

nlohmann::json gaps_to_json(const GapTable& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Gap& g : table.entries) {
    arr.push_back({{"i", g.lower}, {"j", g.upper}, {"gap_ghz", g.value}});
  }
  return arr;
}

nlohmann::json fit_to_json(const CosineFit& fit) {
  return {{"a", fit.a},
          {"b", fit.b},
          {"phi", fit.phi},
          {"nu_ghz", fit.nu},
          {"rms_residual", fit.rms_residual}};
}

std::string anneal_dir_name(double anneal_time) {
  return "T_" + short_number(anneal_time) + "ns";
}

AnnealRun analyse_anneal_time(const ExperimentConfig& config,
                              const EigenSystem& oracle, const GapTable& table,
                              double anneal_time, unsigned jobs) {
  AnnealRun run;
  run.anneal_time = anneal_time;
  const SpectrumSettings& s = config.spectrum;

  run.series = timed(run.timings_s, "sweep", anneal_time, [&] {
    return sweep(config.model, anneal_time, config.grid, config.policy, jobs);
  });
  run.spectrum = timed(run.timings_s, "dft", anneal_time, [&] {
    return dft(run.series, frequency_grid(0.0, s.nu_max, s.nu_step), jobs);
  });
  run.peaks = timed(run.timings_s, "peaks", anneal_time, [&] {
    PeakReport report = find_peaks(run.spectrum, s.dc_exclusion, s.threshold_rel);
    refine_peaks(run.spectrum, report);
    return match_to_oracle(std::move(report), table, s.match_tolerance);
  });

  // Fit at the gap claimed by the strongest matched peak; without any match
  // fall back to the strongest peak itself.
  std::optional<double> fit_nu;
  for (const Peak& p : run.peaks.peaks) {
    if (p.match) {
      fit_nu = p.match->gap;
      break;
    }
  }
  if (!fit_nu && !run.peaks.peaks.empty()) fit_nu = run.peaks.peaks.front().refined_nu;
  if (fit_nu && *fit_nu > 0.0) {
    run.fit = timed(run.timings_s, "fit", anneal_time,
                    [&] { return cosine_fit(run.series, *fit_nu); });
  }

  run.populations_at_hold = populations(
      QuantumState::normalized(run.series.state_at_hold, config.model.num_qubits),
      oracle);
  return run;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json runs_json = nlohmann::json::array();
  for (const AnnealRun& r : runs) {
    nlohmann::json dc = nullptr;
    if (r.peaks.dc) {
      dc = {{"nu_ghz", r.peaks.dc->nu}, {"magnitude", r.peaks.dc->magnitude}};
    }
    runs_json.push_back({
        {"T_ns", r.anneal_time},
        {"series_csv", r.series_path.string()},
        {"spectrum_csv", r.spectrum_path.string()},
        {"peaks_json", r.peaks_path.string()},
        {"peaks", peaks_to_json(r.peaks)},
        {"dc_component", dc},
        {"cosine_fit", r.fit ? fit_to_json(*r.fit) : nlohmann::json(nullptr)},
        {"populations_at_T", vector_json(r.populations_at_hold)},
        {"max_norm_drift", r.series.max_norm_drift},
        {"timings_s", r.timings_s},
    });
  }
  return {
      {"config", ramseyqa::to_json(config)},
      {"defaults_applied", defaults_applied},
      {"oracle", oracle_to_json(oracle, gap_table)},
      {"runs", runs_json},
  };
}

RunReport run_experiment(const ParsedConfig& parsed, const fs::path& out_dir,
                         unsigned jobs) {
  RunReport report;
  report.config = parsed.config;
  report.config.output.directory = out_dir.string();
  report.defaults_applied = parsed.defaults_applied;
  const ExperimentConfig& config = report.config;
  config.validate();

  report.oracle = diagonalize(build_problem(config.model));
  report.gap_table = gaps(report.oracle);
  // Fails early with a configuration error on a degenerate driver.
  initial_state(config.model);

  fs::create_directories(out_dir);
  for (double T : config.anneal_times) {
    AnnealRun run =
        analyse_anneal_time(config, report.oracle, report.gap_table, T, jobs);
    const fs::path dir = out_dir / anneal_dir_name(T);
    fs::create_directories(dir);
    run.series_path = dir / "series.csv";
    run.spectrum_path = dir / "spectrum.csv";
    run.peaks_path = dir / "peaks.json";
    write_series_csv(run.series_path, run.series);
    write_spectrum_csv(run.spectrum_path, run.spectrum);
    write_json(run.peaks_path, peaks_to_json(run.peaks));
    report.runs.push_back(std::move(run));
  }
  report.report_path = out_dir / "report.json";
  write_json(report.report_path, report.to_json());
  return report;
}

fs::path resolve_output_dir(const ExperimentConfig& config,
                            const std::string& cli_override) {
  if (!cli_override.empty()) return cli_override;
  return config.output.directory;
}

void print_oracle_table(std::ostream& os, const EigenSystem& es,
                        const GapTable& table) {
  const auto flags = os.flags();
  os << std::fixed << std::setprecision(6);
  os << "level  energy_ghz\n";
  for (std::size_t k = 0; k < es.size(); ++k) {
    os << std::setw(5) << k << "  " << std::setw(11)
       << es.energies(static_cast<Eigen::Index>(k)) << '\n';
  }
  os << "\n    i    j     gap_ghz\n";
  for (const Gap& g : table.entries) {
    os << std::setw(5) << g.lower << std::setw(5) << g.upper << "  "
       << std::setw(10) << g.value << '\n';
  }
  os.flags(flags);
}

nlohmann::json oracle_to_json(const EigenSystem& es, const GapTable& table) {
  return {{"energies_ghz", vector_json(es.energies)}, {"gaps", gaps_to_json(table)}};
}

std::vector<TraceSample> trace_populations(const QuantumState& psi0,
                                           const ModelParams& params,
                                           const Schedule& sched,
                                           const StepPolicy& policy,
                                           double stride) {
  sched.validate();
  if (!(stride > 0.0)) throw ArgumentError("trace stride must be positive");

  std::vector<double> times;
  const double total = sched.total();
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * stride;
    if (t >= total) break;
    times.push_back(t);
  }
  times.insert(times.end(), {sched.hold_begin(), sched.hold_end(), total});
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              times.end());

  const Hamiltonian ham(params);
  std::vector<TraceSample> samples;
  samples.reserve(times.size());
  QuantumState psi = psi0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (k > 0) psi = propagate(psi, times[k - 1], times[k], ham, sched, policy).state;
    const double a = schedule_value(times[k], sched);
    samples.push_back({times[k], a, populations(psi, diagonalize(ham.mix(a)))});
  }
  return samples;
}

void write_trace_csv(const fs::path& path, const std::vector<TraceSample>& samples) {
  std::ofstream out = open_for_write(path);
  out << "t_ns,A";
  const Eigen::Index levels = samples.empty() ? 0 : samples.front().populations.size();
  for (Eigen::Index k = 0; k < levels; ++k) out << ",p" << k;
  out << '\n';
  for (const TraceSample& s : samples) {
    out << format_csv_number(s.t) << ',' << format_csv_number(s.schedule);
    for (Eigen::Index k = 0; k < s.populations.size(); ++k) {
      out << ',' << format_csv_number(s.populations(k));
    }
    out << '\n';
  }
}

}  // namespace ramseyqa
