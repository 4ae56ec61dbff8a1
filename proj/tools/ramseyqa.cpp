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

// ramseyqa: command-line front end.
//
//   ramseyqa run    --config <path> [--out <dir>] [--jobs <k>]
//   ramseyqa oracle --config <path>
//   ramseyqa trace  --config <path> --tau <ns>
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ramseyqa/errors.hpp"
#include "ramseyqa/pipeline.hpp"

namespace {

using namespace ramseyqa;
namespace fs = std::filesystem;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int cmd_run(const std::string& config_path, const std::string& out,
            unsigned jobs) {
  const ParsedConfig parsed = load_config(config_path);
  const fs::path dir = resolve_output_dir(parsed.config, out);
  const RunReport report = run_experiment(parsed, dir, jobs);

  for (const std::string& key : report.defaults_applied) {
    std::cout << "default applied: " << key << '\n';
  }
  std::cout << std::fixed << std::setprecision(6);
  for (const AnnealRun& r : report.runs) {
    std::cout << "T = " << r.anneal_time << " ns: " << r.peaks.peaks.size()
              << " peak(s)";
    if (r.peaks.dc) std::cout << ", DC |f| = " << r.peaks.dc->magnitude;
    std::cout << '\n';
    for (const Peak& p : r.peaks.peaks) {
      std::cout << "  nu = " << p.refined_nu << " GHz  |f| = " << p.magnitude;
      if (p.match) {
        std::cout << "  -> gap (" << p.match->lower << "," << p.match->upper
                  << ") = " << p.match->gap << " GHz, delta " << p.match->delta;
      } else {
        std::cout << "  (no oracle gap within tolerance)";
      }
      std::cout << '\n';
    }
    if (r.fit) {
      std::cout << "  fit at " << r.fit->nu << " GHz: a = " << r.fit->a
                << ", b = " << r.fit->b << ", rms = " << r.fit->rms_residual
                << '\n';
    }
  }
  std::cout << "report: " << report.report_path.string() << '\n';
  return 0;
}

int cmd_oracle(const std::string& config_path) {
  const ParsedConfig parsed = load_config(config_path);
  const EigenSystem es = diagonalize(build_problem(parsed.config.model));
  const GapTable table = gaps(es);
  print_oracle_table(std::cout, es, table);

  const fs::path dir = resolve_output_dir(parsed.config, "");
  fs::create_directories(dir);
  const fs::path json_path = dir / "oracle.json";
  std::ofstream(json_path) << oracle_to_json(es, table).dump(2) << '\n';
  std::cout << "\noracle: " << json_path.string() << '\n';
  return 0;
}

int cmd_trace(const std::string& config_path, double tau) {
  if (!(tau >= 0.0)) throw ConfigError("--tau must be >= 0");
  const ParsedConfig parsed = load_config(config_path);
  const ExperimentConfig& c = parsed.config;
  const QuantumState psi0 = initial_state(c.model);
  const fs::path dir = resolve_output_dir(c, "");

  for (double T : c.anneal_times) {
    const Schedule sched{T, tau};
    try {
      c.policy.validate_for(sched.total());
    } catch (const ArgumentError& e) {
      throw ConfigError(e.what());
    }
    const auto samples =
        trace_populations(psi0, c.model, sched, c.policy, c.output.trace_stride);
    const fs::path sub = dir / anneal_dir_name(T);
    fs::create_directories(sub);
    std::ostringstream name;
    name << "trace_tau" << tau << "ns.csv";
    write_trace_csv(sub / name.str(), samples);

    // Populations entering the hold, in the problem eigenbasis.
    for (const TraceSample& s : samples) {
      if (s.t == sched.hold_begin()) {
        std::cout << "T = " << T << " ns, populations at t = T:";
        for (Eigen::Index k = 0; k < s.populations.size(); ++k) {
          std::cout << ' ' << std::fixed << std::setprecision(4) << s.populations(k);
        }
        std::cout << std::defaultfloat << '\n';
      }
    }
    std::cout << "trace: " << (sub / name.str()).string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey-type quantum annealing gap estimation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  double tau = 0.0;

  auto* run = app.add_subcommand("run", "sweep tau, transform, and match peaks");
  run->add_option("--config", config_path, "experiment config")->required();
  run->add_option("--out", out_dir, "output directory (overrides config)");
  run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "print problem energies and gaps");
  oracle->add_option("--config", config_path, "experiment config")->required();

  auto* trace = app.add_subcommand("trace", "instantaneous populations of one run");
  trace->add_option("--config", config_path, "experiment config")->required();
  trace->add_option("--tau", tau, "hold time (ns)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) return cmd_run(config_path, out_dir, jobs);
    if (*oracle) return cmd_oracle(config_path);
    if (*trace) return cmd_trace(config_path, tau);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ArgumentError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
