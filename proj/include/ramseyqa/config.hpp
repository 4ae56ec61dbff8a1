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

// Experiment configuration: a sectioned key = value text format.
//
//   [model]     L, lambda, omega, g, g_prime      (all mandatory)
//   [schedule]  T                                  (mandatory, list allowed)
//   [grid]      t_min, t_max, N                    (mandatory)
//   [policy]    dt, renorm_tolerance
//   [spectrum]  nu_max, nu_step, dc_exclusion, threshold_rel, match_tolerance
//   [output]    directory, trace_stride
//
// Lists are comma separated, '#' starts a comment. Unknown sections or keys
// and repeated keys are errors.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ramseyqa/evolution.hpp"
#include "ramseyqa/model.hpp"
#include "ramseyqa/protocol.hpp"

namespace ramseyqa {

/// Overrides the built-in default output directory when set.
inline constexpr const char* kOutputDirEnv = "RAMSEYQA_OUTPUT_DIR";
inline constexpr const char* kFallbackOutputDir = "ramseyqa_out";

struct SpectrumSettings {
  double nu_max = 5.0;
  double nu_step = 1e-3;
  double dc_exclusion = 0.0;     ///< default 3 / (t_max - t_min)
  double threshold_rel = 0.1;
  double match_tolerance = 0.0;  ///< default 1 / (t_max - t_min)

  bool operator==(const SpectrumSettings&) const = default;
};

struct OutputSettings {
  std::string directory;
  double trace_stride = 0.5;  ///< ns

  bool operator==(const OutputSettings&) const = default;
};

struct ExperimentConfig {
  ModelParams model;
  std::vector<double> anneal_times;  ///< T values (ns)
  SweepGrid grid;
  StepPolicy policy;
  SpectrumSettings spectrum;
  OutputSettings output;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  bool operator==(const ExperimentConfig& o) const {
    return model == o.model && anneal_times == o.anneal_times &&
           grid == o.grid && policy.dt == o.policy.dt &&
           policy.renorm_tolerance == o.policy.renorm_tolerance &&
           spectrum == o.spectrum && output == o.output;
  }
};

struct ParsedConfig {
  ExperimentConfig config;
  /// "section.key" for every value that came from a default.
  std::vector<std::string> defaults_applied;
};

/// Throws ConfigError with "<source>:<line>: ..." diagnostics.
ParsedConfig parse_config(std::string_view text,
                          std::string_view source = "<config>");
ParsedConfig load_config(const std::string& path);

/// Config text with every value explicit; parse_config() of it reproduces
/// the same ExperimentConfig bit for bit.
std::string to_config_text(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);
/// Strict inverse of to_json(). Throws ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j);

}  // namespace ramseyqa
