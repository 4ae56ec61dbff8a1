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

#include "ramseyqa/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ramseyqa/errors.hpp"

namespace ramseyqa {

namespace {

using Schema = std::map<std::string, std::set<std::string>>;

const Schema& schema() {
  static const Schema s{
      {"model", {"L", "lambda", "omega", "g", "g_prime"}},
      {"schedule", {"T"}},
      {"grid", {"t_min", "t_max", "N"}},
      {"policy", {"dt", "renorm_tolerance"}},
      {"spectrum",
       {"nu_max", "nu_step", "dc_exclusion", "threshold_rel", "match_tolerance"}},
      {"output", {"directory", "trace_stride"}},
  };
  return s;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Shortest representation that parses back to the same double.
std::string exact(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Entry {
  std::string value;
  int line = 0;
};

class Reader {
 public:
  Reader(std::string_view source, std::map<std::string, Entry> entries)
      : source_(source), entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    std::ostringstream msg;
    msg << source_;
    if (auto it = entries_.find(key); it != entries_.end()) {
      msg << ":" << it->second.line;
    }
    msg << ": " << key << ": " << what;
    throw ConfigError(msg.str());
  }

  const Entry& require(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) fail(key, "missing mandatory key");
    return it->second;
  }

  double number(const std::string& key) const {
    return parse_number(key, require(key).value);
  }

  std::vector<double> numbers(const std::string& key) const {
    std::vector<double> out;
    std::string_view rest = require(key).value;
    while (true) {
      const auto comma = rest.find(',');
      out.push_back(parse_number(key, trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return out;
  }

  long long integer(const std::string& key) const {
    const std::string& text = require(key).value;
    long long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
      fail(key, "expected an integer, got '" + text + "'");
    }
    return v;
  }

  std::string text(const std::string& key) const { return require(key).value; }

 private:
  double parse_number(const std::string& key, std::string_view text) const {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} ||
        res.ptr != text.data() + text.size()) {
      fail(key, "expected a number, got '" + std::string(text) + "'");
    }
    return v;
  }

  std::string source_;
  std::map<std::string, Entry> entries_;
};

void ensure(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key + ": " + what);
}

std::string default_output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return kFallbackOutputDir;
}

}  // namespace

void ExperimentConfig::validate() const {
  try {
    model.validate();
  } catch (const ArgumentError& e) {
    throw ConfigError(std::string("[model] ") + e.what());
  }
  ensure(!anneal_times.empty(), "schedule.T", "at least one anneal time needed");
  try {
    grid.validate();
    policy.validate();
    for (double T : anneal_times) {
      ensure(T > 0.0 && std::isfinite(T), "schedule.T", "anneal times must be positive");
      policy.validate_for(2.0 * T + grid.t_max);
    }
  } catch (const ArgumentError& e) {
    throw ConfigError(e.what());
  }
  ensure(spectrum.nu_step > 0.0, "spectrum.nu_step", "must be positive");
  ensure(spectrum.nu_max >= spectrum.nu_step, "spectrum.nu_max",
         "must be at least one step");
  ensure(spectrum.dc_exclusion >= 0.0, "spectrum.dc_exclusion", "must be >= 0");
  ensure(spectrum.threshold_rel > 0.0 && spectrum.threshold_rel <= 1.0,
         "spectrum.threshold_rel", "must lie in (0, 1]");
  ensure(spectrum.match_tolerance > 0.0, "spectrum.match_tolerance",
         "must be positive");
  ensure(!output.directory.empty(), "output.directory", "must not be empty");
  ensure(output.trace_stride > 0.0, "output.trace_stride", "must be positive");
}

ParsedConfig parse_config(std::string_view text, std::string_view source) {
  std::map<std::string, Entry> entries;
  std::string section;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ConfigError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!schema().count(section)) fail("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (section.empty()) fail("key '" + key + "' appears before any [section]");
    if (!schema().at(section).count(key)) {
      fail("unknown key '" + key + "' in [" + section + "]");
    }
    if (value.empty()) fail("empty value for '" + key + "'");
    const std::string full = section + "." + key;
    if (entries.count(full)) fail("duplicate key '" + full + "'");
    entries.emplace(full, Entry{value, line_no});
  }

  const Reader r(source, std::move(entries));
  ParsedConfig parsed;
  ExperimentConfig& c = parsed.config;

  const long long L = r.integer("model.L");
  if (L < 1 || L > 20) r.fail("model.L", "must lie in [1, 20]");
  c.model.num_qubits = static_cast<int>(L);
  c.model.lambda = r.numbers("model.lambda");
  c.model.omega = r.numbers("model.omega");
  c.model.g = r.number("model.g");
  c.model.g_prime = r.number("model.g_prime");
  c.anneal_times = r.numbers("schedule.T");
  c.grid.t_min = r.number("grid.t_min");
  c.grid.t_max = r.number("grid.t_max");
  const long long N = r.integer("grid.N");
  if (N < 2) r.fail("grid.N", "must be at least 2");
  c.grid.count = static_cast<std::size_t>(N);

  auto optional_number = [&](const std::string& key, double fallback) {
    if (r.has(key)) return r.number(key);
    parsed.defaults_applied.push_back(key);
    return fallback;
  };
  const double resolution =
      c.grid.t_max > c.grid.t_min ? 1.0 / (c.grid.t_max - c.grid.t_min) : 0.0;
  c.policy.dt = optional_number("policy.dt", kDefaultTimeStep);
  c.policy.renorm_tolerance =
      optional_number("policy.renorm_tolerance", kDefaultRenormTolerance);
  c.spectrum.nu_max = optional_number("spectrum.nu_max", 5.0);
  c.spectrum.nu_step = optional_number("spectrum.nu_step", 1e-3);
  c.spectrum.dc_exclusion = optional_number("spectrum.dc_exclusion", 3.0 * resolution);
  c.spectrum.threshold_rel = optional_number("spectrum.threshold_rel", 0.1);
  c.spectrum.match_tolerance = optional_number("spectrum.match_tolerance", resolution);
  c.output.trace_stride = optional_number("output.trace_stride", 0.5);
  if (r.has("output.directory")) {
    c.output.directory = r.text("output.directory");
  } else {
    c.output.directory = default_output_dir();
    parsed.defaults_applied.push_back("output.directory");
  }

  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
  return parsed;
}

ParsedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

std::string to_config_text(const ExperimentConfig& c) {
  auto list = [](const std::vector<double>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k) out += ", ";
      out += exact(xs[k]);
    }
    return out;
  };
  std::ostringstream os;
  os << "[model]\n"
     << "L = " << c.model.num_qubits << "\n"
     << "lambda = " << list(c.model.lambda) << "\n"
     << "omega = " << list(c.model.omega) << "\n"
     << "g = " << exact(c.model.g) << "\n"
     << "g_prime = " << exact(c.model.g_prime) << "\n\n"
     << "[schedule]\n"
     << "T = " << list(c.anneal_times) << "\n\n"
     << "[grid]\n"
     << "t_min = " << exact(c.grid.t_min) << "\n"
     << "t_max = " << exact(c.grid.t_max) << "\n"
     << "N = " << c.grid.count << "\n\n"
     << "[policy]\n"
     << "dt = " << exact(c.policy.dt) << "\n"
     << "renorm_tolerance = " << exact(c.policy.renorm_tolerance) << "\n\n"
     << "[spectrum]\n"
     << "nu_max = " << exact(c.spectrum.nu_max) << "\n"
     << "nu_step = " << exact(c.spectrum.nu_step) << "\n"
     << "dc_exclusion = " << exact(c.spectrum.dc_exclusion) << "\n"
     << "threshold_rel = " << exact(c.spectrum.threshold_rel) << "\n"
     << "match_tolerance = " << exact(c.spectrum.match_tolerance) << "\n\n"
     << "[output]\n"
     << "directory = " << c.output.directory << "\n"
     << "trace_stride = " << exact(c.output.trace_stride) << "\n";
  return os.str();
}

nlohmann::json to_json(const ExperimentConfig& c) {
  return {
      {"model",
       {{"L", c.model.num_qubits},
        {"lambda", c.model.lambda},
        {"omega", c.model.omega},
        {"g", c.model.g},
        {"g_prime", c.model.g_prime}}},
      {"schedule", {{"T", c.anneal_times}}},
      {"grid", {{"t_min", c.grid.t_min}, {"t_max", c.grid.t_max}, {"N", c.grid.count}}},
      {"policy", {{"dt", c.policy.dt}, {"renorm_tolerance", c.policy.renorm_tolerance}}},
      {"spectrum",
       {{"nu_max", c.spectrum.nu_max},
        {"nu_step", c.spectrum.nu_step},
        {"dc_exclusion", c.spectrum.dc_exclusion},
        {"threshold_rel", c.spectrum.threshold_rel},
        {"match_tolerance", c.spectrum.match_tolerance}}},
      {"output",
       {{"directory", c.output.directory}, {"trace_stride", c.output.trace_stride}}},
  };
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  try {
    for (const auto& [section, body] : j.items()) {
      if (!schema().count(section)) {
        throw ConfigError("unknown section '" + section + "'");
      }
      for (const auto& [key, value] : body.items()) {
        if (!schema().at(section).count(key)) {
          throw ConfigError("unknown key '" + section + "." + key + "'");
        }
      }
      if (body.size() != schema().at(section).size()) {
        throw ConfigError("section '" + section + "' is incomplete");
      }
    }
    if (j.size() != schema().size()) throw ConfigError("missing sections");

    ExperimentConfig c;
    const auto& m = j.at("model");
    c.model.num_qubits = m.at("L").get<int>();
    c.model.lambda = m.at("lambda").get<std::vector<double>>();
    c.model.omega = m.at("omega").get<std::vector<double>>();
    c.model.g = m.at("g").get<double>();
    c.model.g_prime = m.at("g_prime").get<double>();
    c.anneal_times = j.at("schedule").at("T").get<std::vector<double>>();
    c.grid.t_min = j.at("grid").at("t_min").get<double>();
    c.grid.t_max = j.at("grid").at("t_max").get<double>();
    c.grid.count = j.at("grid").at("N").get<std::size_t>();
    c.policy.dt = j.at("policy").at("dt").get<double>();
    c.policy.renorm_tolerance = j.at("policy").at("renorm_tolerance").get<double>();
    const auto& s = j.at("spectrum");
    c.spectrum.nu_max = s.at("nu_max").get<double>();
    c.spectrum.nu_step = s.at("nu_step").get<double>();
    c.spectrum.dc_exclusion = s.at("dc_exclusion").get<double>();
    c.spectrum.threshold_rel = s.at("threshold_rel").get<double>();
    c.spectrum.match_tolerance = s.at("match_tolerance").get<double>();
    c.output.directory = j.at("output").at("directory").get<std::string>();
    c.output.trace_stride = j.at("output").at("trace_stride").get<double>();
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config json: ") + e.what());
  }
}

}  // namespace ramseyqa
