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

// The Ramsey annealing protocol: prepare (|E0_D> + |E1_D>)/sqrt(2), anneal
// forward to H_P over T, hold for tau, anneal back to H_D over T, and read
// out the overlap with the initial state. Sweeping tau gives the record that
// the spectrum module analyses.

#include <cstddef>
#include <vector>

#include "ramseyqa/evolution.hpp"
#include "ramseyqa/model.hpp"
#include "ramseyqa/oracle.hpp"

namespace ramseyqa {

/// Slack allowed on a probability outside [0, 1] before it is an error.
inline constexpr double kProbabilitySlack = 1e-9;

struct SweepGrid {
  double t_min = 0.0;  ///< ns
  double t_max = 0.0;  ///< ns
  std::size_t count = 0;

  /// Throws ArgumentError unless count >= 2 and t_max > t_min >= 0.
  void validate() const;
  /// tau_n for n = 0 .. count-1 (zero-based).
  double tau(std::size_t n) const;
  std::vector<double> taus() const;
  /// Frequency resolution 1 / (t_max - t_min) in GHz.
  double resolution() const { return 1.0 / (t_max - t_min); }

  bool operator==(const SweepGrid&) const = default;
};

struct RamseyRecord {
  double tau = 0.0;
  double probability = 0.0;
};

struct RamseySeries {
  std::vector<RamseyRecord> records;  ///< strictly increasing tau
  ModelParams params;
  double anneal_time = 0.0;
  StepPolicy policy;
  SweepGrid grid;
  /// Largest norm drift seen on any propagated segment.
  double max_norm_drift = 0.0;
  /// Amplitudes of |psi(T)>, the state entering the hold.
  Vector state_at_hold;
};

/// P(tau) ~ a + b cos(2 pi nu tau + phi) with nu held fixed.
struct CosineFit {
  double a = 0.0;
  double b = 0.0;    ///< >= 0
  double phi = 0.0;  ///< radians, in (-pi, pi]
  double nu = 0.0;   ///< GHz
  double rms_residual = 0.0;
};

/// (|E0_D> + |E1_D>)/sqrt(2) from the phase-fixed driver eigenvectors. Throws
/// ConfigError when level 0 or level 1 of the driver is degenerate.
QuantumState initial_state(const ModelParams& params);
QuantumState initial_state(const Hamiltonian& ham);

struct RunOutcome {
  double probability = 0.0;
  double norm_drift = 0.0;        ///< worst segment drift
  QuantumState state_at_hold_begin;  ///< |psi(T)>
  QuantumState final_state;          ///< |psi(2T + tau)>
};

/// One full protocol run, propagating all three segments directly.
RunOutcome run_protocol(const ModelParams& params, double anneal_time,
                        double tau, const StepPolicy& policy);
RunOutcome run_protocol(const Hamiltonian& ham, double anneal_time, double tau,
                        const StepPolicy& policy);

/// |<psi0|psi(2T + tau)>|^2.
double run_once(const ModelParams& params, double anneal_time, double tau,
                const StepPolicy& policy);

/// run_once for every tau on the grid. Both ramps are independent of tau, so
/// they are propagated once: the forward ramp gives |psi(T)>, the adjoint of
/// the reverse ramp gives |phi> = U_rev^dagger |psi0>, and each sample is
/// |<phi| exp(-i 2 pi H_P tau) |psi(T)>|^2 evaluated in the H_P eigenbasis.
/// Samples are independent and are spread over `jobs` threads; the result
/// does not depend on `jobs`.
RamseySeries sweep(const ModelParams& params, double anneal_time,
                   const SweepGrid& grid, const StepPolicy& policy,
                   unsigned jobs = 1);

/// Linear least squares for a, b cos(phi), b sin(phi). Throws ArgumentError
/// for nu <= 0 or fewer than 3 records, NumericalError when the normal
/// equations are singular (nu aliased onto the sampling grid).
CosineFit cosine_fit(const RamseySeries& series, double nu);

}  // namespace ramseyqa
