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

// Physical model: the annealing schedule A(t), the transverse-field driver,
// and the Zeeman + Ising + flip-flop problem Hamiltonian on an open chain.
//
// Units: every coefficient is a linear frequency in GHz and every time is in
// ns. The 2*pi that turns GHz into rad/ns is applied by the propagator, never
// here.

#include <vector>

#include "ramseyqa/operators.hpp"

namespace ramseyqa {

struct ModelParams {
  int num_qubits = 0;
  std::vector<double> lambda;  ///< driver amplitudes per qubit (GHz)
  std::vector<double> omega;   ///< qubit frequencies (GHz)
  double g = 0.0;              ///< Ising zz coupling (GHz)
  double g_prime = 0.0;        ///< flip-flop coupling (GHz)

  /// Throws ArgumentError on L < 1, length mismatch, or any lambda <= 0.
  void validate() const;

  bool operator==(const ModelParams&) const = default;
};

struct Schedule {
  double anneal_time = 0.0;  ///< T (ns)
  double hold_time = 0.0;    ///< tau (ns)

  /// Throws ArgumentError unless T > 0 and tau >= 0.
  void validate() const;
  double total() const { return 2.0 * anneal_time + hold_time; }
  double hold_begin() const { return anneal_time; }
  double hold_end() const { return anneal_time + hold_time; }
};

/// A(t): 1 - t/T on the forward ramp, 0 during the hold, rising back to 1
/// over the reverse ramp. Throws ArgumentError for t outside [0, 2T + tau].
double schedule_value(double t, const Schedule& sched);

/// sum_j (lambda_j / 2) X_j
HermitianOperator build_driver(const ModelParams& params);

/// sum_j (omega_j / 2) Z_j + sum_{j<L} [g Z_j Z_{j+1}
///   + g' (S+_j S-_{j+1} + S-_j S+_{j+1})]
HermitianOperator build_problem(const ModelParams& params);

/// Driver and problem operators built once, so H(t) is a cheap linear mix.
class Hamiltonian {
 public:
  explicit Hamiltonian(const ModelParams& params);
  /// Arbitrary driver/problem pair of equal qubit count.
  Hamiltonian(HermitianOperator driver, HermitianOperator problem);

  const HermitianOperator& driver() const { return driver_; }
  const HermitianOperator& problem() const { return problem_; }
  int num_qubits() const { return driver_.num_qubits(); }

  /// A * H_D + (1 - A) * H_P. A outside [0, 1] is rejected.
  HermitianOperator mix(double a) const;

  /// H(t) = A(t) H_D + (1 - A(t)) H_P. Exactly H_P on the hold segment and
  /// exactly H_D at both ends of the protocol.
  HermitianOperator at(double t, const Schedule& sched) const;

 private:
  HermitianOperator driver_;
  HermitianOperator problem_;
};

/// Convenience wrapper around Hamiltonian(params).at(t, sched).
HermitianOperator hamiltonian_at(double t, const ModelParams& params,
                                 const Schedule& sched);

}  // namespace ramseyqa
