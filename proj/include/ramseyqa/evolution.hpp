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

#include <vector>

#include "ramseyqa/model.hpp"
#include "ramseyqa/operators.hpp"

namespace ramseyqa {

/// Default propagation step (ns); keeps the per-step phase of the paper-scale
/// driver (10.7 GHz) below 0.07 rad.
inline constexpr double kDefaultTimeStep = 1e-3;
inline constexpr double kDefaultRenormTolerance = 1e-6;

struct StepPolicy {
  double dt = kDefaultTimeStep;                       ///< ns
  double renorm_tolerance = kDefaultRenormTolerance;  ///< max |1 - ||psi|||

  /// Throws ArgumentError unless dt > 0 and renorm_tolerance is in (0, 1e-6].
  void validate() const;
  /// Additionally requires dt <= total_duration / 10.
  void validate_for(double total_duration) const;
};

/// exp(-i 2 pi H dt) |psi> through the eigendecomposition of H. A negative
/// dt applies the adjoint propagator. The result is not renormalized.
Vector step(const Vector& psi, const HermitianOperator& h, double dt);
QuantumState step(const QuantumState& psi, const HermitianOperator& h,
                  double dt);

/// exp(-i 2 pi H dt) as a dense unitary.
Matrix step_propagator(const HermitianOperator& h, double dt);

struct SegmentResult {
  QuantumState state;
  double norm_drift = 0.0;  ///< |1 - ||psi||| before the final renormalization
};

/// Propagates `psi` from t0 to t1 under H(t) with the midpoint exponential
/// rule. Ramp pieces are cut into equal steps no longer than policy.dt; the
/// hold piece (constant H_P) is applied as a single exact exponential.
/// Throws ArgumentError unless 0 <= t0 < t1 <= 2T + tau, and NumericalError
/// when the accumulated norm drift exceeds policy.renorm_tolerance.
SegmentResult propagate(const QuantumState& psi, double t0, double t1,
                        const Hamiltonian& ham, const Schedule& sched,
                        const StepPolicy& policy);

/// Applies U(t1, t0)^dagger to `psi`, i.e. the exact adjoint of propagate()
/// with the same step partition.
SegmentResult propagate_adjoint(const QuantumState& psi, double t0, double t1,
                                const Hamiltonian& ham, const Schedule& sched,
                                const StepPolicy& policy);

/// State-only form of propagate().
QuantumState evolve_interval(const QuantumState& psi, double t0, double t1,
                             const ModelParams& params, const Schedule& sched,
                             const StepPolicy& policy);

}  // namespace ramseyqa
