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

#include "ramseyqa/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "ramseyqa/errors.hpp"

namespace ramseyqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Eigen2Pi {
  Eigen::VectorXd values;
  Matrix vectors;
};

Eigen2Pi eigh(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of the step Hamiltonian failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// One midpoint-exponential step: the schedule value at the step midpoint and
// the step length (ns).
struct PlannedStep {
  double schedule = 0.0;
  double length = 0.0;
};

std::vector<PlannedStep> plan_steps(double t0, double t1, const Schedule& sched,
                                    const StepPolicy& policy) {
  sched.validate();
  policy.validate_for(sched.total());
  if (!(t0 >= 0.0 && t0 < t1 && t1 <= sched.total())) {
    std::ostringstream msg;
    msg << "interval [" << t0 << ", " << t1
        << "] is not a forward sub-interval of [0, " << sched.total() << "]";
    throw ArgumentError(msg.str());
  }

  std::vector<double> cuts{t0};
  for (double b : {sched.hold_begin(), sched.hold_end()}) {
    if (b > cuts.back() && b < t1) cuts.push_back(b);
  }
  cuts.push_back(t1);

  std::vector<PlannedStep> plan;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double a = cuts[p];
    const double b = cuts[p + 1];
    const double len = b - a;
    if (a >= sched.hold_begin() && b <= sched.hold_end()) {
      plan.push_back({0.0, len});
      continue;
    }
    // The small slack keeps T / dt from rounding up to an extra step.
    const auto n = static_cast<std::size_t>(
        std::max(1.0, std::ceil(len / policy.dt - 1e-9)));
    const double h = len / static_cast<double>(n);
    plan.reserve(plan.size() + n);
    for (std::size_t k = 0; k < n; ++k) {
      const double mid = std::min(a + (static_cast<double>(k) + 0.5) * h, b);
      plan.push_back({schedule_value(mid, sched), h});
    }
  }
  return plan;
}

SegmentResult finish(Vector psi, int num_qubits, const StepPolicy& policy) {
  const double drift = std::abs(psi.norm() - 1.0);
  if (!(drift <= policy.renorm_tolerance)) {
    std::ostringstream msg;
    msg << "norm drift " << drift << " exceeds tolerance "
        << policy.renorm_tolerance;
    throw NumericalError(msg.str());
  }
  return {QuantumState::normalized(std::move(psi), num_qubits), drift};
}

}  // namespace

void StepPolicy::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ArgumentError("time step dt must be positive");
  }
  if (!(renorm_tolerance > 0.0 && renorm_tolerance <= 1e-6)) {
    throw ArgumentError("renorm_tolerance must lie in (0, 1e-6]");
  }
}

void StepPolicy::validate_for(double total_duration) const {
  validate();
  if (dt > total_duration / 10.0) {
    std::ostringstream msg;
    msg << "dt = " << dt << " ns exceeds a tenth of the protocol duration "
        << total_duration << " ns";
    throw ArgumentError(msg.str());
  }
}

Matrix step_propagator(const HermitianOperator& h, double dt) {
  const Eigen2Pi e = eigh(h);
  const Vector phases =
      (e.values * (-kTwoPi * dt))
          .unaryExpr([](double x) { return std::polar(1.0, x); });
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

Vector step(const Vector& psi, const HermitianOperator& h, double dt) {
  if (psi.size() != static_cast<Eigen::Index>(h.dim())) {
    throw ArgumentError("step: state and Hamiltonian dimensions differ");
  }
  const Eigen2Pi e = eigh(h);
  Vector coeffs = e.vectors.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, -kTwoPi * e.values(k) * dt);
  }
  return e.vectors * coeffs;
}

QuantumState step(const QuantumState& psi, const HermitianOperator& h,
                  double dt) {
  return QuantumState::normalized(step(psi.amplitudes(), h, dt),
                                  psi.num_qubits());
}

SegmentResult propagate(const QuantumState& psi, double t0, double t1,
                        const Hamiltonian& ham, const Schedule& sched,
                        const StepPolicy& policy) {
  if (psi.num_qubits() != ham.num_qubits()) {
    throw ArgumentError("propagate: state and model qubit counts differ");
  }
  Vector v = psi.amplitudes();
  for (const PlannedStep& s : plan_steps(t0, t1, sched, policy)) {
    v = step(v, ham.mix(s.schedule), s.length);
  }
  return finish(std::move(v), psi.num_qubits(), policy);
}

SegmentResult propagate_adjoint(const QuantumState& psi, double t0, double t1,
                                const Hamiltonian& ham, const Schedule& sched,
                                const StepPolicy& policy) {
  if (psi.num_qubits() != ham.num_qubits()) {
    throw ArgumentError("propagate_adjoint: state and model qubit counts differ");
  }
  const std::vector<PlannedStep> plan = plan_steps(t0, t1, sched, policy);
  Vector v = psi.amplitudes();
  for (auto it = plan.rbegin(); it != plan.rend(); ++it) {
    v = step(v, ham.mix(it->schedule), -it->length);
  }
  return finish(std::move(v), psi.num_qubits(), policy);
}

QuantumState evolve_interval(const QuantumState& psi, double t0, double t1,
                             const ModelParams& params, const Schedule& sched,
                             const StepPolicy& policy) {
  return propagate(psi, t0, t1, Hamiltonian(params), sched, policy).state;
}

}  // namespace ramseyqa
