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

#include "ramseyqa/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "parallel.hpp"
#include "ramseyqa/errors.hpp"

namespace ramseyqa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double checked_probability(double p, double tau) {
  if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
    std::ostringstream msg;
    msg << "projection probability " << p << " outside [0, 1] at tau = " << tau
        << " ns";
    throw NumericalError(msg.str());
  }
  return p;
}

}  // namespace

void SweepGrid::validate() const {
  if (count < 2) throw ArgumentError("sweep grid needs N >= 2 samples");
  if (!(t_min >= 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
    throw ArgumentError("sweep grid needs t_max > t_min >= 0");
  }
}

double SweepGrid::tau(std::size_t n) const {
  return t_min + static_cast<double>(n) / static_cast<double>(count - 1) *
                     (t_max - t_min);
}

std::vector<double> SweepGrid::taus() const {
  validate();
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = tau(n);
  return out;
}

QuantumState initial_state(const ModelParams& params) {
  return initial_state(Hamiltonian(params));
}

QuantumState initial_state(const Hamiltonian& ham) {
  const EigenSystem driver = diagonalize(ham.driver());
  const Eigen::VectorXd& e = driver.energies;
  const bool ground_degenerate = e(1) - e(0) <= kDegeneracyTolerance;
  const bool excited_degenerate =
      e.size() > 2 && e(2) - e(1) <= kDegeneracyTolerance;
  if (ground_degenerate || excited_degenerate) {
    throw ConfigError(
        "driver levels 0/1 are degenerate (equal or symmetric lambda "
        "values?); the initial superposition (|E0> + |E1>)/sqrt(2) of the "
        "driver is ill-defined");
  }
  return QuantumState::normalized(driver.states.col(0) + driver.states.col(1),
                                  ham.num_qubits());
}

RunOutcome run_protocol(const ModelParams& params, double anneal_time,
                        double tau, const StepPolicy& policy) {
  return run_protocol(Hamiltonian(params), anneal_time, tau, policy);
}

RunOutcome run_protocol(const Hamiltonian& ham, double anneal_time, double tau,
                        const StepPolicy& policy) {
  const Schedule sched{anneal_time, tau};
  sched.validate();
  const QuantumState psi0 = initial_state(ham);

  SegmentResult forward =
      propagate(psi0, 0.0, sched.hold_begin(), ham, sched, policy);
  QuantumState at_hold = forward.state;
  double drift = forward.norm_drift;

  QuantumState current = forward.state;
  if (tau > 0.0) {
    SegmentResult hold = propagate(current, sched.hold_begin(),
                                   sched.hold_end(), ham, sched, policy);
    drift = std::max(drift, hold.norm_drift);
    current = hold.state;
  }
  SegmentResult reverse =
      propagate(current, sched.hold_end(), sched.total(), ham, sched, policy);
  drift = std::max(drift, reverse.norm_drift);

  const double p =
      checked_probability(std::norm(inner(psi0, reverse.state)), tau);
  return {p, drift, std::move(at_hold), std::move(reverse.state)};
}

double run_once(const ModelParams& params, double anneal_time, double tau,
                const StepPolicy& policy) {
  return run_protocol(params, anneal_time, tau, policy).probability;
}

RamseySeries sweep(const ModelParams& params, double anneal_time,
                   const SweepGrid& grid, const StepPolicy& policy,
                   unsigned jobs) {
  grid.validate();
  const Schedule longest{anneal_time, grid.t_max};
  longest.validate();
  policy.validate_for(longest.total());

  const Hamiltonian ham(params);
  const QuantumState psi0 = initial_state(ham);

  // The reverse ramp of a tau = 0 schedule, [T, 2T], has the same step
  // sequence as [T + tau, 2T + tau] for every tau.
  const Schedule no_hold{anneal_time, 0.0};
  const SegmentResult forward =
      propagate(psi0, 0.0, anneal_time, ham, no_hold, policy);
  const SegmentResult pulled_back = propagate_adjoint(
      psi0, anneal_time, no_hold.total(), ham, no_hold, policy);

  const EigenSystem problem = diagonalize(ham.problem());
  // P(tau) = |sum_k conj(d_k) c_k exp(-i 2 pi E_k tau)|^2
  const Vector weights = (problem.states.adjoint() * pulled_back.state.amplitudes())
                             .conjugate()
                             .cwiseProduct(problem.states.adjoint() *
                                           forward.state.amplitudes());
  const Eigen::VectorXd& energies = problem.energies;

  RamseySeries series;
  series.params = params;
  series.anneal_time = anneal_time;
  series.policy = policy;
  series.grid = grid;
  series.max_norm_drift = std::max(forward.norm_drift, pulled_back.norm_drift);
  series.state_at_hold = forward.state.amplitudes();
  series.records.resize(grid.count);

  detail::parallel_for(grid.count, jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) {
      const double tau = grid.tau(n);
      Complex amp{};
      for (Eigen::Index k = 0; k < energies.size(); ++k) {
        amp += weights(k) * std::polar(1.0, -kTwoPi * energies(k) * tau);
      }
      series.records[n] = {tau, checked_probability(std::norm(amp), tau)};
    }
  });
  return series;
}

CosineFit cosine_fit(const RamseySeries& series, double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw ArgumentError("cosine fit frequency must be positive");
  }
  if (series.records.size() < 3) {
    throw ArgumentError("cosine fit needs at least 3 records");
  }

  // Model: a + c cos(2 pi nu tau) + s sin(2 pi nu tau).
  Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
  Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
  for (const RamseyRecord& r : series.records) {
    const double w = kTwoPi * nu * r.tau;
    const Eigen::Vector3d basis(1.0, std::cos(w), std::sin(w));
    normal += basis * basis.transpose();
    rhs += basis * r.probability;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> spectrum(normal);
  const double smallest = spectrum.eigenvalues()(0);
  const double largest = spectrum.eigenvalues()(2);
  if (!(smallest > 1e-10 * largest)) {
    std::ostringstream msg;
    msg << "cosine fit at nu = " << nu
        << " GHz is singular (frequency aliases the sampling grid)";
    throw NumericalError(msg.str());
  }
  const Eigen::Vector3d coef = normal.ldlt().solve(rhs);

  CosineFit fit;
  fit.a = coef(0);
  fit.b = std::hypot(coef(1), coef(2));
  // c cos(w) + s sin(w) = b cos(w + phi) with c = b cos(phi), s = -b sin(phi).
  fit.phi = fit.b > 0.0 ? std::atan2(-coef(2), coef(1)) : 0.0;
  fit.nu = nu;

  double sq = 0.0;
  for (const RamseyRecord& r : series.records) {
    const double model = fit.a + fit.b * std::cos(kTwoPi * nu * r.tau + fit.phi);
    sq += (r.probability - model) * (r.probability - model);
  }
  fit.rms_residual = std::sqrt(sq / static_cast<double>(series.records.size()));
  return fit;
}

}  // namespace ramseyqa
