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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ramseyqa/errors.hpp"
#include "ramseyqa/evolution.hpp"
#include "ramseyqa/oracle.hpp"

using namespace ramseyqa;
using ramseyqa::testing::paper_params;

namespace {

QuantumState plus_state() {
  Vector v(2);
  v << 1.0, 1.0;
  return QuantumState::normalized(v, 1);
}

// Full protocol state at 2T + tau for a given step.
Vector protocol_state(double dt, double T, double tau) {
  const ModelParams p = paper_params();
  const Schedule s{T, tau};
  const QuantumState psi0 = QuantumState::basis(0, 2);
  return propagate(psi0, 0.0, s.total(), Hamiltonian(p), s, StepPolicy{dt, 1e-6})
      .state.amplitudes();
}

}  // namespace

TEST_CASE("step with H = 0 is the identity") {
  const QuantumState psi = plus_state();
  const Vector out = step(psi.amplitudes(), HermitianOperator::zero(1), 0.37);
  CHECK((out - psi.amplitudes()).norm() == 0.0);
}

TEST_CASE("Larmor precession matches the closed form") {
  const double nu = 0.3;  // GHz
  const HermitianOperator h(0.5 * nu * Matrix(pauli(PauliAxis::Z)), 1);
  const Matrix x = pauli(PauliAxis::X);
  QuantumState psi = plus_state();
  const double dt = 0.01;
  for (int n = 1; n <= 500; ++n) {
    psi = step(psi, h, dt);
    if (n % 50 == 0) {
      const double t = n * dt;
      const double sx = psi.amplitudes().dot(x * psi.amplitudes()).real();
      CHECK(sx == doctest::Approx(std::cos(2.0 * std::numbers::pi * nu * t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("property: a step preserves the norm") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int L = 1 + trial % 3;
    const ModelParams p = ramseyqa::testing::random_params(L, rng);
    const HermitianOperator h = Hamiltonian(p).mix(std::abs(u(rng)) / 2.0);
    const QuantumState psi = ramseyqa::testing::random_state(L, rng);
    const Vector out = step(psi.amplitudes(), h, u(rng));
    CHECK(std::abs(out.norm() - 1.0) <= 1e-12);
    // Negative dt undoes the step.
    const double dt = u(rng);
    const Vector fwd = step(psi.amplitudes(), h, dt);
    CHECK((step(fwd, h, -dt) - psi.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("evolve_interval over one step equals a single midpoint step") {
  const ModelParams p = paper_params();
  const Schedule s{10.0, 5.0};
  const StepPolicy policy{0.01, 1e-6};
  const Hamiltonian ham(p);
  const QuantumState psi = QuantumState::basis(1, 2);

  const QuantumState ramp = evolve_interval(psi, 2.0, 2.01, p, s, policy);
  const Vector direct = step(psi.amplitudes(), ham.at(2.005, s), 0.01);
  CHECK((ramp.amplitudes() - direct).norm() < 1e-13);

  const QuantumState hold = evolve_interval(psi, 11.0, 11.01, p, s, policy);
  const Vector exact = step(psi.amplitudes(), ham.problem(), 0.01);
  CHECK((hold.amplitudes() - exact).norm() < 1e-13);
}

TEST_CASE("hold segment leaves problem eigenstates stationary") {
  const ModelParams p = paper_params();
  const Schedule s{20.0, 37.3};
  const EigenSystem es = diagonalize(build_problem(p));
  for (std::size_t k = 0; k < es.size(); ++k) {
    const QuantumState v = es.state(k);
    const QuantumState out = evolve_interval(v, s.hold_begin(), s.hold_end(), p, s, StepPolicy{});
    const Complex phase = std::polar(
        1.0, -2.0 * std::numbers::pi * es.energies(static_cast<Eigen::Index>(k)) * s.hold_time);
    CHECK((out.amplitudes() - phase * v.amplitudes()).norm() < 1e-10);
  }
}

TEST_CASE("forward anneal from the driver ground state approaches the adiabatic limit") {
  // The smallest ground gap along the path is about 0.083 GHz, so T = 150 ns is
  // only nearly adiabatic. Reference values from an independent dense-matrix run.
  const ModelParams p = paper_params();
  const EigenSystem driver = diagonalize(build_driver(p));
  const QuantumState ground = driver.state(0);
  for (const auto& [anneal, expected] : {std::pair{150.0, 0.98772225}, std::pair{300.0, 0.99985747}}) {
    const Schedule s{anneal, 0.0};
    const QuantumState at_t = evolve_interval(ground, 0.0, anneal, p, s, StepPolicy{});
    const Eigen::VectorXd pops = instantaneous_populations(at_t, anneal, p, s);
    CHECK(pops(0) == doctest::Approx(expected).epsilon(1e-6));
    if (anneal >= 300.0) CHECK(pops(0) >= 0.99);
  }
}

TEST_CASE("midpoint scheme converges at second order") {
  const Vector coarse = protocol_state(0.04, 37.5, 5.0);
  const Vector mid = protocol_state(0.02, 37.5, 5.0);
  const Vector fine = protocol_state(0.01, 37.5, 5.0);
  const double order = std::log2((coarse - mid).norm() / (mid - fine).norm());
  MESSAGE("observed order " << order);
  CHECK(order >= 1.8);
}

TEST_CASE("forward then adjoint propagation returns the initial state") {
  const ModelParams p = paper_params();
  const Schedule s{12.5, 10.0};
  const Hamiltonian ham(p);
  std::mt19937_64 rng(5);
  const QuantumState psi = ramseyqa::testing::random_state(2, rng);

  // Constant-H segment.
  const auto hold = propagate(psi, s.hold_begin(), s.hold_end(), ham, s, StepPolicy{});
  const auto hold_back =
      propagate_adjoint(hold.state, s.hold_begin(), s.hold_end(), ham, s, StepPolicy{});
  CHECK((hold_back.state.amplitudes() - psi.amplitudes()).norm() <= 1e-6);

  // Whole protocol, ramps included.
  const auto full = propagate(psi, 0.0, s.total(), ham, s, StepPolicy{0.005, 1e-6});
  const auto back = propagate_adjoint(full.state, 0.0, s.total(), ham, s, StepPolicy{0.005, 1e-6});
  CHECK((back.state.amplitudes() - psi.amplitudes()).norm() <= 1e-10);
  CHECK(full.norm_drift <= 1e-9);
}

TEST_CASE("evolution errors") {
  const ModelParams p = paper_params();
  const Schedule s{10.0, 0.0};
  const QuantumState psi = QuantumState::basis(0, 2);
  CHECK_THROWS_AS(evolve_interval(psi, 1.0, 1.0, p, s, StepPolicy{}), ArgumentError);
  CHECK_THROWS_AS(evolve_interval(psi, 2.0, 1.0, p, s, StepPolicy{}), ArgumentError);
  CHECK_THROWS_AS(evolve_interval(psi, 0.0, 20.1, p, s, StepPolicy{}), ArgumentError);
  CHECK_THROWS_AS(evolve_interval(psi, 0.0, 1.0, p, s, StepPolicy{2.5, 1e-6}), ArgumentError);
  CHECK_THROWS_AS(evolve_interval(psi, 0.0, 1.0, p, s, StepPolicy{0.0, 1e-6}), ArgumentError);
  CHECK_THROWS_AS(evolve_interval(psi, 0.0, 1.0, p, s, StepPolicy{0.01, 1e-3}), ArgumentError);
  CHECK_THROWS_AS(evolve_interval(QuantumState::basis(0, 1), 0.0, 1.0, p, s, StepPolicy{}),
                  ArgumentError);
  // Roundoff alone exceeds an absurdly small drift budget.
  CHECK_THROWS_AS(evolve_interval(psi, 0.0, 20.0, p, s, StepPolicy{0.001, 1e-300}),
                  NumericalError);
}
