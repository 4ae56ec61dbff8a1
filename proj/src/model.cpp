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

#include "ramseyqa/model.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ramseyqa/errors.hpp"

namespace ramseyqa {

void ModelParams::validate() const {
  if (num_qubits < 1) {
    throw ArgumentError("L must be at least 1");
  }
  hilbert_dim(num_qubits);
  const auto L = static_cast<std::size_t>(num_qubits);
  if (lambda.size() != L || omega.size() != L) {
    throw ArgumentError("lambda and omega need exactly L = " +
                        std::to_string(L) + " entries");
  }
  for (std::size_t j = 0; j < L; ++j) {
    if (!(lambda[j] > 0.0) || !std::isfinite(lambda[j])) {
      throw ArgumentError("lambda_" + std::to_string(j + 1) +
                          " must be positive and finite");
    }
    if (!std::isfinite(omega[j])) {
      throw ArgumentError("omega_" + std::to_string(j + 1) + " must be finite");
    }
  }
  if (!std::isfinite(g) || !std::isfinite(g_prime)) {
    throw ArgumentError("couplings must be finite");
  }
}

void Schedule::validate() const {
  if (!(anneal_time > 0.0) || !std::isfinite(anneal_time)) {
    throw ArgumentError("anneal time T must be positive");
  }
  if (!(hold_time >= 0.0) || !std::isfinite(hold_time)) {
    throw ArgumentError("hold time tau must be non-negative");
  }
}

double schedule_value(double t, const Schedule& sched) {
  sched.validate();
  if (!(t >= 0.0 && t <= sched.total())) {
    std::ostringstream msg;
    msg << "t = " << t << " ns outside the schedule [0, " << sched.total()
        << "]";
    throw ArgumentError(msg.str());
  }
  const double T = sched.anneal_time;
  if (t <= sched.hold_begin()) return 1.0 - t / T;
  if (t <= sched.hold_end()) return 0.0;
  return (t - sched.hold_end()) / T;
}

HermitianOperator build_driver(const ModelParams& params) {
  params.validate();
  const int L = params.num_qubits;
  HermitianOperator h = HermitianOperator::zero(L);
  const Matrix2 x = pauli(PauliAxis::X);
  for (int j = 1; j <= L; ++j) {
    h += HermitianOperator(0.5 * params.lambda[j - 1] * embed(x, j, L), L);
  }
  return h;
}

HermitianOperator build_problem(const ModelParams& params) {
  params.validate();
  const int L = params.num_qubits;
  const Matrix2 z = pauli(PauliAxis::Z);
  const Matrix2 up = pauli(PauliAxis::Plus);
  const Matrix2 down = pauli(PauliAxis::Minus);

  const auto dim = static_cast<Eigen::Index>(hilbert_dim(L));
  Matrix m = Matrix::Zero(dim, dim);
  for (int j = 1; j <= L; ++j) {
    m += 0.5 * params.omega[j - 1] * embed(z, j, L);
  }
  for (int j = 1; j < L; ++j) {
    m += params.g * embed(z, j, L) * embed(z, j + 1, L);
    m += params.g_prime * (embed(up, j, L) * embed(down, j + 1, L) +
                           embed(down, j, L) * embed(up, j + 1, L));
  }
  return HermitianOperator(std::move(m), L);
}

Hamiltonian::Hamiltonian(const ModelParams& params)
    : driver_(build_driver(params)), problem_(build_problem(params)) {}

Hamiltonian::Hamiltonian(HermitianOperator driver, HermitianOperator problem)
    : driver_(std::move(driver)), problem_(std::move(problem)) {
  if (driver_.num_qubits() != problem_.num_qubits()) {
    throw ArgumentError("driver and problem act on different qubit counts");
  }
}

HermitianOperator Hamiltonian::mix(double a) const {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ArgumentError("schedule value must lie in [0, 1]");
  }
  if (a == 1.0) return driver_;
  if (a == 0.0) return problem_;
  return a * driver_ + (1.0 - a) * problem_;
}

HermitianOperator Hamiltonian::at(double t, const Schedule& sched) const {
  return mix(schedule_value(t, sched));
}

HermitianOperator hamiltonian_at(double t, const ModelParams& params,
                                 const Schedule& sched) {
  return Hamiltonian(params).at(t, sched);
}

}  // namespace ramseyqa
