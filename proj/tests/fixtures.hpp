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

// Shared fixtures for the unit tests.

#include <cmath>
#include <random>

#include "ramseyqa/model.hpp"
#include "ramseyqa/operators.hpp"

namespace ramseyqa::testing {

/// The two-qubit parameter set used throughout (GHz).
inline ModelParams paper_params() {
  return ModelParams{2, {1.0, 10.7}, {0.2, 0.24}, 0.5, 1.05};
}

inline ModelParams two_level_params() {
  return ModelParams{1, {1.0}, {0.2}, 0.0, 0.0};
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline QuantumState random_state(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(hilbert_dim(num_qubits)));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(n(rng), n(rng));
  return QuantumState::normalized(std::move(v), num_qubits);
}

inline ModelParams random_params(int num_qubits, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  std::uniform_real_distribution<double> any(-1.0, 1.0);
  ModelParams p;
  p.num_qubits = num_qubits;
  for (int j = 0; j < num_qubits; ++j) {
    p.lambda.push_back(pos(rng));
    p.omega.push_back(any(rng));
  }
  p.g = any(rng);
  p.g_prime = any(rng);
  return p;
}

}  // namespace ramseyqa::testing
