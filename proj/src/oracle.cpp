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

#include "ramseyqa/oracle.hpp"

#include <cmath>
#include <string>

#include "ramseyqa/errors.hpp"

namespace ramseyqa {

namespace {

// Components within this relative distance of the largest modulus count as
// ties, so the first of them carries the phase.
constexpr double kPhaseTieTolerance = 1e-8;

void fix_phase(Eigen::Ref<Vector> v) {
  const double largest = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mod = std::abs(v(i));
    if (mod >= largest * (1.0 - kPhaseTieTolerance)) {
      v *= std::conj(v(i)) / mod;
      v(i) = mod;
      return;
    }
  }
}

}  // namespace

QuantumState EigenSystem::state(std::size_t k) const {
  if (k >= size()) throw ArgumentError("eigenstate index out of range");
  const auto dim = states.rows();
  int num_qubits = 0;
  while ((Eigen::Index{1} << num_qubits) < dim) ++num_qubits;
  return QuantumState::normalized(states.col(static_cast<Eigen::Index>(k)),
                                  num_qubits);
}

std::vector<std::pair<std::size_t, std::size_t>> EigenSystem::degenerate_groups()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::size_t first = 0;
  for (std::size_t k = 1; k <= size(); ++k) {
    const bool split =
        k == size() ||
        energies(static_cast<Eigen::Index>(k)) -
                energies(static_cast<Eigen::Index>(k - 1)) >
            kDegeneracyTolerance;
    if (split) {
      groups.emplace_back(first, k - 1);
      first = k;
    }
  }
  return groups;
}

const Gap& GapTable::at(std::size_t i, std::size_t j) const {
  for (const Gap& g : entries) {
    if (g.lower == i && g.upper == j) return g;
  }
  throw ArgumentError("no gap entry (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
}

EigenSystem diagonalize(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("exact diagonalization did not converge");
  }
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < es.states.cols(); ++k) {
    fix_phase(es.states.col(k));
  }
  return es;
}

GapTable gaps(const EigenSystem& es) {
  GapTable table;
  const std::size_t n = es.size();
  table.entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      table.entries.push_back({i, j,
                               es.energies(static_cast<Eigen::Index>(j)) -
                                   es.energies(static_cast<Eigen::Index>(i))});
    }
  }
  return table;
}

Eigen::VectorXd populations(const QuantumState& psi, const EigenSystem& es) {
  if (static_cast<std::size_t>(es.states.rows()) != psi.dim()) {
    throw ArgumentError("populations: dimension mismatch");
  }
  const Eigen::VectorXd per_vector =
      (es.states.adjoint() * psi.amplitudes()).cwiseAbs2();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(per_vector.size());
  for (const auto& [first, last] : es.degenerate_groups()) {
    out(static_cast<Eigen::Index>(first)) =
        per_vector
            .segment(static_cast<Eigen::Index>(first),
                     static_cast<Eigen::Index>(last - first + 1))
            .sum();
  }
  return out;
}

Eigen::VectorXd instantaneous_populations(const QuantumState& psi, double t,
                                          const ModelParams& params,
                                          const Schedule& sched) {
  return populations(psi, diagonalize(hamiltonian_at(t, params, sched)));
}

}  // namespace ramseyqa
