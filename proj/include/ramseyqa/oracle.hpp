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

// Exact diagonalization ground truth.

#include <cstddef>
#include <vector>

#include "ramseyqa/model.hpp"
#include "ramseyqa/operators.hpp"

namespace ramseyqa {

/// Levels closer than this (GHz) are treated as one degenerate level.
inline constexpr double kDegeneracyTolerance = 1e-9;

struct EigenSystem {
  Eigen::VectorXd energies;  ///< ascending (GHz)
  Matrix states;             ///< column k is the eigenvector of energies[k]

  std::size_t size() const { return static_cast<std::size_t>(energies.size()); }
  /// Column k as a normalized state.
  QuantumState state(std::size_t k) const;
  /// Index ranges [first, last] of levels within kDegeneracyTolerance.
  std::vector<std::pair<std::size_t, std::size_t>> degenerate_groups() const;
};

struct Gap {
  std::size_t lower = 0;
  std::size_t upper = 0;
  double value = 0.0;  ///< E_upper - E_lower (GHz), >= 0
};

struct GapTable {
  std::vector<Gap> entries;  ///< ordered by (lower, upper)

  /// Entry for the pair (i, j), i < j. Throws ArgumentError if absent.
  const Gap& at(std::size_t i, std::size_t j) const;
  /// E_1 - E_0.
  double fundamental() const { return at(0, 1).value; }
};

/// Full spectral decomposition with ascending energies. Each eigenvector is
/// phase-fixed so its first largest-modulus component is real and positive,
/// which keeps output identical across runs and backends.
EigenSystem diagonalize(const HermitianOperator& h);

/// All pairwise gaps E_j - E_i for j > i, degenerate pairs included.
GapTable gaps(const EigenSystem& es);

/// |<E_k(t)|psi>|^2 in the instantaneous eigenbasis of H(t). For a degenerate
/// level the summed subspace population is stored at the level's first index
/// and the remaining members read 0, so the vector always sums to 1.
Eigen::VectorXd instantaneous_populations(const QuantumState& psi, double t,
                                          const ModelParams& params,
                                          const Schedule& sched);

/// Same as above against an already diagonalized operator.
Eigen::VectorXd populations(const QuantumState& psi, const EigenSystem& es);

}  // namespace ramseyqa
