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

#include "ramseyqa/operators.hpp"

#include <cmath>
#include <string>

#include "ramseyqa/errors.hpp"

namespace ramseyqa {

std::size_t hilbert_dim(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 20) {
    throw ArgumentError("qubit count must be in [1, 20], got " +
                        std::to_string(num_qubits));
  }
  return std::size_t{1} << num_qubits;
}

QuantumState::QuantumState(Vector amplitudes, int num_qubits)
    : amplitudes_(std::move(amplitudes)), num_qubits_(num_qubits) {
  if (static_cast<std::size_t>(amplitudes_.size()) != hilbert_dim(num_qubits)) {
    throw ArgumentError("state length " + std::to_string(amplitudes_.size()) +
                        " does not match 2^" + std::to_string(num_qubits));
  }
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= kStateNormTolerance)) {
    throw ArgumentError("state is not normalized (norm " +
                        std::to_string(norm) + ")");
  }
}

QuantumState QuantumState::normalized(Vector amplitudes, int num_qubits) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ArgumentError("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return QuantumState(std::move(amplitudes), num_qubits);
}

QuantumState QuantumState::basis(std::size_t index, int num_qubits) {
  const std::size_t dim = hilbert_dim(num_qubits);
  if (index >= dim) {
    throw ArgumentError("basis index out of range");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return QuantumState(std::move(v), num_qubits);
}

bool is_hermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tolerance) return false;
    }
  }
  return true;
}

HermitianOperator::HermitianOperator(Matrix matrix, int num_qubits)
    : matrix_(std::move(matrix)), num_qubits_(num_qubits) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(num_qubits));
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw ArgumentError("operator shape does not match 2^" +
                        std::to_string(num_qubits));
  }
  if (!is_hermitian(matrix_)) {
    throw ArgumentError("operator is not Hermitian");
  }
}

HermitianOperator HermitianOperator::zero(int num_qubits) {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(num_qubits));
  return HermitianOperator(Matrix::Zero(dim, dim), num_qubits);
}

double HermitianOperator::expectation(const QuantumState& psi) const {
  if (psi.dim() != dim()) {
    throw ArgumentError("expectation: dimension mismatch");
  }
  return psi.amplitudes().dot(matrix_ * psi.amplitudes()).real();
}

// Real-weighted sums keep a Hermitian matrix exactly Hermitian, so the
// compound operators skip re-validation.
HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw ArgumentError("cannot add operators on different qubit counts");
  }
  matrix_ += other.matrix_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double weight) {
  matrix_ *= weight;
  return *this;
}

HermitianOperator operator+(HermitianOperator lhs, const HermitianOperator& rhs) {
  lhs += rhs;
  return lhs;
}

HermitianOperator operator-(HermitianOperator lhs, const HermitianOperator& rhs) {
  lhs += -1.0 * rhs;
  return lhs;
}

HermitianOperator operator*(double weight, HermitianOperator op) {
  op *= weight;
  return op;
}

Matrix2 pauli(PauliAxis axis) {
  const Complex i{0.0, 1.0};
  Matrix2 m;
  switch (axis) {
    case PauliAxis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliAxis::Y:
      m << 0.0, -i, i, 0.0;
      break;
    case PauliAxis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case PauliAxis::Plus:
      m << 0.0, 1.0, 0.0, 0.0;
      break;
    case PauliAxis::Minus:
      m << 0.0, 0.0, 1.0, 0.0;
      break;
    case PauliAxis::Identity:
      m = Matrix2::Identity();
      break;
  }
  return m;
}

Matrix embed(const Matrix2& op, int site, int num_qubits) {
  const std::size_t dim = hilbert_dim(num_qubits);
  if (site < 1 || site > num_qubits) {
    throw ArgumentError("site " + std::to_string(site) + " outside 1.." +
                        std::to_string(num_qubits));
  }
  // Qubit `site` is bit (L - site) of the basis index.
  const int shift = num_qubits - site;
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t row_bit = (row >> shift) & 1U;
    for (std::size_t col_bit = 0; col_bit < 2; ++col_bit) {
      const Complex v = op(static_cast<Eigen::Index>(row_bit),
                           static_cast<Eigen::Index>(col_bit));
      if (v == Complex{}) continue;
      const std::size_t col = (row & ~(std::size_t{1} << shift)) |
                              (col_bit << shift);
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
  }
  return out;
}

Vector apply(const Matrix& op, const QuantumState& state) {
  if (op.cols() != static_cast<Eigen::Index>(state.dim())) {
    throw ArgumentError("apply: operator has " + std::to_string(op.cols()) +
                        " columns, state has " + std::to_string(state.dim()) +
                        " amplitudes");
  }
  return op * state.amplitudes();
}

Vector apply(const HermitianOperator& op, const QuantumState& state) {
  return apply(op.matrix(), state);
}

Complex inner(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("inner: dimension mismatch");
  }
  // Eigen's dot() conjugates its left operand.
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace ramseyqa
