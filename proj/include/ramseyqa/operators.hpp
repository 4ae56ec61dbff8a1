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

// Dense complex linear algebra on L-qubit Hilbert spaces.
//
// Basis convention: computational basis index bits, qubit 1 is the most
// significant bit, and basis state |0> of each qubit is the sigma_z = +1
// eigenvector.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace ramseyqa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Tolerance on |1 - ||psi||| accepted by QuantumState.
inline constexpr double kStateNormTolerance = 1e-9;
/// Elementwise tolerance on H - H^dagger accepted by HermitianOperator.
inline constexpr double kHermiticityTolerance = 1e-12;

/// Hilbert-space dimension 2^L. Throws ArgumentError for L outside [1, 20].
std::size_t hilbert_dim(int num_qubits);

/// Normalized pure state of an L-qubit register.
class QuantumState {
 public:
  /// Takes ownership of `amplitudes`; throws ArgumentError unless the length is
  /// 2^num_qubits and the norm is 1 within kStateNormTolerance.
  QuantumState(Vector amplitudes, int num_qubits);

  /// Rescales `amplitudes` to unit norm first. Throws on a zero vector.
  static QuantumState normalized(Vector amplitudes, int num_qubits);

  /// Computational basis state |index>.
  static QuantumState basis(std::size_t index, int num_qubits);

  const Vector& amplitudes() const { return amplitudes_; }
  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }

 private:
  Vector amplitudes_;
  int num_qubits_;
};

/// Dense Hermitian matrix acting on L qubits (coefficients in GHz).
class HermitianOperator {
 public:
  /// Throws ArgumentError if `matrix` is not 2^L square or is not Hermitian
  /// within kHermiticityTolerance.
  HermitianOperator(Matrix matrix, int num_qubits);

  static HermitianOperator zero(int num_qubits);

  const Matrix& matrix() const { return matrix_; }
  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  /// <psi|H|psi>; real for Hermitian H.
  double expectation(const QuantumState& psi) const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator*=(double weight);

 private:
  Matrix matrix_;
  int num_qubits_;
};

HermitianOperator operator+(HermitianOperator lhs, const HermitianOperator& rhs);
HermitianOperator operator-(HermitianOperator lhs, const HermitianOperator& rhs);
HermitianOperator operator*(double weight, HermitianOperator op);

enum class PauliAxis { X, Y, Z, Plus, Minus, Identity };

/// Single-qubit Pauli-family matrix. Plus and Minus are (X +- iY)/2, so Plus
/// raises sigma_z = -1 to sigma_z = +1.
Matrix2 pauli(PauliAxis axis);

/// I (x) ... (x) op (x) ... (x) I with `op` on qubit `site` (1-based, site 1 is
/// the leftmost tensor factor). Throws ArgumentError unless 1 <= site <= L.
Matrix embed(const Matrix2& op, int site, int num_qubits);

/// Matrix-vector product; the result is not renormalized.
Vector apply(const Matrix& op, const QuantumState& state);
Vector apply(const HermitianOperator& op, const QuantumState& state);

/// <a|b>, conjugate-linear in `a`.
Complex inner(const QuantumState& a, const QuantumState& b);

/// True when A and A^dagger agree elementwise within `tolerance`.
bool is_hermitian(const Matrix& a, double tolerance = kHermiticityTolerance);

}  // namespace ramseyqa
