// Copyright 2026 The fidbound Authors
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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fidbound/density_matrix.hpp"

namespace fidbound {

// Single-qubit operator basis, orthonormal under Tr(A^dagger B):
//   I0 = I / sqrt(2), I+ = |0><1|, I- = |1><0|, Iz = sigma_z / sqrt(2).
// Base-4 digits 0, 1, 2, 3 stand for 0, +, -, z. A coefficient index over N
// qubits has qubit 1 as its most significant digit.
inline constexpr int kFanoIdentity = 0;
inline constexpr int kFanoRaise = 1;
inline constexpr int kFanoLower = 2;
inline constexpr int kFanoZ = 3;

inline constexpr int kFanoMaxQubits = 6;
inline constexpr int kFanoQuarticMaxQubits = 3;

/// The 2x2 matrix of basis element `symbol` (0..3).
Eigen::Matrix2cd fano_basis(int symbol);

/// Coefficients a_{j1...jN} with rho = sum a_{j1...jN} I_{j1} (x) ... (x) I_{jN}.
class FanoCoefficients {
 public:
  /// Throws DimensionError unless coeffs.size() == 4^n_qubits.
  FanoCoefficients(int n_qubits, std::vector<Complex> coeffs);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex operator[](std::size_t index) const { return coeffs_[index]; }

  /// Coefficient for a label such as "0+-z". Throws ParseError for a bad label.
  Complex at(std::string_view label) const;

  static std::size_t index_of(std::string_view label);
  static std::string label_of(std::size_t index, int n_qubits);
  /// Index of the string with every + and - exchanged.
  static std::size_t swap_raise_lower(std::size_t index, int n_qubits);
  /// Number of + or - symbols in the string.
  static int coherence_order(std::size_t index, int n_qubits);

 private:
  int n_qubits_;
  std::vector<Complex> coeffs_;
};

/// a_J = Tr[(I_{j1} (x) ... (x) I_{jN})^dagger rho], contracted one qubit at a
/// time. Throws DimensionError above `max_qubits` (at most kFanoMaxQubits).
FanoCoefficients decompose(const DensityMatrix& rho,
                           int max_qubits = kFanoMaxQubits);

/// Inverse of decompose. Throws InvalidState if the coefficients break the
/// Hermiticity image a_J = conj(a_swap(J)) by more than 1e-10.
DensityMatrix reconstruct(const FanoCoefficients& coeffs);

/// Dephasing in coefficient space: each + or - symbol contributes sqrt(1-p).
FanoCoefficients channel_in_basis(const FanoCoefficients& coeffs, double p);

double fano_purity(const FanoCoefficients& coeffs);
double fano_dephased_purity(const FanoCoefficients& coeffs, double p);
double fano_relative_purity(const FanoCoefficients& coeffs, double p);

/// Tr(I_j E(I_k) I_q E(I_r)) indexed by ((j*4 + k)*4 + q)*4 + r.
using FactorTable = std::array<double, 256>;

constexpr std::size_t factor_index(int j, int k, int q, int r) {
  return static_cast<std::size_t>(((j * 4 + k) * 4 + q) * 4 + r);
}

/// Closed-form single-qubit factor table as a polynomial in sqrt(1 - p).
FactorTable quartic_factor_table(double p);

/// The same table from explicit 2x2 products and the single-qubit channel.
FactorTable brute_force_factor_table(double p);

struct QuarticOptions {
  int max_qubits = kFanoQuarticMaxQubits;
  /// Slices of the outermost index range, summed concurrently and combined
  /// in slice order. Results are reproducible for a fixed count.
  int partitions = 4;
};

/// Tr(rho E(rho) rho E(rho)) as the four-fold coefficient sum weighted by the
/// product of per-qubit factors. Zero table entries are skipped, so the cost
/// is nnz^N rather than 256^N.
double fano_quartic(const FanoCoefficients& coeffs, double p,
                    const QuarticOptions& options = {});

}  // namespace fidbound
