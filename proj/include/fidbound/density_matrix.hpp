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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

#include "fidbound/errors.hpp"

namespace fidbound {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

namespace tolerance {
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = 1e-10;
inline constexpr double kRealness = 1e-10;
}  // namespace tolerance

inline constexpr int kDefaultDenseLimit = 10;
inline constexpr int kMaxDenseLimit = 12;

/// Largest qubit count for which a dense 2^N x 2^N matrix may be built.
struct DenseLimit {
  int max_qubits = kDefaultDenseLimit;

  /// Throws DomainError unless 1 <= max_qubits <= kMaxDenseLimit.
  static DenseLimit of(int max_qubits);

  /// Throws DimensionError when n_qubits is not in [1, max_qubits].
  void check(int n_qubits) const;
};

enum class Validation {
  /// Hermiticity, unit trace and positivity (one eigendecomposition).
  Full,
  /// Hermiticity and unit trace only. Used by producers whose output is
  /// positive by construction (convex mixtures, CPTP maps).
  Structural,
};

/// Dense N-qubit density matrix.
///
/// Basis index b stores qubit k (1-based) in bit N-k of b, so qubit 1 is the
/// most significant bit and the matrix is laid out in the tensor order
/// q1 (x) q2 (x) ... (x) qN. Instances are immutable once constructed.
class DensityMatrix {
 public:
  /// Validates `entries` and wraps it. Throws InvalidState naming the failed
  /// invariant, DimensionError when the size is not 2^n or above `limit`.
  static DensityMatrix from_matrix(Matrix entries,
                                   Validation validation = Validation::Full,
                                   DenseLimit limit = {});

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const {
    return entries_(row, col);
  }

 private:
  DensityMatrix(int n_qubits, Matrix entries)
      : n_qubits_(n_qubits), entries_(std::move(entries)) {}

  int n_qubits_;
  Matrix entries_;
};

/// Checks the three invariants on a raw matrix; throws InvalidState with the
/// offending entry or eigenvalue in the message.
void validate_density(const Matrix& entries, Validation validation);

enum class ProbeFamily { Ghz, W };

const char* to_string(ProbeFamily family);

/// Symbolic probe state ((1 - lambda) / 2^N) I + lambda |psi><psi| with
/// |psi> the N-qubit GHZ or W state. Never materialized unless asked.
struct ProbeStateSpec {
  ProbeFamily family = ProbeFamily::Ghz;
  std::int64_t n_qubits = 1;
  double mixing = 1.0;

  /// Throws DomainError for N < 1 or mixing outside [0, 1].
  void validate() const;
};

DensityMatrix make_ghz_pure(int n_qubits, DenseLimit limit = {});
DensityMatrix make_w_pure(int n_qubits, DenseLimit limit = {});
DensityMatrix make_mixed(const ProbeStateSpec& spec, DenseLimit limit = {});
DensityMatrix maximally_mixed(int n_qubits, DenseLimit limit = {});

/// Projector onto `amplitudes` / |amplitudes|.
DensityMatrix pure_state(const Eigen::VectorXcd& amplitudes,
                         DenseLimit limit = {});

DensityMatrix tensor_product(const DensityMatrix& left,
                             const DensityMatrix& right,
                             DenseLimit limit = {});

/// G G^dagger / Tr(G G^dagger) with G a 2^N x 2^N matrix of independent
/// standard normal real and imaginary parts.
DensityMatrix random_state(int n_qubits, std::mt19937_64& rng,
                           DenseLimit limit = {});

/// Haar-random pure state (normalized complex Gaussian vector).
DensityMatrix random_pure_state(int n_qubits, std::mt19937_64& rng,
                                DenseLimit limit = {});

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Tr(rho sigma). Symmetric in its arguments.
double relative_purity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho sigma rho sigma), from a single product A = rho sigma and the
/// elementwise contraction Tr(A A) = sum_ij A_ij A_ji.
double quartic_trace(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Smallest eigenvalue of the Hermitian part of rho.
double min_eigenvalue(const DensityMatrix& rho);

/// Throws DimensionError unless both operands act on the same space.
void require_same_shape(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Real part of a trace after checking its imaginary residue is below
/// tolerance::kRealness; otherwise throws InvalidState(RealTrace).
double checked_real(Complex trace, const char* what);

}  // namespace fidbound
