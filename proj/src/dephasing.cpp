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

#include "fidbound/dephasing.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace fidbound {

DephasingChannel::DephasingChannel(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("dephasing probability must lie in [0, 1], got " +
                      std::to_string(p));
  }
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd>
DephasingChannel::kraus_operators() const {
  Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p_);
  k1(1, 1) = std::sqrt(p_);
  return {k0, k1};
}

double DephasingChannel::coherence_factor(int differing_bits) const {
  if (differing_bits == 0) return 1.0;
  if (p_ == 1.0) return 0.0;
  return std::exp(0.5 * differing_bits * std::log1p(-p_));
}

namespace {

// rho -> sum_s K_s rho K_s^dagger with K_s acting on one qubit, addressed by
// its bit position in the basis index.
Matrix apply_single_qubit(const Matrix& rho, int bit,
                          const std::array<Eigen::Matrix2cd, 2>& kraus) {
  const Eigen::Index dim = rho.rows();
  const Eigen::Index mask = Eigen::Index{1} << bit;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& k : kraus) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const int bj = (j & mask) ? 1 : 0;
      const Eigen::Index j0 = j & ~mask;
      for (Eigen::Index i = 0; i < dim; ++i) {
        const int bi = (i & mask) ? 1 : 0;
        const Eigen::Index i0 = i & ~mask;
        Complex acc = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            acc += k(bi, a) * rho(i0 | (a ? mask : 0), j0 | (b ? mask : 0)) *
                   std::conj(k(bj, b));
          }
        }
        out(i, j) += acc;
      }
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix apply_tuple_sum(const Matrix& rho, int n_qubits,
                       const std::array<Eigen::Matrix2cd, 2>& kraus) {
  const Eigen::Index dim = rho.rows();
  Matrix out = Matrix::Zero(dim, dim);
  const unsigned tuples = 1u << n_qubits;
  for (unsigned tuple = 0; tuple < tuples; ++tuple) {
    // Digit for qubit 1 is the most significant bit of `tuple`.
    Matrix op = kraus[(tuple >> (n_qubits - 1)) & 1u];
    for (int q = 1; q < n_qubits; ++q) {
      op = kron(op, kraus[(tuple >> (n_qubits - 1 - q)) & 1u]);
    }
    out.noalias() += op * rho * op.adjoint();
  }
  return out;
}

}  // namespace

DensityMatrix apply_kraus(const DephasingChannel& channel,
                          const DensityMatrix& rho, KrausPath path) {
  const auto [k0, k1] = channel.kraus_operators();
  const std::array<Eigen::Matrix2cd, 2> kraus{k0, k1};
  const int n = rho.n_qubits();
  Matrix out;
  if (path == KrausPath::TupleSum) {
    if (n > kTupleSumMaxQubits) {
      throw DimensionError("Kraus tuple sum limited to " +
                           std::to_string(kTupleSumMaxQubits) +
                           " qubits, requested " + std::to_string(n));
    }
    out = apply_tuple_sum(rho.matrix(), n, kraus);
  } else {
    out = rho.matrix();
    for (int bit = 0; bit < n; ++bit) out = apply_single_qubit(out, bit, kraus);
  }
  return DensityMatrix::from_matrix(std::move(out), Validation::Structural,
                                    DenseLimit{kMaxDenseLimit});
}

DensityMatrix apply_fast(const DephasingChannel& channel,
                         const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  std::vector<double> factor(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) factor[k] = channel.coherence_factor(k);
  const Eigen::Index dim = rho.dim();
  Matrix out(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const auto differing = std::popcount(static_cast<std::uint64_t>(i ^ j));
      out(i, j) = rho(i, j) * factor[differing];
    }
  }
  return DensityMatrix::from_matrix(std::move(out), Validation::Structural,
                                    DenseLimit{kMaxDenseLimit});
}

}  // namespace fidbound
