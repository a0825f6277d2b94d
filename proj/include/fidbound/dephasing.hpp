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

#include <utility>

#include "fidbound/density_matrix.hpp"

namespace fidbound {

/// Uniform N-qubit product dephasing with noise probability p. Each qubit
/// goes through the Kraus pair K0 = |0><0| + sqrt(1-p)|1><1|,
/// K1 = sqrt(p)|1><1|.
class DephasingChannel {
 public:
  /// Throws DomainError unless 0 <= p <= 1.
  explicit DephasingChannel(double p);

  double p() const { return p_; }

  /// (K0, K1) as 2x2 complex matrices.
  std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> kraus_operators() const;

  /// (1 - p)^(differing_bits / 2): the factor applied to rho(i, j) when i and
  /// j differ in `differing_bits` qubit positions. Exactly 0 at p = 1 for any
  /// positive bit count.
  double coherence_factor(int differing_bits) const;

 private:
  double p_;
};

enum class KrausPath {
  /// One 2x2 Kraus pair applied per qubit, N passes over the matrix.
  PerQubit,
  /// Literal sum over all 2^N tensor-product Kraus tuples. Oracle only.
  TupleSum,
};

inline constexpr int kTupleSumMaxQubits = 6;

/// Kraus-representation evaluation of the channel. The tuple sum refuses
/// N > kTupleSumMaxQubits with DimensionError.
DensityMatrix apply_kraus(const DephasingChannel& channel,
                          const DensityMatrix& rho,
                          KrausPath path = KrausPath::PerQubit);

/// Elementwise rule: rho(i, j) * (1 - p)^(popcount(i ^ j) / 2).
DensityMatrix apply_fast(const DephasingChannel& channel,
                         const DensityMatrix& rho);

}  // namespace fidbound
