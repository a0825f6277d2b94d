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

#include <gtest/gtest.h>

#include <random>

#include "fidbound/dephasing.hpp"
#include "fidbound/fidelity.hpp"
#include "oracles.hpp"

using namespace fidbound;

namespace {

DensityMatrix basis_state(int n, Eigen::Index index) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
  v(index) = 1.0;
  return pure_state(v);
}

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& u) {
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint(),
                                    Validation::Structural);
}

DensityMatrix mix(double mu, const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(mu * a.matrix() + (1.0 - mu) * b.matrix(),
                                    Validation::Structural);
}

}  // namespace

TEST(Measures, SelfAndOrthogonalPairs) {
  std::mt19937_64 rng(2);
  const DensityMatrix rho = random_state(3, rng);
  EXPECT_NEAR(uhlmann_fidelity(rho, rho), 1.0, 1e-12);
  EXPECT_NEAR(super_fidelity(rho, rho), 1.0, 1e-15);
  EXPECT_EQ(trace_distance(rho, rho), 0.0);

  const DensityMatrix zero = basis_state(1, 0);
  const DensityMatrix one = basis_state(1, 1);
  EXPECT_EQ(uhlmann_fidelity(zero, one), 0.0);
  EXPECT_EQ(sub_fidelity(zero, one), 0.0);
  EXPECT_EQ(super_fidelity(zero, one), 0.0);
  EXPECT_DOUBLE_EQ(trace_distance(zero, one), 1.0);
  EXPECT_DOUBLE_EQ(d_sub(zero, one), 1.0);
  EXPECT_DOUBLE_EQ(d_super(zero, one), 1.0);
  EXPECT_DOUBLE_EQ(epsilon(zero, one), 1.0);
  EXPECT_DOUBLE_EQ(sub_fidelity(maximally_mixed(1), maximally_mixed(1)), 1.0);
}

TEST(Measures, IdenticalPureOrQubitStatesHaveZeroDistances) {
  std::mt19937_64 rng(6);
  for (const DensityMatrix& rho :
       {random_pure_state(4, rng), random_state(1, rng), make_ghz_pure(5)}) {
    const MeasureReport r = measure_report(rho, rho);
    EXPECT_NEAR(r.sub_fidelity, 1.0, 1e-12);
    EXPECT_NEAR(r.super_fidelity, 1.0, 1e-12);
    EXPECT_NEAR(*r.fidelity, 1.0, 1e-12);
    EXPECT_LE(r.d_sub, 1e-6);
    EXPECT_LE(r.d_super, 1e-6);
    EXPECT_LE(*r.epsilon, 1e-6);
  }
}

TEST(Measures, SubFidelityOfMixedStateWithItselfIsBelowOne) {
  // E(rho, rho) = Tr rho^2 + sqrt(2 (Tr rho^2)^2 - 2 Tr rho^4) < 1 for mixed
  // states on more than one qubit, so d_sub(rho, rho) > 0 there.
  const DensityMatrix rho = maximally_mixed(2);
  const double expected = 0.25 + std::sqrt(2.0 * 0.0625 - 2.0 / 64.0);
  EXPECT_NEAR(sub_fidelity(rho, rho), expected, 1e-15);
  EXPECT_NEAR(d_super(rho, rho), 0.0, 1e-15);
}

TEST(Measures, PureGhzAgainstItsDephasedImage) {
  const DensityMatrix ghz = make_ghz_pure(4);
  const DensityMatrix out = apply_fast(DephasingChannel(0.3), ghz);
  EXPECT_NEAR(uhlmann_fidelity(ghz, out), (1.0 + 0.49) / 2.0, 1e-12);
  const DensityMatrix ghz6 = make_ghz_pure(6);
  EXPECT_NEAR(epsilon(ghz6, apply_fast(DephasingChannel(0.2), ghz6)),
              std::sqrt((1.0 - 0.512) / 2.0), 1e-10);
}

TEST(Measures, MatchDefinitionsOnRandomPairs) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 20; ++k) {
      const DensityMatrix a = random_state(n, rng);
      const DensityMatrix b = random_state(n, rng);
      EXPECT_NEAR(sub_fidelity(a, b), oracle::sub_fidelity(a.matrix(), b.matrix()), 1e-12);
      EXPECT_NEAR(super_fidelity(a, b), oracle::super_fidelity(a.matrix(), b.matrix()), 1e-12);
      if (n == 1) {
        EXPECT_NEAR(uhlmann_fidelity(a, b), oracle::qubit_fidelity(a.matrix(), b.matrix()), 1e-12);
      }
    }
  }
}

TEST(Measures, PureArgumentFidelityIsOverlap) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 5; ++n) {
    const Eigen::VectorXcd psi = oracle::random_vector(Eigen::Index{1} << n, rng);
    const DensityMatrix pure = pure_state(psi);
    const DensityMatrix sigma = random_state(n, rng);
    const double expected = oracle::pure_fidelity(psi, sigma.matrix());
    EXPECT_NEAR(uhlmann_fidelity(pure, sigma), expected, 1e-10);
    EXPECT_NEAR(uhlmann_fidelity(sigma, pure), expected, 1e-10);
    EXPECT_NEAR(sub_fidelity(pure, sigma), expected, 1e-9);
    EXPECT_NEAR(super_fidelity(pure, sigma), expected, 1e-9);
  }
}

TEST(Properties, BoundChainsHold) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 40; ++k) {
      const DensityMatrix a = (k % 4 == 0) ? random_pure_state(n, rng) : random_state(n, rng);
      const DensityMatrix b = random_state(n, rng);
      const MeasureReport r = measure_report(a, b);
      EXPECT_LE(r.sub_fidelity, *r.fidelity + 1e-9);
      EXPECT_LE(*r.fidelity, r.super_fidelity + 1e-9);
      EXPECT_LE(r.d_super, *r.epsilon + 1e-9);
      EXPECT_LE(*r.epsilon, r.d_sub + 1e-9);
      EXPECT_GE(r.super_fidelity, 1.0 - *r.trace_distance - 1e-10);
      for (double v : {r.sub_fidelity, r.super_fidelity, *r.fidelity, r.d_sub,
                       r.d_super, *r.epsilon, *r.trace_distance}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
  }
}

TEST(Properties, CheckBoundChainRejectsBrokenReports) {
  MeasureReport r;
  r.sub_fidelity = 0.9;
  r.super_fidelity = 0.95;
  r.fidelity = 0.8;
  r.d_sub = std::sqrt(0.1);
  r.d_super = std::sqrt(0.05);
  EXPECT_THROW(check_bound_chain(r), ConsistencyError);
  r.fidelity = 0.92;
  r.epsilon = 0.9;
  EXPECT_THROW(check_bound_chain(r), ConsistencyError);
  r.epsilon = std::sqrt(0.08);
  EXPECT_NO_THROW(check_bound_chain(r));
}

TEST(Properties, Symmetric) {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 4; ++n) {
    const DensityMatrix a = random_state(n, rng);
    const DensityMatrix b = random_state(n, rng);
    EXPECT_NEAR(sub_fidelity(a, b), sub_fidelity(b, a), 1e-14);
    EXPECT_NEAR(super_fidelity(a, b), super_fidelity(b, a), 1e-14);
    EXPECT_NEAR(uhlmann_fidelity(a, b), uhlmann_fidelity(b, a), 1e-12);
    EXPECT_NEAR(trace_distance(a, b), trace_distance(b, a), 1e-14);
    EXPECT_EQ(d_super(a, b), d_super(b, a));
  }
}

TEST(Properties, UnitarilyInvariant) {
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 5; ++k) {
      const DensityMatrix a = random_state(n, rng);
      const DensityMatrix b = random_state(n, rng);
      const Matrix u = oracle::random_unitary(a.dim(), rng);
      const DensityMatrix ua = conjugate(a, u);
      const DensityMatrix ub = conjugate(b, u);
      EXPECT_NEAR(sub_fidelity(a, b), sub_fidelity(ua, ub), 1e-10);
      EXPECT_NEAR(super_fidelity(a, b), super_fidelity(ua, ub), 1e-10);
      EXPECT_NEAR(uhlmann_fidelity(a, b), uhlmann_fidelity(ua, ub), 1e-10);
    }
  }
}

TEST(Properties, TensorProductsPairFactorsByPosition) {
  // F(r1 (x) r2, r3 (x) r4) = F(r1, r3) F(r2, r4); E is sub- and G
  // super-multiplicative under the same pairing.
  std::mt19937_64 rng(71);
  for (int k = 0; k < 30; ++k) {
    const int n1 = 1 + k % 2;
    const int n2 = 1 + (k / 2) % 2;
    const DensityMatrix r1 = random_state(n1, rng), r3 = random_state(n1, rng);
    const DensityMatrix r2 = random_state(n2, rng), r4 = random_state(n2, rng);
    const DensityMatrix left = tensor_product(r1, r2);
    const DensityMatrix right = tensor_product(r3, r4);
    EXPECT_NEAR(uhlmann_fidelity(left, right),
                uhlmann_fidelity(r1, r3) * uhlmann_fidelity(r2, r4), 1e-9);
    EXPECT_LE(sub_fidelity(left, right),
              sub_fidelity(r1, r3) * sub_fidelity(r2, r4) + 1e-12);
    EXPECT_GE(super_fidelity(left, right),
              super_fidelity(r1, r3) * super_fidelity(r2, r4) - 1e-12);
  }
}

TEST(Properties, ConcaveInSecondArgument) {
  std::mt19937_64 rng(81);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 10; ++k) {
      const DensityMatrix r1 = random_state(n, rng);
      const DensityMatrix r2 = random_state(n, rng);
      const DensityMatrix r3 = random_state(n, rng);
      for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const DensityMatrix m = mix(mu, r2, r3);
        EXPECT_GE(uhlmann_fidelity(r1, m),
                  mu * uhlmann_fidelity(r1, r2) + (1 - mu) * uhlmann_fidelity(r1, r3) - 1e-10);
        EXPECT_GE(sub_fidelity(r1, m),
                  mu * sub_fidelity(r1, r2) + (1 - mu) * sub_fidelity(r1, r3) - 1e-10);
        EXPECT_GE(super_fidelity(r1, m),
                  mu * super_fidelity(r1, r2) + (1 - mu) * super_fidelity(r1, r3) - 1e-10);
      }
    }
  }
}

TEST(Properties, SuperDistanceIsAMetric) {
  std::mt19937_64 rng(91);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 50; ++k) {
      const DensityMatrix a = random_state(n, rng);
      const DensityMatrix b = random_state(n, rng);
      const DensityMatrix c = random_state(n, rng);
      EXPECT_LE(d_super(a, c), d_super(a, b) + d_super(b, c) + 1e-9);
      EXPECT_GT(d_super(a, b), 0.0);
      EXPECT_EQ(d_super(a, a), 0.0);
    }
  }
}

TEST(Measures, RejectInvalidAndMismatchedInputs) {
  EXPECT_THROW(uhlmann_fidelity(maximally_mixed(1), maximally_mixed(2)),
               DimensionError);
  EXPECT_THROW(sub_fidelity(maximally_mixed(2), maximally_mixed(1)),
               DimensionError);
  EXPECT_THROW(clamp_unit(1.0 + 1e-6, "x"), ConsistencyError);
  EXPECT_EQ(clamp_unit(1.0 + 1e-12, "x"), 1.0);
  EXPECT_EQ(distance_from_fidelity(1.0 - 1e-17, 1e-15), 0.0);
}
