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

#include "fidbound/closed_form.hpp"
#include "fidbound/dephasing.hpp"
#include "fidbound/fidelity.hpp"
#include "oracles.hpp"

using namespace fidbound;

namespace {

const double kLambdas[] = {0.0, 0.25, 0.5, 0.7, 1.0};

double p_at(int step) { return step / 10.0; }

void expect_quartet(const TraceQuartet& got, const oracle::Quartet& want,
                    double tol) {
  EXPECT_NEAR(got.purity_in, want.purity_in, tol);
  EXPECT_NEAR(got.purity_out, want.purity_out, tol);
  EXPECT_NEAR(got.relative, want.relative, tol);
  EXPECT_NEAR(got.quartic, want.quartic, tol);
}

oracle::Quartet dense_quartet(ProbeFamily family, int n, double lambda,
                              double p) {
  const DensityMatrix rho = make_mixed({family, n, lambda});
  const Matrix r = rho.matrix();
  const Matrix e = oracle::dephase(r, p);
  return {oracle::tr(r * r), oracle::tr(e * e), oracle::tr(r * e),
          oracle::tr(r * e * r * e)};
}

}  // namespace

TEST(ClosedForm, GhzMatchesPrintedPolynomials) {
  for (int n = 1; n <= 12; ++n)
    for (double lambda : kLambdas)
      for (int step = 0; step <= 10; ++step)
        expect_quartet(ghz_traces(n, lambda, p_at(step)),
                       oracle::ghz_printed(n, lambda, p_at(step)), 1e-12);
}

TEST(ClosedForm, WMatchesPrintedPolynomials) {
  for (int n = 1; n <= 12; ++n)
    for (double lambda : kLambdas)
      for (int step = 0; step <= 10; ++step)
        expect_quartet(w_traces(n, lambda, p_at(step)),
                       oracle::w_printed(n, lambda, p_at(step)), 1e-12);
}

TEST(ClosedForm, MatchesDenseMatrices) {
  for (int n = 1; n <= 6; ++n)
    for (double lambda : kLambdas)
      for (int step = 0; step <= 10; ++step) {
        const double p = p_at(step);
        expect_quartet(ghz_traces(n, lambda, p),
                       dense_quartet(ProbeFamily::Ghz, n, lambda, p), 1e-10);
        expect_quartet(w_traces(n, lambda, p),
                       dense_quartet(ProbeFamily::W, n, lambda, p), 1e-10);
      }
}

TEST(ClosedForm, SpecificDenseCases) {
  expect_quartet(ghz_traces(8, 0.7, 0.2),
                 dense_quartet(ProbeFamily::Ghz, 8, 0.7, 0.2), 1e-10);
  expect_quartet(w_traces(3, 0.7, 0.2),
                 dense_quartet(ProbeFamily::W, 3, 0.7, 0.2), 1e-10);

  const DensityMatrix ghz = make_mixed({ProbeFamily::Ghz, 4, 0.7});
  const DensityMatrix out = apply_fast(DephasingChannel(0.2), ghz);
  const DistancePair d = ghz_distances(4, 0.7, 0.2);
  EXPECT_NEAR(d.d_sub, fidbound::d_sub(ghz, out), 1e-10);
  EXPECT_NEAR(d.d_super, fidbound::d_super(ghz, out), 1e-10);
}

TEST(ClosedForm, NoDephasingDegeneracies) {
  for (int n = 1; n <= 6; ++n) {
    for (double lambda : kLambdas) {
      for (const TraceQuartet& t : {ghz_traces(n, lambda, 0.0), w_traces(n, lambda, 0.0)}) {
        EXPECT_EQ(t.purity_out, t.purity_in);
        EXPECT_EQ(t.relative, t.purity_in);
      }
      // With no dephasing the quartic trace is Tr rho^4.
      for (ProbeFamily family : {ProbeFamily::Ghz, ProbeFamily::W}) {
        const Matrix r = make_mixed({family, n, lambda}).matrix();
        const double fourth = oracle::tr(r * r * r * r);
        EXPECT_NEAR(probe_traces({family, n, lambda}, 0.0).quartic, fourth, 1e-14);
      }
    }
  }
}

TEST(ClosedForm, PurityIsFamilyIndependent) {
  for (std::int64_t n : {1, 2, 7, 40, 1000, 1000000})
    for (double lambda : kLambdas)
      EXPECT_EQ(ghz_traces(n, lambda, 0.3).purity_in,
                w_traces(n, lambda, 0.3).purity_in);
}

TEST(ClosedForm, PureProbesSaturate) {
  for (std::int64_t n : {1, 2, 3, 8, 30, 200}) {
    for (int step = 0; step <= 10; ++step) {
      const double p = p_at(step);
      const ProbeEvaluation ghz = evaluate_probe({ProbeFamily::Ghz, n, 1.0}, p);
      EXPECT_NEAR(ghz.sub_fidelity, *ghz.fidelity, 1e-14);
      EXPECT_NEAR(ghz.super_fidelity, *ghz.fidelity, 1e-14);
      EXPECT_NEAR(ghz.distances.d_sub, oracle::ghz_pure_distance(n, p), 1e-12);
      EXPECT_NEAR(ghz.distances.d_super, oracle::ghz_pure_distance(n, p), 1e-12);
      EXPECT_EQ(ghz.distances.d_sub, ghz.distances.d_super);
      const ProbeEvaluation w = evaluate_probe({ProbeFamily::W, n, 1.0}, p);
      EXPECT_NEAR(w.distances.d_sub, oracle::w_pure_distance(n, p), 1e-12);
      EXPECT_NEAR(w.distances.d_super, oracle::w_pure_distance(n, p), 1e-12);
      EXPECT_NEAR(*w.epsilon, w.distances.d_sub, 1e-14);
    }
  }
  EXPECT_NEAR(w_distances(6, 1.0, 0.35).d_sub, std::sqrt(5 * 0.35 / 6), 1e-12);
  // epsilon(N=2, p=0.5) for the pure GHZ probe.
  EXPECT_NEAR(*evaluate_probe({ProbeFamily::Ghz, 2, 1.0}, 0.5).epsilon, 0.5, 1e-14);
}

TEST(ClosedForm, MaximallyMixedProbe) {
  for (std::int64_t n : {1, 2, 5, 100}) {
    for (double p : {0.0, 0.4, 1.0}) {
      const DistancePair w = w_distances(n, 0.0, p);
      EXPECT_EQ(w.d_super, 0.0);
      // E(I/d, I/d) = (1 + sqrt(2 (1 - 1/d))) / d, which is 1 only for d = 2.
      const double d = std::pow(2.0, static_cast<double>(n));
      const double e = (1.0 + std::sqrt(2.0 * (1.0 - 1.0 / d))) / d;
      EXPECT_NEAR(w.d_sub, std::sqrt(1.0 - e), 1e-12);
    }
  }
}

TEST(ClosedForm, LargeSystemsStayFiniteAndApproachLimits) {
  for (double lambda : {0.3, 0.7, 1.0}) {
    for (double p : {0.2, 0.5, 0.9}) {
      const DistancePair ghz_limit = ghz_asymptotics(lambda, p);
      const DistancePair w_limit = w_asymptotics(lambda, p);
      double ghz_gap = INFINITY, w_gap = INFINITY;
      for (std::int64_t n : {10, 100, 1000, 100000, 1000000}) {
        for (const auto& [d, limit, gap] :
             {std::tuple{ghz_distances(n, lambda, p), ghz_limit, &ghz_gap},
              std::tuple{w_distances(n, lambda, p), w_limit, &w_gap}}) {
          EXPECT_TRUE(std::isfinite(d.d_sub) && std::isfinite(d.d_super));
          EXPECT_GE(d.d_super, 0.0);
          EXPECT_LE(d.d_sub, 1.0);
          EXPECT_LE(d.d_super, d.d_sub + 1e-15);
          const double next = std::max(std::abs(d.d_sub - limit.d_sub),
                                       std::abs(d.d_super - limit.d_super));
          EXPECT_LE(next, *gap + 1e-15);
          *gap = next;
        }
      }
      EXPECT_LE(ghz_gap, 1e-12);
      EXPECT_LE(w_gap, 1e-5);
    }
  }
}

TEST(ClosedForm, DistancesGrowWithP) {
  for (std::int64_t n : {1, 2, 4, 8, 64}) {
    for (double lambda : kLambdas) {
      DistancePair prev_ghz{0, 0}, prev_w{0, 0};
      for (int step = 0; step <= 100; ++step) {
        const double p = step / 100.0;
        const DistancePair ghz = ghz_distances(n, lambda, p);
        const DistancePair w = w_distances(n, lambda, p);
        EXPECT_GE(ghz.d_sub, prev_ghz.d_sub - 1e-12);
        EXPECT_GE(ghz.d_super, prev_ghz.d_super - 1e-12);
        EXPECT_GE(w.d_sub, prev_w.d_sub - 1e-12);
        EXPECT_GE(w.d_super, prev_w.d_super - 1e-12);
        prev_ghz = ghz;
        prev_w = w;
      }
    }
  }
}

TEST(Asymptotics, MatchLimitFormulas) {
  for (int i = 0; i <= 20; ++i) {
    const double lambda = i / 20.0;
    for (double p : {0.1, 0.2, 0.5, 1.0}) {
      const DistancePair ghz = ghz_asymptotics(lambda, p);
      EXPECT_NEAR(ghz.d_sub, oracle::ghz_limit_sub(lambda), 1e-15);
      EXPECT_NEAR(ghz.d_super, oracle::ghz_limit_super(lambda), 1e-15);
      const DistancePair w = w_asymptotics(lambda, p);
      if (lambda < 1.0) {
        EXPECT_NEAR(w.d_sub, oracle::w_limit_sub(lambda, p), 1e-15);
        EXPECT_NEAR(w.d_super, oracle::w_limit_super(lambda, p), 1e-15);
      }
    }
  }
  EXPECT_EQ(ghz_asymptotics(0.0, 0.3).d_sub, 1.0);
  EXPECT_EQ(ghz_asymptotics(0.0, 0.3).d_super, 0.0);
  EXPECT_EQ(w_asymptotics(0.7, 0.0).d_super, 0.0);
  EXPECT_DOUBLE_EQ(ghz_asymptotics(1.0, 0.4).d_sub, std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(w_asymptotics(1.0, 0.04).d_sub, 0.2);
  EXPECT_DOUBLE_EQ(w_asymptotics(1.0, 0.04).d_super, 0.2);
}

TEST(Asymptotics, GhzWithoutDephasingIsTheSelfPairLimit) {
  for (double lambda : {0.0, 0.3, 0.7, 1.0}) {
    const DistancePair limit = ghz_asymptotics(lambda, 0.0);
    EXPECT_NEAR(limit.d_sub, std::sqrt(1.0 - lambda * lambda), 1e-15);
    EXPECT_EQ(limit.d_super, 0.0);
    const DistancePair far = ghz_distances(2000, lambda, 0.0);
    EXPECT_NEAR(far.d_sub, limit.d_sub, 1e-12);
    EXPECT_NEAR(far.d_super, limit.d_super, 1e-12);
  }
}

TEST(ClosedForm, RejectsOutOfDomain) {
  EXPECT_THROW(ghz_traces(0, 0.5, 0.5), DomainError);
  EXPECT_THROW(w_traces(3, 1.2, 0.5), DomainError);
  EXPECT_THROW(w_traces(3, 0.5, -0.1), DomainError);
  EXPECT_THROW(ghz_asymptotics(0.5, 1.5), DomainError);
  EXPECT_THROW(w_asymptotics(std::nan(""), 0.5), DomainError);
}
