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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "fidbound/dephasing.hpp"
#include "fidbound/sweep.hpp"

namespace fidbound {

namespace {

double quartet_gap(const TraceQuartet& a, const TraceQuartet& b) {
  return std::max({std::abs(a.purity_in - b.purity_in),
                   std::abs(a.purity_out - b.purity_out),
                   std::abs(a.relative - b.relative),
                   std::abs(a.quartic - b.quartic)});
}

TraceQuartet dense_quartet(const DensityMatrix& rho, double p) {
  const DensityMatrix out = apply_fast(DephasingChannel(p), rho);
  return {purity(rho), purity(out), relative_purity(rho, out),
          quartic_trace(rho, out)};
}

BatteryResult factor_table_battery() {
  BatteryResult result{"factor-table", 0.0, 1e-14};
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    const FactorTable closed = quartic_factor_table(p);
    const FactorTable brute = brute_force_factor_table(p);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      result.max_deviation =
          std::max(result.max_deviation, std::abs(closed[i] - brute[i]));
    }
  }
  return result;
}

BatteryResult closed_form_battery(
    const char* name, ProbeFamily family,
    const std::function<TraceQuartet(std::int64_t, double, double)>& traces) {
  BatteryResult result{name, 0.0, 1e-10};
  for (int n = 1; n <= 8; ++n) {
    for (double lambda : {0.0, 0.25, 0.5, 0.7, 1.0}) {
      const DensityMatrix rho = make_mixed({family, n, lambda});
      for (int step = 0; step <= 10; ++step) {
        const double p = step / 10.0;
        const double gap = quartet_gap(traces(n, lambda, p), dense_quartet(rho, p));
        result.max_deviation = std::max(result.max_deviation,
                                         std::isnan(gap) ? INFINITY : gap);
      }
    }
  }
  return result;
}

BatteryResult fano_battery(std::mt19937_64& rng) {
  BatteryResult result{"fano-vs-dense", 0.0, 1e-9};
  for (int n = 1; n <= kFanoQuarticMaxQubits; ++n) {
    for (int sample = 0; sample < 8; ++sample) {
      const DensityMatrix rho = random_state(n, rng);
      const FanoCoefficients coeffs = decompose(rho);
      for (double p : {0.0, 0.3, 0.7, 1.0}) {
        const TraceQuartet fano{fano_purity(coeffs),
                                fano_dephased_purity(coeffs, p),
                                fano_relative_purity(coeffs, p),
                                fano_quartic(coeffs, p)};
        result.max_deviation =
            std::max(result.max_deviation,
                     quartet_gap(fano, dense_quartet(rho, p)));
      }
    }
  }
  return result;
}

BatteryResult channel_battery(std::mt19937_64& rng) {
  BatteryResult result{"fast-vs-kraus", 0.0, 1e-13};
  for (int n = 1; n <= kTupleSumMaxQubits; ++n) {
    const DensityMatrix rho = random_state(n, rng);
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const DephasingChannel channel(p);
      const Matrix fast = apply_fast(channel, rho).matrix();
      for (KrausPath path : {KrausPath::PerQubit, KrausPath::TupleSum}) {
        const Matrix kraus = apply_kraus(channel, rho, path).matrix();
        result.max_deviation = std::max(
            result.max_deviation, (fast - kraus).cwiseAbs().maxCoeff());
      }
    }
  }
  return result;
}

}  // namespace

std::vector<BatteryResult> self_check(const SelfCheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<BatteryResult> results;
  results.push_back(factor_table_battery());
  results.push_back(
      closed_form_battery("closed-ghz-vs-dense", ProbeFamily::Ghz, options.ghz));
  results.push_back(
      closed_form_battery("closed-w-vs-dense", ProbeFamily::W, options.w));
  results.push_back(fano_battery(rng));
  results.push_back(channel_battery(rng));
  return results;
}

bool print_self_check(std::ostream& out,
                      const std::vector<BatteryResult>& results) {
  bool all = true;
  char line[160];
  for (const BatteryResult& r : results) {
    std::snprintf(line, sizeof line, "%-20s max deviation %.3e (tolerance %.0e) %s",
                  r.name.c_str(), r.max_deviation, r.tolerance,
                  r.passed() ? "PASS" : "FAIL");
    out << line << '\n';
    all = all && r.passed();
  }
  return all;
}

}  // namespace fidbound
