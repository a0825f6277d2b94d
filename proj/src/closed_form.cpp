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

#include "fidbound/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fidbound/fidelity.hpp"

namespace fidbound {

namespace {

// Infidelities below this are roundoff in the scalar formulas.
constexpr double kScalarResolution =
    16.0 * std::numeric_limits<double>::epsilon();

void check_parameters(std::int64_t n_qubits, double lambda, double p) {
  if (n_qubits < 1) {
    throw DomainError("N must be at least 1, got " + std::to_string(n_qubits));
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambda must lie in [0, 1], got " +
                      std::to_string(lambda));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
  }
}

// Scale factors shared by both families.
struct Scales {
  double u;            // 2^-N
  double s;            // (1-p)^(N/2)
  double c;            // (1-p)^N
  double one_minus_s;  // 1 - s without cancellation
  double one_minus_c;
};

Scales scales(std::int64_t n_qubits, double p) {
  Scales k{};
  k.u = n_qubits > 1100 ? 0.0 : std::ldexp(1.0, -static_cast<int>(n_qubits));
  if (p == 1.0) {
    k.s = k.c = 0.0;
    k.one_minus_s = k.one_minus_c = 1.0;
    return k;
  }
  const double half_log = 0.5 * static_cast<double>(n_qubits) * std::log1p(-p);
  k.s = std::exp(half_log);
  k.c = std::exp(2.0 * half_log);
  k.one_minus_s = -std::expm1(half_log);
  k.one_minus_c = -std::expm1(2.0 * half_log);
  return k;
}

// Traces plus the cancellation-free pieces the measures need:
// one_minus_* = 1 - trace, and sub_radicand = 2 (relative^2 - quartic).
struct Expansion {
  TraceQuartet traces;
  double one_minus_in;
  double one_minus_out;
  double one_minus_relative;
  double sub_radicand;
};

Expansion ghz_expansion(std::int64_t n_qubits, double lambda, double p) {
  check_parameters(n_qubits, lambda, p);
  const auto [u, s, c, one_minus_s, one_minus_c] = scales(n_qubits, p);
  const double l = lambda;
  const double l2 = l * l;
  const double l3 = l2 * l;
  const double l4 = l2 * l2;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double mixed = (1.0 - u) * (1.0 - l2);

  Expansion e{};
  e.traces.purity_in = u + (1.0 - u) * l2;
  e.traces.purity_out = u + ((1.0 - u) - 0.5 * one_minus_c) * l2;
  e.traces.relative = u + ((1.0 - u) - 0.5 * one_minus_s) * l2;
  e.traces.quartic =
      u3 + l2 * (0.5 * c * u2 + 2.0 * s * u2 - 6.0 * u3 + 3.5 * u2) +
      l3 * (-c * u2 + 0.5 * c * u - 4.0 * s * u2 + 2.0 * s * u + 8.0 * u3 -
            7.0 * u2 + 1.5 * u) +
      l4 * (0.5 * c * u2 - 0.5 * c * u + 0.25 * c + 2.0 * s * u2 -
            2.0 * s * u + 0.5 * s - 3.0 * u3 + 3.5 * u2 - 1.5 * u + 0.25);

  e.one_minus_in = mixed;
  e.one_minus_out = mixed + 0.5 * one_minus_c * l2;
  e.one_minus_relative = mixed + 0.5 * one_minus_s * l2;

  // relative^2 - quartic = u (1 - lambda) X / 2
  const double x =
      l3 * (c * u - c + 4.0 * s * u - 2.0 * s - 6.0 * u2 + 5.0 * u - 1.0) +
      l2 * (-c * u - 4.0 * s * u + 2.0 * s + 10.0 * u2 - 9.0 * u + 2.0) +
      (l + 1.0) * (2.0 * u - 2.0 * u2);
  e.sub_radicand = u * (1.0 - l) * x;
  return e;
}

Expansion w_expansion(std::int64_t n_qubits, double lambda, double p) {
  check_parameters(n_qubits, lambda, p);
  const double u = scales(n_qubits, p).u;
  // w = (N - 1) / N
  const double w = 1.0 - 1.0 / static_cast<double>(n_qubits);
  const double l = lambda;
  const double l2 = l * l;
  const double l3 = l2 * l;
  const double l4 = l2 * l2;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double p2 = p * p;
  const double w2 = w * w;
  const double mixed = (1.0 - u) * (1.0 - l2);
  const double loss_out = w * (2.0 - p) * p;
  const double loss_relative = w * p;

  Expansion e{};
  e.traces.purity_in = u + (1.0 - u) * l2;
  e.traces.purity_out = u + ((1.0 - u) - loss_out) * l2;
  e.traces.relative = u + ((1.0 - u) - loss_relative) * l2;
  e.traces.quartic =
      u3 + l2 * (p2 * u2 * w - 6.0 * p * u2 * w - 6.0 * u3 + 6.0 * u2) +
      l3 * (-2.0 * p2 * u2 * w + 2.0 * p2 * u * w2 + 12.0 * p * u2 * w -
            6.0 * p * u * w + 8.0 * u3 - 12.0 * u2 + 4.0 * u) +
      l4 * (p2 * u2 * w - 2.0 * p2 * u * w2 + p2 * w2 - 6.0 * p * u2 * w +
            6.0 * p * u * w - 2.0 * p * w - 3.0 * u3 + 6.0 * u2 - 4.0 * u +
            1.0);

  e.one_minus_in = mixed;
  e.one_minus_out = mixed + loss_out * l2;
  e.one_minus_relative = mixed + loss_relative * l2;

  // relative^2 - quartic = u (1 - lambda) Z
  const double z =
      l3 * (p2 * u * w - 2.0 * p2 * w2 - 6.0 * p * u * w + 4.0 * p * w -
            3.0 * u2 + 5.0 * u - 2.0) +
      l2 * (-p2 * u * w + 6.0 * p * u * w - 2.0 * p * w + 5.0 * u2 - 7.0 * u +
            2.0) +
      (l + 1.0) * (u - u2);
  e.sub_radicand = 2.0 * u * (1.0 - l) * z;
  return e;
}

Expansion expansion(const ProbeStateSpec& spec, double p) {
  return spec.family == ProbeFamily::Ghz
             ? ghz_expansion(spec.n_qubits, spec.mixing, p)
             : w_expansion(spec.n_qubits, spec.mixing, p);
}

double checked_gap(double gap, const char* what) {
  if (gap < -tolerance::kClamp) {
    throw ConsistencyError(std::string(what) + " exceeds one by " +
                           std::to_string(-gap));
  }
  return gap;
}

ProbeEvaluation evaluate(const Expansion& e, double lambda) {
  const double sub_root = std::sqrt(std::max(0.0, e.sub_radicand));
  const double super_root =
      std::sqrt(std::max(0.0, e.one_minus_in) * std::max(0.0, e.one_minus_out));

  const double sub_gap =
      checked_gap(e.one_minus_relative - sub_root, "sub-fidelity");
  const double super_gap =
      checked_gap(e.one_minus_relative - super_root, "super-fidelity");

  ProbeEvaluation out;
  out.traces = e.traces;
  out.sub_fidelity = clamp_unit(e.traces.relative + sub_root, "sub-fidelity");
  out.super_fidelity =
      clamp_unit(e.traces.relative + super_root, "super-fidelity");
  out.distances.d_sub = sub_gap <= kScalarResolution ? 0.0 : std::sqrt(sub_gap);
  out.distances.d_super =
      super_gap <= kScalarResolution ? 0.0 : std::sqrt(super_gap);

  if (lambda == 1.0) {
    out.fidelity = out.traces.relative;
    const double gap = std::max(0.0, e.one_minus_relative);
    out.epsilon = gap <= kScalarResolution ? 0.0 : std::sqrt(gap);
  }
  return out;
}

void check_limit_parameters(double lambda, double p) {
  check_parameters(1, lambda, p);
}

}  // namespace

TraceQuartet ghz_traces(std::int64_t n_qubits, double lambda, double p) {
  return ghz_expansion(n_qubits, lambda, p).traces;
}

TraceQuartet w_traces(std::int64_t n_qubits, double lambda, double p) {
  return w_expansion(n_qubits, lambda, p).traces;
}

TraceQuartet probe_traces(const ProbeStateSpec& spec, double p) {
  spec.validate();
  return expansion(spec, p).traces;
}

ProbeEvaluation evaluate_probe(const ProbeStateSpec& spec, double p) {
  spec.validate();
  return evaluate(expansion(spec, p), spec.mixing);
}

DistancePair ghz_distances(std::int64_t n_qubits, double lambda, double p) {
  return evaluate(ghz_expansion(n_qubits, lambda, p), lambda).distances;
}

DistancePair w_distances(std::int64_t n_qubits, double lambda, double p) {
  return evaluate(w_expansion(n_qubits, lambda, p), lambda).distances;
}

DistancePair ghz_asymptotics(double lambda, double p) {
  check_limit_parameters(lambda, p);
  const double l2 = lambda * lambda;
  if (p == 0.0) return {std::sqrt(1.0 - l2), 0.0};
  if (lambda == 1.0) return {std::sqrt(0.5), std::sqrt(0.5)};
  const double base = 1.0 - 0.5 * l2;
  const double cross = std::sqrt((1.0 - l2) * (2.0 - l2) / 2.0);
  return {std::sqrt(base), std::sqrt(std::max(0.0, base - cross))};
}

DistancePair w_asymptotics(double lambda, double p) {
  check_limit_parameters(lambda, p);
  if (lambda == 1.0) return {std::sqrt(p), std::sqrt(p)};
  const double l2 = lambda * lambda;
  const double kept = 1.0 - p;
  const double base = 1.0 - kept * l2;
  const double cross = std::sqrt((1.0 - l2) * (1.0 - kept * kept * l2));
  return {std::sqrt(base), std::sqrt(std::max(0.0, base - cross))};
}

DistancePair probe_asymptotics(ProbeFamily family, double lambda, double p) {
  return family == ProbeFamily::Ghz ? ghz_asymptotics(lambda, p)
                                    : w_asymptotics(lambda, p);
}

}  // namespace fidbound
