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

#include <cstdint>
#include <optional>

#include "fidbound/density_matrix.hpp"

namespace fidbound {

/// The four traces every measure is assembled from, for a probe rho and its
/// dephased image E(rho).
struct TraceQuartet {
  double purity_in = 0.0;   // Tr rho^2
  double purity_out = 0.0;  // Tr E(rho)^2
  double relative = 0.0;    // Tr rho E(rho)
  double quartic = 0.0;     // Tr rho E(rho) rho E(rho)
};

struct DistancePair {
  double d_sub = 0.0;
  double d_super = 0.0;
};

/// Closed-form evaluation of one probe/dephased pair.
struct ProbeEvaluation {
  TraceQuartet traces;
  double sub_fidelity = 0.0;
  double super_fidelity = 0.0;
  DistancePair distances;
  /// Present only for lambda = 1, where the probe is pure and F = Tr rho E(rho).
  std::optional<double> fidelity;
  std::optional<double> epsilon;
};

// All evaluators accept any N >= 1. Powers of 2^N are carried as u = 2^-N, so
// nothing overflows; u and (1 - p)^(N/2) flush to 0 for very large N.
// Parameters outside their domain throw DomainError.

TraceQuartet ghz_traces(std::int64_t n_qubits, double lambda, double p);
TraceQuartet w_traces(std::int64_t n_qubits, double lambda, double p);
TraceQuartet probe_traces(const ProbeStateSpec& spec, double p);

ProbeEvaluation evaluate_probe(const ProbeStateSpec& spec, double p);

DistancePair ghz_distances(std::int64_t n_qubits, double lambda, double p);
DistancePair w_distances(std::int64_t n_qubits, double lambda, double p);

/// N -> infinity limits of (d_sub, d_super).
///
/// GHZ: sqrt(1 - lambda^2/2) and
/// sqrt(1 - lambda^2/2 - sqrt((1 - lambda^2)(2 - lambda^2)/2)), independent
/// of p > 0. At p = 0 the channel is the identity for every N, so the limits
/// are those of E(rho, rho) and G(rho, rho): sqrt(1 - lambda^2) and 0.
DistancePair ghz_asymptotics(double lambda, double p);

/// W: sqrt(1 - (1-p) lambda^2) and
/// sqrt(1 - (1-p) lambda^2 - sqrt((1 - lambda^2)(1 - (1-p)^2 lambda^2))).
/// At lambda = 1 both reduce to sqrt(p).
DistancePair w_asymptotics(double lambda, double p);

DistancePair probe_asymptotics(ProbeFamily family, double lambda, double p);

}  // namespace fidbound
