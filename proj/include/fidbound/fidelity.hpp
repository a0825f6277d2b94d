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

#include <optional>
#include <string>

#include "fidbound/density_matrix.hpp"

namespace fidbound {

namespace tolerance {
/// Slack on E <= F <= G and on d_super <= epsilon <= d_sub.
inline constexpr double kBoundChain = 1e-9;
/// Largest amount a measure may be clamped into [0, 1] before it is treated
/// as an internal error.
inline constexpr double kClamp = 1e-9;
}  // namespace tolerance

/// Relative roundoff resolution of a trace of products of dim x dim density
/// matrices. Radicands and infidelities below it are indistinguishable from
/// zero and are flushed to zero.
double trace_resolution(Eigen::Index dim);

/// Uhlmann fidelity [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2 from two Hermitian
/// eigendecompositions. Negative eigenvalues down to -1e-10 are clamped to 0;
/// anything more negative throws InvalidState.
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// E = Tr(rho sigma) + sqrt(2 [Tr(rho sigma)]^2 - 2 Tr(rho sigma rho sigma)).
double sub_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// G = Tr(rho sigma) + sqrt((1 - Tr rho^2)(1 - Tr sigma^2)).
double super_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1/2) sum |eig(rho - sigma)|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

double d_sub(const DensityMatrix& rho, const DensityMatrix& sigma);
double d_super(const DensityMatrix& rho, const DensityMatrix& sigma);
/// sqrt(1 - F): the Bures-type approximation error.
double epsilon(const DensityMatrix& rho, const DensityMatrix& sigma);

// Scalar assembly shared by the dense, closed-form and Fano routes.
// `resolution` is the roundoff floor of the inputs (see trace_resolution).

double sub_fidelity_from_traces(double relative, double quartic,
                                double resolution);
double super_fidelity_from_traces(double relative, double purity_a,
                                  double purity_b, double resolution);
/// sqrt(1 - value), returning exactly 0 when 1 - value <= resolution.
double distance_from_fidelity(double value, double resolution);

/// Clamps `value` into [0, 1]; throws ConsistencyError if that moves it by
/// more than tolerance::kClamp.
double clamp_unit(double value, const char* what);

struct MeasureReport {
  double sub_fidelity = 0.0;
  double super_fidelity = 0.0;
  std::optional<double> fidelity;
  double d_sub = 0.0;
  double d_super = 0.0;
  std::optional<double> epsilon;
  std::optional<double> trace_distance;
};

/// Every measure for (rho, sigma) on the dense path. The bound chains are
/// checked before returning.
MeasureReport measure_report(const DensityMatrix& rho,
                             const DensityMatrix& sigma);

/// Throws ConsistencyError when E <= F <= G or d_super <= epsilon <= d_sub
/// fails by more than tolerance::kBoundChain (checks skip absent values).
void check_bound_chain(const MeasureReport& report);

std::string describe(const MeasureReport& report);

}  // namespace fidbound
