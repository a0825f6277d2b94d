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

#include "fidbound/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fidbound {

double trace_resolution(Eigen::Index dim) {
  return 32.0 * static_cast<double>(dim) *
         std::numeric_limits<double>::epsilon();
}

double clamp_unit(double value, const char* what) {
  if (!(value >= -tolerance::kClamp && value <= 1.0 + tolerance::kClamp)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " = " << value << " lies outside [0, 1]";
    throw ConsistencyError(msg.str());
  }
  return std::clamp(value, 0.0, 1.0);
}

double sub_fidelity_from_traces(double relative, double quartic,
                                double resolution) {
  double radicand = 2.0 * (relative * relative - quartic);
  if (radicand <= resolution * relative * relative) radicand = 0.0;
  return clamp_unit(relative + std::sqrt(radicand), "sub-fidelity");
}

double super_fidelity_from_traces(double relative, double purity_a,
                                  double purity_b, double resolution) {
  double mixed_a = 1.0 - purity_a;
  double mixed_b = 1.0 - purity_b;
  if (mixed_a <= resolution) mixed_a = 0.0;
  if (mixed_b <= resolution) mixed_b = 0.0;
  return clamp_unit(relative + std::sqrt(mixed_a * mixed_b),
                    "super-fidelity");
}

double distance_from_fidelity(double value, double resolution) {
  const double gap = 1.0 - value;
  if (gap <= resolution) return 0.0;
  return std::sqrt(gap);
}

namespace {

// Eigenvalues within roundoff of zero are flushed, since their square roots
// would otherwise contribute O(sqrt(eps)).
Eigen::VectorXd clamped_spectrum(const Eigen::VectorXd& eigenvalues,
                                 const char* what) {
  Eigen::VectorXd out = eigenvalues;
  const double floor =
      trace_resolution(out.size()) * std::max(out.maxCoeff(), 0.0);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < -tolerance::kPositivity) {
      std::ostringstream msg;
      msg << what << " has eigenvalue " << out(i);
      throw InvalidState(Invariant::PositiveSemidefinite, msg.str());
    }
    if (out(i) <= floor) out(i) = 0.0;
  }
  return out;
}

}  // namespace

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho, sigma);
  Eigen::SelfAdjointEigenSolver<Matrix> rho_solver(rho.matrix());
  if (rho_solver.info() != Eigen::Success) {
    throw Error("eigendecomposition of rho failed");
  }
  const Eigen::VectorXd root =
      clamped_spectrum(rho_solver.eigenvalues(), "rho").cwiseSqrt();
  const Matrix& basis = rho_solver.eigenvectors();
  const Matrix sqrt_rho = basis * root.asDiagonal() * basis.adjoint();

  Matrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
  inner = (inner + inner.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> inner_solver(inner,
                                                     Eigen::EigenvaluesOnly);
  if (inner_solver.info() != Eigen::Success) {
    throw Error("eigendecomposition of sqrt(rho) sigma sqrt(rho) failed");
  }
  const double root_trace =
      clamped_spectrum(inner_solver.eigenvalues(), "sqrt(rho) sigma sqrt(rho)")
          .cwiseSqrt()
          .sum();
  return clamp_unit(root_trace * root_trace, "fidelity");
}

double sub_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return sub_fidelity_from_traces(relative_purity(rho, sigma),
                                  quartic_trace(rho, sigma),
                                  trace_resolution(rho.dim()));
}

double super_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return super_fidelity_from_traces(relative_purity(rho, sigma), purity(rho),
                                    purity(sigma), trace_resolution(rho.dim()));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho, sigma);
  Matrix difference = rho.matrix() - sigma.matrix();
  difference = (difference + difference.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(difference,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition of rho - sigma failed");
  }
  return clamp_unit(0.5 * solver.eigenvalues().cwiseAbs().sum(),
                    "trace distance");
}

double d_sub(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return distance_from_fidelity(sub_fidelity(rho, sigma),
                                trace_resolution(rho.dim()));
}

double d_super(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return distance_from_fidelity(super_fidelity(rho, sigma),
                                trace_resolution(rho.dim()));
}

double epsilon(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return distance_from_fidelity(uhlmann_fidelity(rho, sigma),
                                trace_resolution(rho.dim()));
}

MeasureReport measure_report(const DensityMatrix& rho,
                             const DensityMatrix& sigma) {
  require_same_shape(rho, sigma);
  const double resolution = trace_resolution(rho.dim());
  const double relative = relative_purity(rho, sigma);
  MeasureReport report;
  report.sub_fidelity = sub_fidelity_from_traces(
      relative, quartic_trace(rho, sigma), resolution);
  report.super_fidelity = super_fidelity_from_traces(
      relative, purity(rho), purity(sigma), resolution);
  report.fidelity = uhlmann_fidelity(rho, sigma);
  report.d_sub = distance_from_fidelity(report.sub_fidelity, resolution);
  report.d_super = distance_from_fidelity(report.super_fidelity, resolution);
  report.epsilon = distance_from_fidelity(*report.fidelity, resolution);
  report.trace_distance = trace_distance(rho, sigma);
  check_bound_chain(report);
  return report;
}

void check_bound_chain(const MeasureReport& r) {
  constexpr double tol = tolerance::kBoundChain;
  auto violated = [&](const char* relation) {
    throw ConsistencyError(std::string("bound chain violated (") + relation +
                           "): " + describe(r));
  };
  if (r.fidelity) {
    if (r.sub_fidelity > *r.fidelity + tol) violated("E <= F");
    if (*r.fidelity > r.super_fidelity + tol) violated("F <= G");
  } else if (r.sub_fidelity > r.super_fidelity + tol) {
    violated("E <= G");
  }
  if (r.epsilon) {
    if (r.d_super > *r.epsilon + tol) violated("d_super <= epsilon");
    if (*r.epsilon > r.d_sub + tol) violated("epsilon <= d_sub");
  } else if (r.d_super > r.d_sub + tol) {
    violated("d_super <= d_sub");
  }
}

std::string describe(const MeasureReport& r) {
  std::ostringstream out;
  out.precision(17);
  auto optional = [&](const char* name, const std::optional<double>& v) {
    out << ' ' << name << '=';
    if (v) {
      out << *v;
    } else {
      out << "n/a";
    }
  };
  out << "E=" << r.sub_fidelity << " G=" << r.super_fidelity;
  optional("F", r.fidelity);
  out << " d_sub=" << r.d_sub << " d_super=" << r.d_super;
  optional("epsilon", r.epsilon);
  optional("trace_distance", r.trace_distance);
  return out.str();
}

}  // namespace fidbound
