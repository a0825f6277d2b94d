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

#include "fidbound/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace fidbound {

const char* to_string(Invariant invariant) {
  switch (invariant) {
    case Invariant::Hermitian:
      return "not Hermitian";
    case Invariant::UnitTrace:
      return "trace is not one";
    case Invariant::PositiveSemidefinite:
      return "not positive semidefinite";
    case Invariant::RealTrace:
      return "trace has an imaginary residue";
  }
  return "unknown invariant";
}

const char* to_string(ProbeFamily family) {
  return family == ProbeFamily::Ghz ? "ghz" : "w";
}

DenseLimit DenseLimit::of(int max_qubits) {
  if (max_qubits < 1 || max_qubits > kMaxDenseLimit) {
    throw DomainError("dense limit must be in [1, " +
                      std::to_string(kMaxDenseLimit) + "], got " +
                      std::to_string(max_qubits));
  }
  return DenseLimit{max_qubits};
}

void DenseLimit::check(int n_qubits) const {
  if (n_qubits < 1) {
    throw DimensionError("qubit count must be positive, got " +
                         std::to_string(n_qubits));
  }
  if (n_qubits > max_qubits) {
    throw DimensionError("dense representation limited to " +
                         std::to_string(max_qubits) + " qubits, requested " +
                         std::to_string(n_qubits));
  }
}

namespace {

int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) return -1;
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

int checked_qubit_count(std::int64_t n_qubits, DenseLimit limit) {
  if (n_qubits > limit.max_qubits) {
    throw DimensionError("dense representation limited to " +
                         std::to_string(limit.max_qubits) +
                         " qubits, requested " + std::to_string(n_qubits));
  }
  limit.check(static_cast<int>(n_qubits));
  return static_cast<int>(n_qubits);
}

}  // namespace

void validate_density(const Matrix& entries, Validation validation) {
  const Eigen::Index dim = entries.rows();
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      const double gap = std::abs(entries(i, j) - std::conj(entries(j, i)));
      if (!(gap <= tolerance::kHermiticity)) {
        std::ostringstream msg;
        msg << "entry (" << i << "," << j << ") differs from conj of (" << j
            << "," << i << ") by " << gap;
        throw InvalidState(Invariant::Hermitian, msg.str());
      }
    }
  }
  const double trace = entries.trace().real();
  if (!(std::abs(trace - 1.0) <= tolerance::kTrace)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "trace = " << trace;
    throw InvalidState(Invariant::UnitTrace, msg.str());
  }
  if (validation == Validation::Full) {
    const Matrix hermitian = (entries + entries.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                                 Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw Error("eigendecomposition failed during validation");
    }
    const double smallest = solver.eigenvalues().minCoeff();
    if (smallest < -tolerance::kPositivity) {
      std::ostringstream msg;
      msg << "minimum eigenvalue " << smallest;
      throw InvalidState(Invariant::PositiveSemidefinite, msg.str());
    }
  }
}

DensityMatrix DensityMatrix::from_matrix(Matrix entries, Validation validation,
                                         DenseLimit limit) {
  if (entries.rows() != entries.cols()) {
    throw DimensionError("density matrix must be square");
  }
  const int n = qubits_for_dimension(entries.rows());
  if (n < 1) {
    throw DimensionError("dimension " + std::to_string(entries.rows()) +
                         " is not 2^N for N >= 1");
  }
  limit.check(n);
  validate_density(entries, validation);
  return DensityMatrix(n, std::move(entries));
}

void ProbeStateSpec::validate() const {
  if (n_qubits < 1) {
    throw DomainError("probe state needs N >= 1, got " +
                      std::to_string(n_qubits));
  }
  if (!(mixing >= 0.0 && mixing <= 1.0)) {
    throw DomainError("mixing parameter must lie in [0, 1], got " +
                      std::to_string(mixing));
  }
}

DensityMatrix make_ghz_pure(int n_qubits, DenseLimit limit) {
  limit.check(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(0, 0) = rho(0, dim - 1) = rho(dim - 1, 0) = rho(dim - 1, dim - 1) = 0.5;
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    limit);
}

DensityMatrix make_w_pure(int n_qubits, DenseLimit limit) {
  limit.check(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Zero(dim, dim);
  const double weight = 1.0 / n_qubits;
  for (int a = 0; a < n_qubits; ++a) {
    for (int b = 0; b < n_qubits; ++b) {
      rho(Eigen::Index{1} << a, Eigen::Index{1} << b) = weight;
    }
  }
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    limit);
}

DensityMatrix make_mixed(const ProbeStateSpec& spec, DenseLimit limit) {
  spec.validate();
  const int n = checked_qubit_count(spec.n_qubits, limit);
  const DensityMatrix pure = spec.family == ProbeFamily::Ghz
                                 ? make_ghz_pure(n, limit)
                                 : make_w_pure(n, limit);
  const Eigen::Index dim = pure.dim();
  Matrix rho = spec.mixing * pure.matrix();
  const double floor = (1.0 - spec.mixing) / static_cast<double>(dim);
  rho.diagonal().array() += floor;
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    limit);
}

DensityMatrix maximally_mixed(int n_qubits, DenseLimit limit) {
  limit.check(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix rho = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    limit);
}

DensityMatrix pure_state(const Eigen::VectorXcd& amplitudes, DenseLimit limit) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw DomainError("pure state needs a nonzero vector");
  const Eigen::VectorXcd psi = amplitudes / norm;
  Matrix rho = psi * psi.adjoint();
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    limit);
}

DensityMatrix tensor_product(const DensityMatrix& left,
                             const DensityMatrix& right, DenseLimit limit) {
  limit.check(left.n_qubits() + right.n_qubits());
  const Eigen::Index dl = left.dim();
  const Eigen::Index dr = right.dim();
  Matrix out(dl * dr, dl * dr);
  for (Eigen::Index i = 0; i < dl; ++i) {
    for (Eigen::Index j = 0; j < dl; ++j) {
      out.block(i * dr, j * dr, dr, dr) = left(i, j) * right.matrix();
    }
  }
  return DensityMatrix::from_matrix(std::move(out), Validation::Structural,
                                    limit);
}

DensityMatrix random_state(int n_qubits, std::mt19937_64& rng,
                           DenseLimit limit) {
  limit.check(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Matrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()) / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    limit);
}

DensityMatrix random_pure_state(int n_qubits, std::mt19937_64& rng,
                                DenseLimit limit) {
  limit.check(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    psi(i) = Complex(re, im);
  }
  return pure_state(psi, limit);
}

void require_same_shape(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.n_qubits() != sigma.n_qubits()) {
    throw DimensionError("operands act on " + std::to_string(rho.n_qubits()) +
                         " and " + std::to_string(sigma.n_qubits()) +
                         " qubits");
  }
}

double checked_real(Complex trace, const char* what) {
  if (!(std::abs(trace.imag()) <= tolerance::kRealness)) {
    std::ostringstream msg;
    msg << what << " has imaginary part " << trace.imag();
    throw InvalidState(Invariant::RealTrace, msg.str());
  }
  return trace.real();
}

double purity(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  return checked_real(m.cwiseProduct(m.transpose()).sum(), "Tr(rho^2)");
}

double relative_purity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho, sigma);
  return checked_real(rho.matrix().cwiseProduct(sigma.matrix().transpose()).sum(),
                      "Tr(rho sigma)");
}

double quartic_trace(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho, sigma);
  Matrix product;
  product.noalias() = rho.matrix() * sigma.matrix();
  return checked_real(product.cwiseProduct(product.transpose()).sum(),
                      "Tr(rho sigma rho sigma)");
}

double min_eigenvalue(const DensityMatrix& rho) {
  const Matrix hermitian = (rho.matrix() + rho.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed");
  }
  return solver.eigenvalues().minCoeff();
}

}  // namespace fidbound
