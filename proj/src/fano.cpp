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

#include "fidbound/fano.hpp"

#include <cmath>
#include <future>
#include <sstream>

namespace fidbound {

namespace {

std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

int digit(std::size_t index, int n_qubits, int qubit) {
  return static_cast<int>((index >> (2 * (n_qubits - 1 - qubit))) & 3u);
}

// Applies a 4x4 map to base-4 digit `qubit` (0-based from the most
// significant end) of a vector over 4^N entries.
void transform_site(std::vector<Complex>& values, int n_qubits, int qubit,
                    const Eigen::Matrix4cd& map) {
  const std::size_t stride = pow4(n_qubits - 1 - qubit);
  const std::size_t block = stride * 4;
  std::array<Complex, 4> in{};
  for (std::size_t base = 0; base < values.size(); base += block) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      for (int m = 0; m < 4; ++m) in[m] = values[base + offset + m * stride];
      for (int j = 0; j < 4; ++j) {
        Complex acc = 0.0;
        for (int m = 0; m < 4; ++m) acc += map(j, m) * in[m];
        values[base + offset + j * stride] = acc;
      }
    }
  }
}

char symbol_char(int symbol) { return "0+-z"[symbol]; }

}  // namespace

Eigen::Matrix2cd fano_basis(int symbol) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (symbol) {
    case kFanoIdentity:
      m(0, 0) = m(1, 1) = h;
      break;
    case kFanoRaise:
      m(0, 1) = 1.0;
      break;
    case kFanoLower:
      m(1, 0) = 1.0;
      break;
    case kFanoZ:
      m(0, 0) = h;
      m(1, 1) = -h;
      break;
    default:
      throw DomainError("basis symbol must be 0..3");
  }
  return m;
}

FanoCoefficients::FanoCoefficients(int n_qubits, std::vector<Complex> coeffs)
    : n_qubits_(n_qubits), coeffs_(std::move(coeffs)) {
  if (n_qubits < 1 || n_qubits > kFanoMaxQubits) {
    throw DimensionError("Fano coefficients support 1.." +
                         std::to_string(kFanoMaxQubits) + " qubits, got " +
                         std::to_string(n_qubits));
  }
  if (coeffs_.size() != pow4(n_qubits)) {
    throw DimensionError("expected 4^" + std::to_string(n_qubits) +
                         " coefficients, got " +
                         std::to_string(coeffs_.size()));
  }
}

std::size_t FanoCoefficients::index_of(std::string_view label) {
  std::size_t index = 0;
  for (char ch : label) {
    int symbol = 0;
    switch (ch) {
      case '0': symbol = kFanoIdentity; break;
      case '+': symbol = kFanoRaise; break;
      case '-': symbol = kFanoLower; break;
      case 'z': symbol = kFanoZ; break;
      default:
        throw ParseError(std::string("bad Fano label symbol '") + ch + "'");
    }
    index = index * 4 + static_cast<std::size_t>(symbol);
  }
  return index;
}

Complex FanoCoefficients::at(std::string_view label) const {
  if (static_cast<int>(label.size()) != n_qubits_) {
    throw ParseError("Fano label '" + std::string(label) + "' needs " +
                     std::to_string(n_qubits_) + " symbols");
  }
  return coeffs_[index_of(label)];
}

std::string FanoCoefficients::label_of(std::size_t index, int n_qubits) {
  std::string label(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    label[q] = symbol_char(digit(index, n_qubits, q));
  }
  return label;
}

std::size_t FanoCoefficients::swap_raise_lower(std::size_t index,
                                               int n_qubits) {
  std::size_t out = 0;
  for (int q = 0; q < n_qubits; ++q) {
    int d = digit(index, n_qubits, q);
    if (d == kFanoRaise) d = kFanoLower;
    else if (d == kFanoLower) d = kFanoRaise;
    out = out * 4 + static_cast<std::size_t>(d);
  }
  return out;
}

int FanoCoefficients::coherence_order(std::size_t index, int n_qubits) {
  int order = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const int d = digit(index, n_qubits, q);
    order += (d == kFanoRaise || d == kFanoLower) ? 1 : 0;
  }
  return order;
}

FanoCoefficients decompose(const DensityMatrix& rho, int max_qubits) {
  const int n = rho.n_qubits();
  if (n > max_qubits || n > kFanoMaxQubits) {
    throw DimensionError("Fano decomposition capped at " +
                         std::to_string(std::min(max_qubits, kFanoMaxQubits)) +
                         " qubits, requested " + std::to_string(n));
  }
  // Entry (row, col) goes to the base-4 index whose digit for qubit k is
  // 2 * row_bit_k + col_bit_k.
  std::vector<Complex> values(pow4(n));
  for (Eigen::Index row = 0; row < rho.dim(); ++row) {
    for (Eigen::Index col = 0; col < rho.dim(); ++col) {
      std::size_t index = 0;
      for (int q = 0; q < n; ++q) {
        const int shift = n - 1 - q;
        const auto r = static_cast<std::size_t>((row >> shift) & 1);
        const auto c = static_cast<std::size_t>((col >> shift) & 1);
        index = index * 4 + 2 * r + c;
      }
      values[index] = rho(row, col);
    }
  }
  Eigen::Matrix4cd contraction;
  for (int j = 0; j < 4; ++j) {
    const Eigen::Matrix2cd basis = fano_basis(j);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) contraction(j, 2 * r + c) = std::conj(basis(r, c));
    }
  }
  for (int q = 0; q < n; ++q) transform_site(values, n, q, contraction);
  return FanoCoefficients(n, std::move(values));
}

DensityMatrix reconstruct(const FanoCoefficients& coeffs) {
  const int n = coeffs.n_qubits();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::size_t partner = FanoCoefficients::swap_raise_lower(i, n);
    const double gap = std::abs(coeffs[i] - std::conj(coeffs[partner]));
    if (gap > 1e-10) {
      std::ostringstream msg;
      msg << "coefficient " << FanoCoefficients::label_of(i, n)
          << " is not the conjugate of "
          << FanoCoefficients::label_of(partner, n) << " (gap " << gap << ")";
      throw InvalidState(Invariant::Hermitian, msg.str());
    }
  }
  std::vector<Complex> values = coeffs.coefficients();
  Eigen::Matrix4cd expansion;
  for (int j = 0; j < 4; ++j) {
    const Eigen::Matrix2cd basis = fano_basis(j);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) expansion(2 * r + c, j) = basis(r, c);
    }
  }
  for (int q = 0; q < n; ++q) transform_site(values, n, q, expansion);

  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix rho(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      std::size_t index = 0;
      for (int q = 0; q < n; ++q) {
        const int shift = n - 1 - q;
        const auto r = static_cast<std::size_t>((row >> shift) & 1);
        const auto c = static_cast<std::size_t>((col >> shift) & 1);
        index = index * 4 + 2 * r + c;
      }
      rho(row, col) = values[index];
    }
  }
  return DensityMatrix::from_matrix(std::move(rho), Validation::Structural,
                                    DenseLimit{kMaxDenseLimit});
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
  }
}

// sum_J a_J a_swap(J) weight^order(J): the pairing structure of
// Tr(I_j I_k) collapses the double sum to one pass.
double paired_sum(const FanoCoefficients& coeffs, double weight,
                  const char* what) {
  const int n = coeffs.n_qubits();
  std::vector<double> powers(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * weight;
  Complex total = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::size_t partner = FanoCoefficients::swap_raise_lower(i, n);
    total += coeffs[i] * coeffs[partner] *
             powers[FanoCoefficients::coherence_order(i, n)];
  }
  return checked_real(total, what);
}

}  // namespace

FanoCoefficients channel_in_basis(const FanoCoefficients& coeffs, double p) {
  check_probability(p);
  const int n = coeffs.n_qubits();
  const double keep = std::sqrt(1.0 - p);
  std::vector<double> powers(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k <= n; ++k) powers[k] = powers[k - 1] * keep;
  std::vector<Complex> out(coeffs.coefficients());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= powers[FanoCoefficients::coherence_order(i, n)];
  }
  return FanoCoefficients(n, std::move(out));
}

double fano_purity(const FanoCoefficients& coeffs) {
  return paired_sum(coeffs, 1.0, "Fano purity");
}

double fano_dephased_purity(const FanoCoefficients& coeffs, double p) {
  check_probability(p);
  return paired_sum(coeffs, 1.0 - p, "Fano dephased purity");
}

double fano_relative_purity(const FanoCoefficients& coeffs, double p) {
  check_probability(p);
  return paired_sum(coeffs, std::sqrt(1.0 - p), "Fano relative purity");
}

FactorTable quartic_factor_table(double p) {
  check_probability(p);
  const double s = std::sqrt(1.0 - p);
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  constexpr int O = kFanoIdentity;
  constexpr int P = kFanoRaise;
  constexpr int M = kFanoLower;
  constexpr int Z = kFanoZ;

  FactorTable table{};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      for (int q = 0; q < 4; ++q) {
        for (int r = 0; r < 4; ++r) {
          // Recurring groups of the expansion.
          const double raise_tail =
              s * (d(q, O) - d(q, Z)) * d(r, M) + d(q, M) * (d(r, O) + d(r, Z));
          const double lower_tail =
              s * (d(q, O) + d(q, Z)) * d(r, P) + d(q, P) * (d(r, O) - d(r, Z));
          const double coherent_even =
              s * (d(q, P) * d(r, M) + d(q, M) * d(r, P));
          const double coherent_odd =
              s * (d(q, P) * d(r, M) - d(q, M) * d(r, P));

          double value = 0.0;
          value += d(j, O) *
                   (d(k, O) * (d(q, O) * d(r, O) + coherent_even +
                               d(q, Z) * d(r, Z)) +
                    s * d(k, P) * raise_tail + s * d(k, M) * lower_tail +
                    d(k, Z) * (d(q, O) * d(r, Z) + coherent_odd +
                               d(q, Z) * d(r, O)));
          value += d(j, P) *
                   (d(k, O) * raise_tail +
                    s * d(k, M) *
                        ((d(q, O) + d(q, Z)) * (d(r, O) + d(r, Z)) +
                         2.0 * s * d(q, P) * d(r, M)) -
                    d(k, Z) * raise_tail);
          value += d(j, M) *
                   (d(k, O) * lower_tail +
                    s * d(k, P) *
                        ((d(q, O) - d(q, Z)) * (d(r, O) - d(r, Z)) +
                         2.0 * s * d(q, M) * d(r, P)) +
                    d(k, Z) * lower_tail);
          value += d(j, Z) *
                   (d(k, O) * (d(q, O) * d(r, Z) + coherent_odd +
                               d(q, Z) * d(r, O)) +
                    s * d(k, P) * raise_tail - s * d(k, M) * lower_tail +
                    d(k, Z) * (d(q, O) * d(r, O) + coherent_even +
                               d(q, Z) * d(r, Z)));
          table[factor_index(j, k, q, r)] = 0.5 * value;
        }
      }
    }
  }
  return table;
}

FactorTable brute_force_factor_table(double p) {
  check_probability(p);
  const Eigen::Matrix2cd k0 =
      (Eigen::Matrix2cd() << 1.0, 0.0, 0.0, std::sqrt(1.0 - p)).finished();
  const Eigen::Matrix2cd k1 =
      (Eigen::Matrix2cd() << 0.0, 0.0, 0.0, std::sqrt(p)).finished();
  std::array<Eigen::Matrix2cd, 4> basis;
  std::array<Eigen::Matrix2cd, 4> dephased;
  for (int j = 0; j < 4; ++j) {
    basis[j] = fano_basis(j);
    dephased[j] = k0 * basis[j] * k0.adjoint() + k1 * basis[j] * k1.adjoint();
  }
  FactorTable table{};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      for (int q = 0; q < 4; ++q) {
        for (int r = 0; r < 4; ++r) {
          const Complex value =
              (basis[j] * dephased[k] * basis[q] * dephased[r]).trace();
          table[factor_index(j, k, q, r)] = value.real();
        }
      }
    }
  }
  return table;
}

namespace {

struct FactorEntry {
  std::size_t j, k, q, r;
  double value;
};

class QuarticSum {
 public:
  QuarticSum(const FanoCoefficients& coeffs,
             const std::vector<FactorEntry>& entries)
      : coeffs_(coeffs), entries_(entries), n_(coeffs.n_qubits()) {}

  Complex slice(std::size_t first, std::size_t last) const {
    Complex total = 0.0;
    for (std::size_t e = first; e < last; ++e) {
      const FactorEntry& f = entries_[e];
      total += descend(1, f.j, f.k, f.q, f.r, f.value);
    }
    return total;
  }

 private:
  Complex descend(int site, std::size_t j, std::size_t k, std::size_t q,
                  std::size_t r, double weight) const {
    if (site == n_) {
      return weight * coeffs_[j] * coeffs_[k] * coeffs_[q] * coeffs_[r];
    }
    Complex total = 0.0;
    for (const FactorEntry& f : entries_) {
      total += descend(site + 1, 4 * j + f.j, 4 * k + f.k, 4 * q + f.q,
                       4 * r + f.r, weight * f.value);
    }
    return total;
  }

  const FanoCoefficients& coeffs_;
  const std::vector<FactorEntry>& entries_;
  int n_;
};

}  // namespace

double fano_quartic(const FanoCoefficients& coeffs, double p,
                    const QuarticOptions& options) {
  const int n = coeffs.n_qubits();
  if (n > options.max_qubits) {
    throw DimensionError("Fano quartic sum capped at " +
                         std::to_string(options.max_qubits) +
                         " qubits, requested " + std::to_string(n));
  }
  if (options.partitions < 1) throw DomainError("partitions must be positive");

  const FactorTable table = quartic_factor_table(p);
  std::vector<FactorEntry> entries;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t q = 0; q < 4; ++q) {
        for (std::size_t r = 0; r < 4; ++r) {
          const double value = table[factor_index(static_cast<int>(j),
                                                  static_cast<int>(k),
                                                  static_cast<int>(q),
                                                  static_cast<int>(r))];
          if (value != 0.0) entries.push_back({j, k, q, r, value});
        }
      }
    }
  }

  const QuarticSum sum(coeffs, entries);
  const std::size_t slices =
      std::min<std::size_t>(static_cast<std::size_t>(options.partitions),
                            std::max<std::size_t>(entries.size(), 1));
  std::vector<std::future<Complex>> partials;
  partials.reserve(slices);
  for (std::size_t s = 0; s < slices; ++s) {
    const std::size_t first = entries.size() * s / slices;
    const std::size_t last = entries.size() * (s + 1) / slices;
    partials.push_back(std::async(std::launch::async, [&sum, first, last] {
      return sum.slice(first, last);
    }));
  }
  Complex total = 0.0;
  for (auto& partial : partials) total += partial.get();
  return checked_real(total, "Fano quartic trace");
}

}  // namespace fidbound
