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

#include "fidbound/state_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace fidbound {

namespace {

bool parse_double(std::string_view text, double& value) {
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool next_content_line(std::istream& in, std::string& line,
                       std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

DensityMatrix parse_state(std::istream& in, DenseLimit limit) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError("empty state file");
  }
  int n_qubits = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n_qubits) || (header >> extra)) {
      fail(line_no, "expected a single integer qubit count");
    }
  }
  if (n_qubits < 1) fail(line_no, "qubit count must be positive");
  limit.check(n_qubits);

  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Matrix entries(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    if (!next_content_line(in, line, line_no)) {
      fail(line_no, "expected " + std::to_string(dim) + " matrix rows, got " +
                        std::to_string(row));
    }
    std::istringstream tokens(line);
    std::string token;
    Eigen::Index col = 0;
    while (tokens >> token) {
      if (col >= dim) {
        fail(line_no, "row " + std::to_string(row) + " has more than " +
                          std::to_string(dim) + " entries");
      }
      const auto comma = token.find(',');
      double re = 0.0;
      double im = 0.0;
      if (comma == std::string::npos ||
          !parse_double(std::string_view(token).substr(0, comma), re) ||
          !parse_double(std::string_view(token).substr(comma + 1), im)) {
        fail(line_no, "entry (" + std::to_string(row) + "," +
                          std::to_string(col) + ") is not a re,im pair: '" +
                          token + "'");
      }
      entries(row, col) = Complex(re, im);
      ++col;
    }
    if (col != dim) {
      fail(line_no, "row " + std::to_string(row) + " has " +
                        std::to_string(col) + " entries, expected " +
                        std::to_string(dim));
    }
  }
  if (next_content_line(in, line, line_no)) {
    fail(line_no, "trailing content after " + std::to_string(dim) + " rows");
  }
  return DensityMatrix::from_matrix(std::move(entries), Validation::Full,
                                    limit);
}

DensityMatrix read_state_file(const std::filesystem::path& path,
                              DenseLimit limit) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path.string());
  return parse_state(in, limit);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  std::ostringstream buffer;
  buffer.precision(17);
  buffer << rho.n_qubits() << '\n';
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
      if (j) buffer << ' ';
      buffer << rho(i, j).real() << ',' << rho(i, j).imag();
    }
    buffer << '\n';
  }
  out << buffer.str();
}

}  // namespace fidbound
