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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fidbound/closed_form.hpp"
#include "fidbound/density_matrix.hpp"
#include "fidbound/fano.hpp"
#include "fidbound/fidelity.hpp"

namespace fidbound {

enum class SweepFamily { Ghz, W, File };
enum class SweepMode { Closed, Dense, Fano, All };

const char* to_string(SweepFamily family);
const char* to_string(SweepMode mode);
SweepFamily parse_family(std::string_view text);
SweepMode parse_mode(std::string_view text);

/// A fixed value ("0.7") or an inclusive grid ("0:1:101"). Both endpoints
/// are emitted exactly.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  static Grid fixed(double value) { return {value, value, 1}; }
  static Grid parse(std::string_view text);
  std::vector<double> values() const;
};

/// Marks the N -> infinity column in an N list.
inline constexpr std::int64_t kInfiniteQubits = -1;

/// Comma-separated qubit counts, or "inf".
std::vector<std::int64_t> parse_n_list(std::string_view text);

struct SweepConfig {
  SweepFamily family = SweepFamily::Ghz;
  std::vector<std::int64_t> n_list{2};
  Grid lambda = Grid::fixed(0.7);
  Grid p = Grid::parse("0:1:101");
  SweepMode mode = SweepMode::Closed;
  /// Source state for SweepFamily::File.
  std::filesystem::path state_path;
  DenseLimit dense_limit{};
  int fano_max_qubits = kFanoQuarticMaxQubits;
  std::uint64_t seed = 20260101;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  /// Throws DomainError / DimensionError for combinations the modes cannot
  /// evaluate ("inf" outside closed mode, N above a cap, closed mode on a file).
  void validate() const;
};

struct SweepRow {
  std::string family;
  std::optional<std::int64_t> n_qubits;  // empty for N -> infinity
  std::optional<double> lambda;          // empty for file states
  double p = 0.0;
  std::optional<TraceQuartet> traces;
  double sub_fidelity = 0.0;
  double super_fidelity = 0.0;
  std::optional<double> fidelity;
  double d_sub = 0.0;
  double d_super = 0.0;
  std::optional<double> epsilon;
  std::string mode;
};

inline constexpr std::string_view kCsvHeader =
    "family,N,lambda,p,tr_rho2,tr_erho2,tr_rho_erho,tr_quartic,E,G,F,d_sub,"
    "d_super,epsilon,mode";

/// Rows in grid order: N outermost, then lambda, then p. Rows are evaluated
/// concurrently. A row that breaks a bound chain, or (mode all) disagrees
/// between routes, throws ConsistencyError carrying the row.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

std::string format_row(const SweepRow& row);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
/// Writes header plus rows; throws Error if the file cannot be written.
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<SweepRow>& rows);

/// The parameter sets behind figures 1..6. Figures with two panel families
/// return two configs; their CSV is the concatenation.
std::vector<SweepConfig> figure_preset(int figure);
std::vector<SweepRow> run_figure(int figure);

/// All measures for (rho, E(rho)) with rho read from `path`.
MeasureReport report_state(const std::filesystem::path& path, double p,
                           DenseLimit limit = {});

struct SelfCheckOptions {
  std::uint64_t seed = 20260101;
  /// Closed-form evaluators under test; replaceable for fault injection.
  std::function<TraceQuartet(std::int64_t, double, double)> ghz = ghz_traces;
  std::function<TraceQuartet(std::int64_t, double, double)> w = w_traces;
};

struct BatteryResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_deviation <= tolerance; }
};

std::vector<BatteryResult> self_check(const SelfCheckOptions& options = {});
/// One line per battery; returns true if all passed.
bool print_self_check(std::ostream& out,
                      const std::vector<BatteryResult>& results);

}  // namespace fidbound
