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

#include "fidbound/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "fidbound/dephasing.hpp"
#include "fidbound/state_io.hpp"

namespace fidbound {

namespace {

constexpr double kRouteAgreement = 1e-10;
constexpr double kFanoAgreement = 1e-9;

double parse_number(std::string_view text, const char* what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(text) +
                     "'");
  }
  return value;
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void append(std::string& line, const std::optional<double>& value) {
  line += ',';
  if (value) line += format_number(*value);
}

ProbeFamily probe_family(SweepFamily family) {
  return family == SweepFamily::W ? ProbeFamily::W : ProbeFamily::Ghz;
}

TraceQuartet dense_traces(const DensityMatrix& rho, const DensityMatrix& out) {
  return {purity(rho), purity(out), relative_purity(rho, out),
          quartic_trace(rho, out)};
}

TraceQuartet fano_traces(const DensityMatrix& rho, double p, int max_qubits) {
  const FanoCoefficients coeffs = decompose(rho);
  QuarticOptions options;
  options.max_qubits = max_qubits;
  return {fano_purity(coeffs), fano_dephased_purity(coeffs, p),
          fano_relative_purity(coeffs, p), fano_quartic(coeffs, p, options)};
}

double trace_gap(const TraceQuartet& a, const TraceQuartet& b) {
  return std::max({std::abs(a.purity_in - b.purity_in),
                   std::abs(a.purity_out - b.purity_out),
                   std::abs(a.relative - b.relative),
                   std::abs(a.quartic - b.quartic)});
}

[[noreturn]] void fail_row(const SweepRow& row, const std::string& reason) {
  throw ConsistencyError(reason + "\n" + std::string(kCsvHeader) + "\n" +
                         format_row(row));
}

void check_row(const SweepRow& row) {
  MeasureReport report;
  report.sub_fidelity = row.sub_fidelity;
  report.super_fidelity = row.super_fidelity;
  report.fidelity = row.fidelity;
  report.d_sub = row.d_sub;
  report.d_super = row.d_super;
  report.epsilon = row.epsilon;
  try {
    check_bound_chain(report);
  } catch (const ConsistencyError& e) {
    fail_row(row, e.what());
  }
}

void fill_from_traces(SweepRow& row, const TraceQuartet& traces,
                      Eigen::Index dim) {
  const double resolution = trace_resolution(dim);
  row.traces = traces;
  row.sub_fidelity =
      sub_fidelity_from_traces(traces.relative, traces.quartic, resolution);
  row.super_fidelity = super_fidelity_from_traces(
      traces.relative, traces.purity_in, traces.purity_out, resolution);
  row.d_sub = distance_from_fidelity(row.sub_fidelity, resolution);
  row.d_super = distance_from_fidelity(row.super_fidelity, resolution);
}

struct Task {
  std::int64_t n_qubits;
  std::optional<double> lambda;
  double p;
};

class RowEvaluator {
 public:
  RowEvaluator(const SweepConfig& config,
               const std::optional<DensityMatrix>& file_state)
      : config_(config), file_state_(file_state) {}

  SweepRow operator()(const Task& task) const {
    SweepRow row;
    row.family = to_string(config_.family);
    row.mode = to_string(config_.mode);
    row.lambda = task.lambda;
    row.p = task.p;
    if (task.n_qubits != kInfiniteQubits) row.n_qubits = task.n_qubits;

    if (task.n_qubits == kInfiniteQubits) {
      infinite(row, task);
    } else if (config_.mode == SweepMode::Closed) {
      closed(row, task);
    } else {
      const DensityMatrix rho = state(task);
      const DensityMatrix out = apply_fast(DephasingChannel(task.p), rho);
      switch (config_.mode) {
        case SweepMode::Dense:
          dense(row, rho, out);
          break;
        case SweepMode::Fano:
          fano(row, rho, task);
          break;
        default:
          all(row, rho, out, task);
          break;
      }
    }
    check_row(row);
    return row;
  }

 private:
  ProbeStateSpec spec(const Task& task) const {
    return {probe_family(config_.family), task.n_qubits, *task.lambda};
  }

  DensityMatrix state(const Task& task) const {
    if (file_state_) return *file_state_;
    return make_mixed(spec(task), config_.dense_limit);
  }

  void infinite(SweepRow& row, const Task& task) const {
    const DistancePair d = probe_asymptotics(probe_family(config_.family),
                                             *task.lambda, task.p);
    row.d_sub = d.d_sub;
    row.d_super = d.d_super;
    row.sub_fidelity = 1.0 - d.d_sub * d.d_sub;
    row.super_fidelity = 1.0 - d.d_super * d.d_super;
  }

  void closed(SweepRow& row, const Task& task) const {
    const ProbeEvaluation eval = evaluate_probe(spec(task), task.p);
    row.traces = eval.traces;
    row.sub_fidelity = eval.sub_fidelity;
    row.super_fidelity = eval.super_fidelity;
    row.d_sub = eval.distances.d_sub;
    row.d_super = eval.distances.d_super;
    row.fidelity = eval.fidelity;
    row.epsilon = eval.epsilon;
  }

  void dense(SweepRow& row, const DensityMatrix& rho,
             const DensityMatrix& out) const {
    const MeasureReport report = measure_report(rho, out);
    row.traces = dense_traces(rho, out);
    row.sub_fidelity = report.sub_fidelity;
    row.super_fidelity = report.super_fidelity;
    row.fidelity = report.fidelity;
    row.d_sub = report.d_sub;
    row.d_super = report.d_super;
    row.epsilon = report.epsilon;
  }

  void fano(SweepRow& row, const DensityMatrix& rho, const Task& task) const {
    const TraceQuartet traces =
        fano_traces(rho, task.p, config_.fano_max_qubits);
    fill_from_traces(row, traces, rho.dim());
    // A pure probe makes F = Tr(rho E(rho)).
    if (!file_state_ && *task.lambda == 1.0) {
      row.fidelity = clamp_unit(traces.relative, "fidelity");
      row.epsilon =
          distance_from_fidelity(*row.fidelity, trace_resolution(rho.dim()));
    }
  }

  void all(SweepRow& row, const DensityMatrix& rho, const DensityMatrix& out,
           const Task& task) const {
    const MeasureReport report = measure_report(rho, out);
    const TraceQuartet reference = dense_traces(rho, out);
    if (file_state_) {
      dense(row, rho, out);
    } else {
      closed(row, task);
      const double gap = trace_gap(*row.traces, reference);
      if (gap > kRouteAgreement) {
        fail_row(row, "closed form and dense traces differ by " +
                          format_number(gap));
      }
      row.fidelity = report.fidelity;
      row.epsilon = report.epsilon;
    }
    if (rho.n_qubits() <= config_.fano_max_qubits) {
      const double gap = trace_gap(
          fano_traces(rho, task.p, config_.fano_max_qubits), reference);
      if (gap > kFanoAgreement) {
        fail_row(row, "Fano and dense traces differ by " + format_number(gap));
      }
    }
  }

  const SweepConfig& config_;
  const std::optional<DensityMatrix>& file_state_;
};

}  // namespace

const char* to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::Ghz: return "ghz";
    case SweepFamily::W: return "w";
    case SweepFamily::File: return "file";
  }
  return "?";
}

const char* to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Closed: return "closed";
    case SweepMode::Dense: return "dense";
    case SweepMode::Fano: return "fano";
    case SweepMode::All: return "all";
  }
  return "?";
}

SweepFamily parse_family(std::string_view text) {
  if (text == "ghz") return SweepFamily::Ghz;
  if (text == "w") return SweepFamily::W;
  if (text == "file") return SweepFamily::File;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

SweepMode parse_mode(std::string_view text) {
  if (text == "closed") return SweepMode::Closed;
  if (text == "dense") return SweepMode::Dense;
  if (text == "fano") return SweepMode::Fano;
  if (text == "all") return SweepMode::All;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

Grid Grid::parse(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    return fixed(parse_number(text, "grid value"));
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw ParseError("grid must be 'v' or 'start:stop:count', got '" +
                     std::string(text) + "'");
  }
  Grid grid;
  grid.start = parse_number(text.substr(0, first), "grid start");
  grid.stop = parse_number(text.substr(first + 1, second - first - 1),
                           "grid stop");
  const std::string_view count = text.substr(second + 1);
  const auto [end, ec] =
      std::from_chars(count.data(), count.data() + count.size(), grid.count);
  if (ec != std::errc{} || end != count.data() + count.size() ||
      grid.count < 1) {
    throw ParseError("bad grid count '" + std::string(count) + "'");
  }
  if (grid.count == 1 && grid.start != grid.stop) {
    throw ParseError("a one-point grid needs start == stop");
  }
  return grid;
}

std::vector<double> Grid::values() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i == 0) {
      out[i] = start;
    } else if (i == count - 1) {
      out[i] = stop;
    } else {
      out[i] = start + (stop - start) * i / (count - 1);
    }
  }
  return out;
}

std::vector<std::int64_t> parse_n_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    if (item == "inf") {
      out.push_back(kInfiniteQubits);
    } else {
      std::int64_t n = 0;
      const auto [end, ec] =
          std::from_chars(item.data(), item.data() + item.size(), n);
      if (ec != std::errc{} || end != item.data() + item.size() || n < 1) {
        throw ParseError("bad qubit count '" + std::string(item) + "'");
      }
      out.push_back(n);
    }
    pos = comma + 1;
  }
  return out;
}

void SweepConfig::validate() const {
  auto check_unit = [](const Grid& grid, const char* what) {
    for (double v : {grid.start, grid.stop}) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1], got " +
                          format_number(v));
      }
    }
  };
  check_unit(lambda, "lambda");
  check_unit(p, "p");
  if (fano_max_qubits < 1 || fano_max_qubits > kFanoMaxQubits) {
    throw DomainError("Fano cap must lie in [1, " +
                      std::to_string(kFanoMaxQubits) + "]");
  }
  if (family == SweepFamily::File) {
    if (state_path.empty()) throw DomainError("family file needs a state path");
    if (mode == SweepMode::Closed) {
      throw DomainError("closed mode needs a ghz or w family");
    }
    return;
  }
  if (n_list.empty()) throw DomainError("empty qubit list");
  for (std::int64_t n : n_list) {
    if (n == kInfiniteQubits) {
      if (mode != SweepMode::Closed) {
        throw DomainError("N = inf is only available in closed mode");
      }
      continue;
    }
    if (n < 1) throw DomainError("qubit counts must be positive");
    if (mode == SweepMode::Dense || mode == SweepMode::All) {
      dense_limit.check(static_cast<int>(std::min<std::int64_t>(n, 1 << 20)));
    }
    if (mode == SweepMode::Fano && n > fano_max_qubits) {
      throw DimensionError("fano mode is capped at " +
                           std::to_string(fano_max_qubits) +
                           " qubits, requested " + std::to_string(n));
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();

  std::optional<DensityMatrix> file_state;
  std::vector<Task> tasks;
  const std::vector<double> ps = config.p.values();
  if (config.family == SweepFamily::File) {
    file_state = read_state_file(config.state_path, config.dense_limit);
    if (config.mode == SweepMode::Fano &&
        file_state->n_qubits() > config.fano_max_qubits) {
      throw DimensionError("fano mode is capped at " +
                           std::to_string(config.fano_max_qubits) + " qubits");
    }
    for (double p : ps) tasks.push_back({file_state->n_qubits(), {}, p});
  } else {
    const std::vector<double> lambdas = config.lambda.values();
    for (std::int64_t n : config.n_list) {
      for (double lambda : lambdas) {
        for (double p : ps) tasks.push_back({n, lambda, p});
      }
    }
  }

  const RowEvaluator evaluate(config, file_state);
  std::vector<std::optional<SweepRow>> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = evaluate(tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  std::vector<SweepRow> out;
  out.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*rows[i]));
  }
  return out;
}

std::string format_row(const SweepRow& row) {
  std::string line = row.family;
  line += ',';
  line += row.n_qubits ? std::to_string(*row.n_qubits) : std::string("inf");
  append(line, row.lambda);
  append(line, row.p);
  if (row.traces) {
    append(line, row.traces->purity_in);
    append(line, row.traces->purity_out);
    append(line, row.traces->relative);
    append(line, row.traces->quartic);
  } else {
    line += ",,,,";
  }
  append(line, row.sub_fidelity);
  append(line, row.super_fidelity);
  append(line, row.fidelity);
  append(line, row.d_sub);
  append(line, row.d_super);
  append(line, row.epsilon);
  line += ',';
  line += row.mode;
  return line;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& row : rows) out << format_row(row) << '\n';
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<SweepRow>& rows) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open '" + path.string() + "' for writing");
  write_csv(file, rows);
  file.flush();
  if (!file) throw Error("failed writing '" + path.string() + "'");
}

std::vector<SweepConfig> figure_preset(int figure) {
  const Grid unit = Grid::parse("0:1:101");
  SweepConfig base;
  std::vector<SweepConfig> out;
  switch (figure) {
    case 1:
    case 4: {
      base.family = figure == 1 ? SweepFamily::Ghz : SweepFamily::W;
      base.n_list = {2, 4, 6, 8};
      base.mode = SweepMode::All;
      SweepConfig vs_p = base;
      vs_p.lambda = Grid::fixed(0.7);
      vs_p.p = unit;
      SweepConfig vs_lambda = base;
      vs_lambda.lambda = unit;
      vs_lambda.p = Grid::fixed(0.2);
      out = {vs_p, vs_lambda};
      break;
    }
    case 2:
      base.family = SweepFamily::Ghz;
      base.n_list = {1, 2, 4, 8, 16, 32, 64, 128};
      base.lambda = Grid::fixed(1.0);
      base.p = unit;
      out = {base};
      break;
    case 5:
      base.family = SweepFamily::W;
      base.n_list = {2, 10, 100, 10000};
      base.lambda = Grid::fixed(1.0);
      base.p = unit;
      out = {base};
      break;
    case 3:
      base.family = SweepFamily::Ghz;
      base.n_list = {kInfiniteQubits};
      base.lambda = unit;
      base.p = Grid::fixed(0.2);
      out = {base};
      break;
    case 6: {
      base.family = SweepFamily::W;
      base.n_list = {kInfiniteQubits};
      SweepConfig vs_lambda = base;
      vs_lambda.lambda = unit;
      vs_lambda.p = Grid::fixed(0.2);
      SweepConfig vs_p = base;
      vs_p.lambda = Grid::fixed(0.7);
      vs_p.p = unit;
      out = {vs_lambda, vs_p};
      break;
    }
    default:
      throw DomainError("figures are numbered 1 to 6, got " +
                        std::to_string(figure));
  }
  return out;
}

std::vector<SweepRow> run_figure(int figure) {
  std::vector<SweepRow> out;
  for (const SweepConfig& config : figure_preset(figure)) {
    std::vector<SweepRow> rows = run_sweep(config);
    out.insert(out.end(), std::make_move_iterator(rows.begin()),
               std::make_move_iterator(rows.end()));
  }
  return out;
}

MeasureReport report_state(const std::filesystem::path& path, double p,
                           DenseLimit limit) {
  const DensityMatrix rho = read_state_file(path, limit);
  return measure_report(rho, apply_fast(DephasingChannel(p), rho));
}

}  // namespace fidbound
