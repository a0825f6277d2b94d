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

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <string>

#include "fidbound/errors.hpp"
#include "fidbound/fidelity.hpp"
#include "fidbound/sweep.hpp"

namespace {

void emit(const std::vector<fidbound::SweepRow>& rows, const std::string& out) {
  if (out.empty() || out == "-") {
    fidbound::write_csv(std::cout, rows);
  } else {
    fidbound::write_csv_file(out, rows);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub- and super-fidelity bounds for dephased probe states"};
  app.require_subcommand(1);

  std::string family = "ghz", n_list = "2", lambda = "0.7", p_grid = "0:1:101",
              mode = "closed", out = "-", state;
  std::uint64_t seed = 20260101;
  int dense_limit = fidbound::kDefaultDenseLimit;
  unsigned threads = 0;

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sweep->add_option("--family", family, "ghz, w or file")
      ->check(CLI::IsMember({"ghz", "w", "file"}));
  sweep->add_option("--n", n_list, "Comma-separated qubit counts, or inf");
  sweep->add_option("--lambda", lambda, "Mixing: v or start:stop:count");
  sweep->add_option("--p", p_grid, "Dephasing: v or start:stop:count");
  sweep->add_option("--mode", mode, "closed, dense, fano or all")
      ->check(CLI::IsMember({"closed", "dense", "fano", "all"}));
  sweep->add_option("--out", out, "Output CSV path (- for stdout)");
  sweep->add_option("--seed", seed, "Random seed");
  sweep->add_option("--dense-limit", dense_limit, "Largest dense N");
  sweep->add_option("--state", state, "State file for --family file");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string report_path;
  double report_p = 0.0;
  auto* report = app.add_subcommand("report", "All measures for rho and E(rho)");
  report->add_option("state", report_path, "State file")->required();
  report->add_option("--p", report_p, "Dephasing probability")->required();
  report->add_option("--dense-limit", dense_limit, "Largest dense N");

  auto* check = app.add_subcommand("self-check", "Run the oracle batteries");
  check->add_option("--seed", seed, "Seed for the random-state batteries");

  std::vector<CLI::App*> figures;
  for (int figure = 1; figure <= 6; ++figure) {
    auto* sub = app.add_subcommand("fig" + std::to_string(figure),
                                   "CSV data behind figure " +
                                       std::to_string(figure));
    sub->add_option("--out", out, "Output CSV path (- for stdout)");
    figures.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      fidbound::SweepConfig config;
      config.family = fidbound::parse_family(family);
      config.n_list = fidbound::parse_n_list(n_list);
      config.lambda = fidbound::Grid::parse(lambda);
      config.p = fidbound::Grid::parse(p_grid);
      config.mode = fidbound::parse_mode(mode);
      config.state_path = state;
      config.dense_limit = fidbound::DenseLimit::of(dense_limit);
      config.seed = seed;
      config.threads = threads;
      emit(fidbound::run_sweep(config), out);
      return 0;
    }
    if (*report) {
      const auto result = fidbound::report_state(
          report_path, report_p, fidbound::DenseLimit::of(dense_limit));
      std::cout << fidbound::describe(result) << '\n';
      return 0;
    }
    if (*check) {
      fidbound::SelfCheckOptions options;
      options.seed = seed;
      return fidbound::print_self_check(std::cout,
                                        fidbound::self_check(options))
                 ? 0
                 : 1;
    }
    for (int figure = 1; figure <= 6; ++figure) {
      if (*figures[figure - 1]) {
        emit(fidbound::run_figure(figure), out);
        return 0;
      }
    }
  } catch (const fidbound::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
