/*
 * Copyright (c) 2026, The receptive-entropy authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: one subcommand per computation, plus the
// built-in reference battery.

#include "receptive/config.hpp"
#include "receptive/error.hpp"
#include "receptive/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace receptive;

namespace {

struct Flags {
  std::string config;
  std::optional<int> n_max;
  std::vector<double> eps_grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::string filter;
  std::string format = "csv";
  std::string units = "nats";
  std::string output_dir;
};

void add_common(CLI::App* sub, Flags& f, bool needs_config) {
  auto* c = sub->add_option("--config", f.config, "experiment document (JSON)");
  if (needs_config) c->required()->check(CLI::ExistingFile);
  sub->add_option("--n-max", f.n_max, "largest n");
  sub->add_option("--epsilon-grid", f.eps_grid, "comma-separated epsilons")->delimiter(',');
  sub->add_option("--seed", f.seed, "RNG seed for sampling");
  sub->add_option("--budget", f.budget, "enumeration / search node budget");
  sub->add_option("--filter", f.filter, "reference families to run (substring)");
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--units", f.units, "entropy units")->check(CLI::IsMember({"nats", "bits"}));
  sub->add_option("--output-dir", f.output_dir, "directory for output files");
}

RunOptions to_options(const std::string& command, const Flags& f) {
  RunOptions o;
  o.command = command;
  o.n_max = f.n_max;
  if (!f.eps_grid.empty()) o.eps_grid = f.eps_grid;
  o.seed = f.seed;
  o.budget = f.budget;
  o.filter = f.filter;
  o.format = f.format;
  o.units = f.units;
  if (!f.output_dir.empty()) o.output_dir = f.output_dir;
  return o;
}

int run_suite(const Flags& f) {
  const auto result = run_reference_suite(f.filter, std::cerr);
  if (result.checks.empty()) {
    std::cerr << "no family matches '" << f.filter << "'\n";
    return kExitConfigError;
  }
  result.print(std::cout);
  if (!f.output_dir.empty()) {
    write_tables({}, result, {{"command", "suite"}, {"filter", f.filter}}, f.output_dir, "suite",
                 f.format);
  }
  std::size_t failed = 0;
  for (const auto& c : result.checks) failed += c.pass ? 0 : 1;
  std::cout << result.checks.size() - failed << '/' << result.checks.size() << " checks passed\n";
  return result.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Receptive entropy experiments"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::string> commands{"metric", "topo", "cover", "bowen", "pesin",
                                          "local", "verify", "plot-data"};
  for (const auto& name : commands) add_common(app.add_subcommand(name, name + " experiment"), flags, true);
  auto* suite = app.add_subcommand("suite", "built-in reference battery");
  add_common(suite, flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    if (command == "suite") return run_suite(flags);
    const auto cfg = load_config(flags.config);
    const auto result = run_experiment(cfg, to_options(command, flags), std::cerr);
    result.print(std::cout);
    return result.exit_status();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}
