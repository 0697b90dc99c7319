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

#pragma once

// Experiment runner: dispatches configured computations, records checks
// with the origin of every expected value and writes CSV / JSON tables.

#include "receptive/config.hpp"
#include "receptive/sequence.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace receptive {

/// Where an expected value comes from: a closed form stated in the
/// literature, an independent oracle computation, or the definitions.
enum class Origin { published_closed_form, independent_oracle, definitional };

std::string to_string(Origin o);

enum ExitStatus : int {
  kExitPass = 0,
  kExitCheckFailure = 1,
  kExitConfigError = 2,
  kExitBudget = 3,
};

struct CheckRecord {
  std::string family;
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Origin origin = Origin::definitional;
};

struct SuiteResult {
  std::vector<CheckRecord> checks;

  /// |observed - expected| <= tolerance.
  void expect_near(const std::string& family, const std::string& name,
                   double expected, double observed, double tolerance, Origin origin);
  /// observed <= bound + tolerance.
  void expect_at_most(const std::string& family, const std::string& name,
                      double observed, double bound, double tolerance, Origin origin);
  void expect_true(const std::string& family, const std::string& name,
                   bool observed, Origin origin);
  void merge(const SuiteResult& other);

  bool passed() const;
  int exit_status() const { return passed() ? kExitPass : kExitCheckFailure; }
  nlohmann::json to_json() const;
  void write_csv(std::ostream& out) const;
  /// One line per check: PASS/FAIL, family, name, observed vs expected.
  void print(std::ostream& out) const;
};

/// A named output table, written as CSV or as part of one JSON document.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

struct RunOptions {
  std::string command;
  std::optional<int> n_max;
  std::optional<std::vector<double>> eps_grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::string filter;
  std::string format = "csv";
  std::string units = "nats";
  std::optional<std::filesystem::path> output_dir;
};

/// Conversion factor from nats: 1 or 1 / log 2. ConfigError otherwise.
double unit_scale(const std::string& units);

/// Command-line overrides on top of a configuration document.
void apply_overrides(ExperimentConfig& cfg, const RunOptions& opts);

/// Runs one of: metric, topo, cover, bowen, pesin, local, verify,
/// plot-data. Writes its tables under the output directory and a summary
/// to `log`. ConfigError and BudgetError propagate to the caller.
SuiteResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts,
                           std::ostream& log);

/// Families of the built-in reproduction battery.
std::vector<std::string> reference_families();

/// Runs every family whose name contains `filter` (all when empty).
SuiteResult run_reference_suite(const std::string& filter, std::ostream& log);

/// Long-format CSV (series, n, raw, normalized) of sequences sharing an
/// n-range, headed by the system hash of each series. Throws DomainError
/// on an empty list or mismatched ranges, before creating the file.
void emit_plot_data(const std::vector<EntropySequence>& sequences,
                    const std::vector<std::string>& labels,
                    const std::filesystem::path& path, double scale = 1.0);

/// Writes tables as <dir>/<stem>_<table>.csv, or <dir>/<stem>.json with the
/// tables and checks. Lines starting with '#' carry `meta`.
void write_tables(const std::vector<Table>& tables, const SuiteResult& checks,
                  const nlohmann::json& meta, const std::filesystem::path& dir,
                  const std::string& stem, const std::string& format);

}  // namespace receptive
