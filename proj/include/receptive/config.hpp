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

// Experiment configuration documents (JSON).

#include "receptive/dimensional.hpp"
#include "receptive/lattice.hpp"
#include "receptive/symbolic.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace receptive {

struct Budgets {
  std::uint64_t enumeration = kDefaultEnumerationBudget;
  std::size_t clique_vertices = 4096;
  std::uint64_t clique_nodes = std::uint64_t{1} << 22;
  std::uint64_t cover_nodes = std::uint64_t{1} << 20;
};

struct ExperimentConfig {
  std::string name = "experiment";
  SymbolicSystem system = full_shift(2);
  std::optional<MeasureOracle> measure;
  std::optional<nlohmann::json> regular_system;  // standard [0,n]^k if absent
  CoordinatePartition partition;                 // origin of every layer
  int n_min = 0;
  int n_max = 20;
  std::vector<double> eps_grid{0.3, 0.15};
  double lambda_tol = 1e-6;
  double tolerance = 0.02;
  Budgets budgets;
  std::optional<std::uint64_t> seed;
  std::filesystem::path output_dir = ".";
  std::optional<int> window_length;  // truncation for brute-force counts
  std::size_t sample_size = 200;
  DimensionalConfig dimensional;
  std::vector<int> moduli;
  int scale_p = 2;
};

/// Parses and validates a configuration document. Errors are ConfigError
/// naming the offending field.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Sites from JSON: 3, [0, 1] (layer 0), or {"layer": 1, "point": [0]}.
SiteSet parse_sites(const nlohmann::json& doc, const SymbolicSystem& sys,
                    const std::string& field);

/// The configured regular system, or [0,n]^k, checked to reach n_needed.
RegularSystem regular_system_for(const ExperimentConfig& cfg, int n_needed);

/// Rejects epsilons outside (0, 1) or on a dyadic value.
void validate_epsilons(const std::vector<double>& eps, const std::string& field);

}  // namespace receptive
