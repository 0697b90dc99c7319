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

#include "receptive/config.hpp"

#include "receptive/error.hpp"
#include "receptive/topological.hpp"

#include <fstream>

namespace receptive {

namespace {

template <class T>
T get(const nlohmann::json& doc, const char* key, T fallback, const std::string& field) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(field, "wrong type");
  }
}

Site parse_site(const nlohmann::json& s, const SymbolicSystem& sys,
                const std::string& field) {
  Site out;
  if (s.is_number_integer()) {
    out = Site(0, {s.get<int>()});
  } else if (s.is_array()) {
    out = Site(0, s.get<std::vector<int>>());
  } else if (s.is_object()) {
    out = Site(s.value("layer", 0), s.at("point").get<std::vector<int>>());
  } else {
    throw ConfigError(field, "a site is an integer, an array or {layer, point}");
  }
  if (out.layer < 0 || out.layer >= sys.layer_count() ||
      static_cast<int>(out.point.size()) != sys.layer(out.layer).dim) {
    throw ConfigError(field, "site " + to_string(out) + " does not fit the system");
  }
  for (int c : out.point) {
    if (c < 0) throw ConfigError(field, "site coordinates must be >= 0");
  }
  return out;
}

}  // namespace

void validate_epsilons(const std::vector<double>& eps, const std::string& field) {
  if (eps.empty()) throw ConfigError(field, "at least one epsilon required");
  for (double e : eps) {
    if (!(e > 0.0 && e < 1.0)) throw ConfigError(field, "epsilon must lie in (0, 1)");
    if (is_dyadic(e)) {
      throw ConfigError(field, "epsilon " + std::to_string(e) + " is a dyadic metric value");
    }
  }
}

SiteSet parse_sites(const nlohmann::json& doc, const SymbolicSystem& sys,
                    const std::string& field) {
  try {
    if (!doc.is_array() || doc.empty()) throw ConfigError(field, "non-empty site list required");
    SiteSet out;
    for (const auto& s : doc) out.push_back(parse_site(s, sys, field));
    return normalized(std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(field, e.what());
  }
}

ExperimentConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("", "configuration must be a JSON object");
  ExperimentConfig cfg;
  cfg.name = get<std::string>(doc, "name", cfg.name, "name");
  if (!doc.contains("system")) throw ConfigError("system", "missing");
  cfg.system = SymbolicSystem::from_json(doc.at("system"));
  if (doc.contains("measure")) {
    cfg.measure = MeasureOracle::from_json(doc.at("measure"));
    cfg.measure->check_compatible(cfg.system);
  }
  if (doc.contains("regular_system")) {
    cfg.regular_system = doc.at("regular_system");
    const auto gamma = RegularSystem::from_json(*cfg.regular_system);
    if (gamma.k() != cfg.system.generators()) {
      throw ConfigError("regular_system.k", "must equal the number of generators");
    }
  }
  cfg.partition = doc.contains("partition")
                      ? CoordinatePartition(parse_sites(doc.at("partition"), cfg.system, "partition"))
                      : CoordinatePartition(ball_sites(cfg.system, 0));
  cfg.n_min = get<int>(doc, "n_min", cfg.n_min, "n_min");
  cfg.n_max = get<int>(doc, "n_max", cfg.n_max, "n_max");
  if (cfg.n_max < 1) throw ConfigError("n_max", "must be >= 1");
  if (cfg.n_min < 0 || cfg.n_min > cfg.n_max) throw ConfigError("n_min", "must lie in [0, n_max]");
  cfg.eps_grid = get<std::vector<double>>(doc, "epsilon_grid", cfg.eps_grid, "epsilon_grid");
  validate_epsilons(cfg.eps_grid, "epsilon_grid");
  cfg.lambda_tol = get<double>(doc, "lambda_tol", cfg.lambda_tol, "lambda_tol");
  if (!(cfg.lambda_tol > 0)) throw ConfigError("lambda_tol", "must be > 0");
  cfg.tolerance = get<double>(doc, "tolerance", cfg.tolerance, "tolerance");
  if (!(cfg.tolerance >= 0)) throw ConfigError("tolerance", "must be >= 0");
  if (doc.contains("budgets")) {
    const auto& b = doc.at("budgets");
    cfg.budgets.enumeration = get<std::uint64_t>(b, "enumeration", cfg.budgets.enumeration, "budgets.enumeration");
    cfg.budgets.clique_vertices = get<std::size_t>(b, "clique_vertices", cfg.budgets.clique_vertices, "budgets.clique_vertices");
    cfg.budgets.clique_nodes = get<std::uint64_t>(b, "clique_nodes", cfg.budgets.clique_nodes, "budgets.clique_nodes");
    cfg.budgets.cover_nodes = get<std::uint64_t>(b, "cover_nodes", cfg.budgets.cover_nodes, "budgets.cover_nodes");
  }
  if (doc.contains("seed")) cfg.seed = get<std::uint64_t>(doc, "seed", 0, "seed");
  cfg.output_dir = get<std::string>(doc, "output_dir", cfg.output_dir.string(), "output_dir");
  if (doc.contains("window_length")) {
    cfg.window_length = get<int>(doc, "window_length", 0, "window_length");
    if (*cfg.window_length < 0) throw ConfigError("window_length", "must be >= 0");
  }
  cfg.sample_size = get<std::size_t>(doc, "sample_size", cfg.sample_size, "sample_size");
  if (cfg.sample_size < 1) throw ConfigError("sample_size", "must be >= 1");
  if (doc.contains("dimensional")) {
    const auto& d = doc.at("dimensional");
    auto& dc = cfg.dimensional;
    dc.n_cap = get<int>(d, "n_cap", dc.n_cap, "dimensional.n_cap");
    dc.pesin_depth = get<int>(d, "pesin_depth", dc.pesin_depth, "dimensional.pesin_depth");
    dc.n_scale = get<int>(d, "n_scale", dc.n_scale, "dimensional.n_scale");
    dc.epsilon = get<double>(d, "epsilon", dc.epsilon, "dimensional.epsilon");
    dc.h_n_max = get<int>(d, "h_n_max", dc.h_n_max, "dimensional.h_n_max");
    validate_epsilons({dc.epsilon}, "dimensional.epsilon");
    if (dc.n_cap < 1) throw ConfigError("dimensional.n_cap", "must be >= 1");
    if (dc.pesin_depth < dc.n_scale) throw ConfigError("dimensional.pesin_depth", "must be >= n_scale");
  }
  cfg.dimensional.tol = cfg.tolerance;
  cfg.dimensional.bisection_tol = cfg.lambda_tol;
  cfg.moduli = get<std::vector<int>>(doc, "moduli", cfg.moduli, "moduli");
  cfg.scale_p = get<int>(doc, "scale_p", cfg.scale_p, "scale_p");
  if (cfg.scale_p < 1) throw ConfigError("scale_p", "must be >= 1");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config", std::string("malformed document: ") + e.what());
  }
  return parse_config(doc);
}

RegularSystem regular_system_for(const ExperimentConfig& cfg, int n_needed) {
  if (!cfg.regular_system) return standard_system(cfg.system.generators(), n_needed);
  auto doc = *cfg.regular_system;
  const auto kind = doc.value("kind", std::string());
  // parametric kinds are stretched to the range the experiment needs
  if ((kind == "standard" || kind == "even") && doc.value("n_max", 0) < n_needed) {
    doc["n_max"] = n_needed;
  }
  auto gamma = RegularSystem::from_json(doc);
  if (gamma.n_max() < n_needed) {
    throw ConfigError("regular_system.n_max",
                      "needs n up to " + std::to_string(n_needed) + ", has " +
                          std::to_string(gamma.n_max()));
  }
  return gamma;
}

}  // namespace receptive
