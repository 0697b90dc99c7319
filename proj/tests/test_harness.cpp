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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "receptive/config.hpp"
#include "receptive/error.hpp"
#include "receptive/harness.hpp"
#include "receptive/metric_entropy.hpp"
#include "receptive/topological.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

using namespace receptive;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / "receptive_harness_test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), dir).string()] = slurp(e.path());
  }
  return out;
}

std::string config_error_field(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<none>";
}

json base_doc() {
  return json{{"name", "t"},
              {"system", {{"kind", "shift"}, {"alphabet", 2}}},
              {"measure", {{"kind", "bernoulli"}, {"p", {0.5, 0.5}}}},
              {"n_max", 6}};
}

fs::path corpus_file(const std::string& name) {
  return fs::path(RECEPTIVE_SOURCE_DIR) / "corpus" / (name + ".json");
}

}  // namespace

TEST_CASE("configuration errors name the field") {
  auto doc = base_doc();
  CHECK(config_error_field(doc) == "<none>");

  doc["measure"]["p"] = {0.5, 0.6};
  CHECK(config_error_field(doc) == "measure.p");

  doc = base_doc();
  doc.erase("system");
  CHECK(config_error_field(doc) == "system");

  doc = base_doc();
  doc["n_max"] = 0;
  CHECK(config_error_field(doc) == "n_max");

  doc = base_doc();
  doc["epsilon_grid"] = {0.3, 0.25};
  CHECK(config_error_field(doc) == "epsilon_grid");

  doc = base_doc();
  doc["epsilon_grid"] = {1.5};
  CHECK(config_error_field(doc) == "epsilon_grid");

  doc = base_doc();
  doc["n_max"] = "ten";
  CHECK(config_error_field(doc) == "n_max");

  CHECK(config_error_field(json::array()) == "");
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
  CHECK_THROWS_AS(validate_epsilons({}, "e"), ConfigError);
  CHECK_NOTHROW(validate_epsilons({0.3, 0.1}, "e"));
}

TEST_CASE("corpus configurations parse") {
  for (const auto& e : fs::directory_iterator(fs::path(RECEPTIVE_SOURCE_DIR) / "corpus")) {
    if (e.path().stem() == "malformed_measure") {
      CHECK_THROWS_AS(load_config(e.path()), ConfigError);
    } else {
      CHECK_NOTHROW(load_config(e.path()));
    }
  }
}

TEST_CASE("exit statuses and units") {
  SuiteResult r;
  CHECK(r.passed());
  r.expect_near("f", "a", 1.0, 1.0 + 1e-9, 1e-6, Origin::independent_oracle);
  r.expect_at_most("f", "b", 0.5, 0.4, 0.2, Origin::definitional);
  r.expect_true("f", "c", true, Origin::published_closed_form);
  CHECK(r.exit_status() == kExitPass);
  SuiteResult bad;
  bad.expect_near("f", "d", 1.0, 2.0, 0.5, Origin::independent_oracle);
  r.merge(bad);
  CHECK(r.checks.size() == 4);
  CHECK(r.exit_status() == kExitCheckFailure);

  std::ostringstream out;
  r.print(out);
  CHECK(out.str().find("FAIL f / d") != std::string::npos);
  CHECK(out.str().find("PASS f / a") != std::string::npos);
  CHECK(r.to_json().size() == 4);
  CHECK(r.to_json()[0]["origin"] == "independent_oracle");

  CHECK(unit_scale("nats") == 1.0);
  CHECK(unit_scale("bits") == 1.0 / std::log(2.0));
  CHECK_THROWS_AS(unit_scale("hartleys"), ConfigError);
  CHECK(int{kExitConfigError} == 2);
  CHECK(int{kExitBudget} == 3);
}

TEST_CASE("overrides") {
  auto cfg = parse_config(base_doc());
  RunOptions o;
  o.n_max = 9;
  o.eps_grid = std::vector<double>{0.2};
  o.seed = 4;
  o.budget = 1000;
  apply_overrides(cfg, o);
  CHECK(cfg.n_max == 9);
  CHECK(cfg.eps_grid == std::vector<double>{0.2});
  CHECK(cfg.seed == 4u);
  CHECK(cfg.budgets.enumeration == 1000);
  o.eps_grid = std::vector<double>{0.5};
  CHECK_THROWS_AS(apply_overrides(cfg, o), ConfigError);
}

TEST_CASE("plot data") {
  const auto dir = scratch("plot");
  CHECK_THROWS_AS(emit_plot_data({}, {}, dir / "empty.csv"), DomainError);
  CHECK_FALSE(fs::exists(dir / "empty.csv"));

  const auto g = standard_system(1, 10);
  const auto a = separated_entropy_sequence(full_shift(2), g, 0.3, 10);
  const auto b = separated_entropy_sequence(full_shift(3), g, 0.3, 10);
  const auto c = separated_entropy_sequence(full_shift(3), g, 0.3, 8);
  CHECK_THROWS_AS(emit_plot_data({a, c}, {"a", "c"}, dir / "bad.csv"), DomainError);
  CHECK_THROWS_AS(emit_plot_data({a, b}, {"a"}, dir / "bad.csv"), DomainError);
  CHECK_FALSE(fs::exists(dir / "bad.csv"));

  emit_plot_data({a, b}, {"two", "three"}, dir / "plot.csv");
  const auto text = slurp(dir / "plot.csv");
  CHECK(text.find("# series=two system=" + full_shift(2).hash()) != std::string::npos);
  CHECK(text.find("# series=three system=" + full_shift(3).hash()) != std::string::npos);
  CHECK(text.find("series,n,raw,normalized\n") != std::string::npos);
  CHECK(text.find("\nthree,10,") != std::string::npos);
}

TEST_CASE("tables in both formats") {
  const auto dir = scratch("tables");
  Table t{"values", {"n", "value"}, {{1, 0.5}, {2, 0.25}}};
  SuiteResult checks;
  checks.expect_true("x", "y", true, Origin::definitional);
  const json meta{{"experiment", "demo"}};
  write_tables({t}, checks, meta, dir, "demo", "csv");
  const auto csv = slurp(dir / "demo_values.csv");
  CHECK(csv.find("# experiment=demo") == 0);
  CHECK(csv.find("n,value\n1,0.5\n2,0.25\n") != std::string::npos);
  CHECK(fs::exists(dir / "demo_checks.csv"));

  write_tables({t}, checks, meta, dir, "demo", "json");
  const auto doc = json::parse(slurp(dir / "demo.json"));
  CHECK(doc["meta"]["experiment"] == "demo");
  CHECK(doc["tables"]["values"]["rows"].size() == 2);
  CHECK(doc["checks"].size() == 1);
  CHECK_THROWS_AS(write_tables({t}, checks, meta, dir, "demo", "xml"), ConfigError);
}

TEST_CASE("experiments on corpus configurations") {
  std::ostringstream log;
  auto cfg = load_config(corpus_file("trivial"));
  cfg.output_dir = scratch("trivial");
  for (const char* cmd : {"metric", "topo", "bowen", "pesin", "local"}) {
    RunOptions o;
    o.command = cmd;
    const auto r = run_experiment(cfg, o, log);
    CHECK_MESSAGE(r.passed(), cmd);
  }
  const auto first = snapshot(cfg.output_dir);
  CHECK_FALSE(first.empty());
  for (const char* cmd : {"metric", "topo", "bowen", "pesin", "local"}) {
    RunOptions o;
    o.command = cmd;
    run_experiment(cfg, o, log);
  }
  CHECK(snapshot(cfg.output_dir) == first);

  auto diag = load_config(corpus_file("example_diagonal"));
  diag.output_dir = scratch("diag");
  RunOptions o;
  o.command = "metric";
  CHECK(run_experiment(diag, o, log).passed());
  o.units = "bits";
  o.output_dir = scratch("diag_bits");
  CHECK(run_experiment(diag, o, log).passed());
  CHECK(snapshot(diag.output_dir) != snapshot(*o.output_dir));

  RunOptions bad;
  bad.command = "nonsense";
  CHECK_THROWS_AS(run_experiment(diag, bad, log), ConfigError);
  bad.command = "local";
  CHECK_THROWS_AS(run_experiment(diag, bad, log), ConfigError);  // no seed
  bad.command = "metric";
  bad.budget = 4;
  bad.n_max = 3;
  auto shift = load_config(corpus_file("full_shift_counts"));
  shift.output_dir = scratch("budget");
  bad.command = "topo";
  CHECK_THROWS_AS(run_experiment(shift, bad, log), BudgetError);
}

TEST_CASE("reference families and filters") {
  const auto fams = reference_families();
  CHECK(fams.size() == 12);
  CHECK(std::find(fams.begin(), fams.end(), "lemma_counts") != fams.end());
  std::ostringstream log;
  const auto r = run_reference_suite("lemma_counts", log);
  CHECK_FALSE(r.checks.empty());
  CHECK(r.passed());
  for (const auto& c : r.checks) CHECK(c.family == "lemma_counts");
  CHECK(run_reference_suite("no_such_family", log).checks.empty());
}
