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

#include "receptive/harness.hpp"

#include "receptive/dimensional.hpp"
#include "receptive/error.hpp"
#include "receptive/local_entropy.hpp"
#include "receptive/metric_entropy.hpp"
#include "receptive/numeric.hpp"
#include "receptive/topological.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

namespace receptive {

std::string to_string(Origin o) {
  switch (o) {
    case Origin::published_closed_form: return "published_closed_form";
    case Origin::independent_oracle: return "independent_oracle";
    case Origin::definitional: return "definitional";
  }
  return "?";
}

// --- checks ----------------------------------------------------------------

void SuiteResult::expect_near(const std::string& family, const std::string& name,
                              double expected, double observed, double tolerance,
                              Origin origin) {
  const bool pass = std::fabs(observed - expected) <= tolerance ||
                    (observed == expected);
  checks.push_back(CheckRecord{family, name, expected, observed, tolerance, pass, origin});
}

void SuiteResult::expect_at_most(const std::string& family, const std::string& name,
                                 double observed, double bound, double tolerance,
                                 Origin origin) {
  checks.push_back(CheckRecord{family, name, bound, observed, tolerance,
                               observed <= bound + tolerance, origin});
}

void SuiteResult::expect_true(const std::string& family, const std::string& name,
                              bool observed, Origin origin) {
  checks.push_back(CheckRecord{family, name, 1.0, observed ? 1.0 : 0.0, 0.0, observed, origin});
}

void SuiteResult::merge(const SuiteResult& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    out.push_back({{"family", c.family},
                   {"name", c.name},
                   {"expected", c.expected},
                   {"observed", c.observed},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass},
                   {"origin", to_string(c.origin)}});
  }
  return out;
}

void SuiteResult::write_csv(std::ostream& out) const {
  out << "family,name,expected,observed,tolerance,pass,origin\n";
  for (const auto& c : checks) {
    out << c.family << ',' << '"' << c.name << '"' << ',' << nlohmann::json(c.expected).dump()
        << ',' << nlohmann::json(c.observed).dump() << ','
        << nlohmann::json(c.tolerance).dump() << ',' << (c.pass ? "pass" : "fail") << ','
        << to_string(c.origin) << '\n';
  }
}

void SuiteResult::print(std::ostream& out) const {
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.family << " / " << c.name
        << ": observed " << nlohmann::json(c.observed).dump() << ", expected "
        << nlohmann::json(c.expected).dump() << " (tol " << nlohmann::json(c.tolerance).dump()
        << ", " << to_string(c.origin) << ")\n";
  }
}

// --- output ----------------------------------------------------------------

namespace {

std::string cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_meta(std::ostream& out, const nlohmann::json& meta) {
  for (const auto& [key, value] : meta.items()) out << "# " << key << '=' << cell(value) << '\n';
}

}  // namespace

void write_tables(const std::vector<Table>& tables, const SuiteResult& checks,
                  const nlohmann::json& meta, const std::filesystem::path& dir,
                  const std::string& stem, const std::string& format) {
  std::filesystem::create_directories(dir);
  if (format == "json") {
    nlohmann::json doc;
    doc["meta"] = meta;
    doc["tables"] = nlohmann::json::object();
    for (const auto& t : tables) {
      doc["tables"][t.name] = {{"columns", t.columns}, {"rows", t.rows}};
    }
    doc["checks"] = checks.to_json();
    std::ofstream out(dir / (stem + ".json"));
    if (!out) throw Error("cannot write " + (dir / (stem + ".json")).string());
    out << doc.dump(2) << '\n';
    return;
  }
  if (format != "csv") throw ConfigError("format", "expected csv or json");
  for (const auto& t : tables) {
    const auto path = dir / (stem + "_" + t.name + ".csv");
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_meta(out, meta);
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
      out << '\n';
    }
  }
  const auto path = dir / (stem + "_checks.csv");
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  checks.write_csv(out);
}

void emit_plot_data(const std::vector<EntropySequence>& sequences,
                    const std::vector<std::string>& labels,
                    const std::filesystem::path& path, double scale) {
  if (sequences.empty()) throw DomainError("no sequences to plot");
  if (labels.size() != sequences.size()) throw DomainError("one label per sequence required");
  for (const auto& s : sequences) {
    if (s.samples.size() != sequences[0].samples.size()) throw DomainError("sequences must share an n-range");
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
      if (s.samples[i].n != sequences[0].samples[i].n) throw DomainError("sequences must share an n-range");
    }
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    out << "# series=" << labels[i] << " system=" << sequences[i].system_id << '\n';
  }
  out << "series,n,raw,normalized\n";
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    for (const auto& s : sequences[i].samples) {
      out << labels[i] << ',' << s.n << ',' << nlohmann::json(s.raw * scale).dump() << ','
          << nlohmann::json(s.normalized * scale).dump() << '\n';
    }
  }
}

// --- experiments -----------------------------------------------------------

double unit_scale(const std::string& units) {
  if (units == "nats") return 1.0;
  if (units == "bits") return 1.0 / std::log(2.0);
  throw ConfigError("units", "expected nats or bits");
}

void apply_overrides(ExperimentConfig& cfg, const RunOptions& opts) {
  if (opts.n_max) {
    if (*opts.n_max < 1) throw ConfigError("n_max", "must be >= 1");
    cfg.n_max = *opts.n_max;
    cfg.n_min = std::min(cfg.n_min, cfg.n_max);
  }
  if (opts.eps_grid) {
    validate_epsilons(*opts.eps_grid, "epsilon_grid");
    cfg.eps_grid = *opts.eps_grid;
  }
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.budget) {
    cfg.budgets.enumeration = *opts.budget;
    cfg.budgets.clique_nodes = *opts.budget;
    cfg.budgets.cover_nodes = *opts.budget;
  }
  if (opts.output_dir) cfg.output_dir = *opts.output_dir;
}

namespace {

bool diagonal_like(const SymbolicSystem& sys) {
  if (sys.layer_count() != 1 || sys.layer(0).dim != 1) return false;
  for (int i = 0; i < sys.generators(); ++i) {
    if (sys.displacement(i, 0) != std::vector<int>{1}) return false;
  }
  return true;
}

bool trivial_action(const SymbolicSystem& sys) {
  std::vector<int> layers;
  for (int l = 0; l < sys.layer_count(); ++l) layers.push_back(l);
  return sys.translation_free(layers);
}

const MeasureOracle& require_measure(const ExperimentConfig& cfg) {
  if (!cfg.measure) throw ConfigError("measure", "required for this command");
  return *cfg.measure;
}

Table sequence_table(const std::vector<const EntropySequence*>& seqs, double scale) {
  Table t{"sequence",
          {"n", "raw_H", "normalized", "normalization", "system_id", "partition_coords_size"},
          {}};
  for (const auto* s : seqs) {
    for (const auto& x : s->samples) {
      t.rows.push_back({x.n, x.raw * scale, x.normalized * scale, to_string(s->normalization),
                        s->system_id, x.coords});
    }
  }
  return t;
}

Table count_table(const std::vector<CountRecord>& records) {
  Table t{"counts", {"n", "epsilon", "quantity", "value", "method", "bound_direction"}, {}};
  for (const auto& r : records) {
    t.rows.push_back({r.n, r.epsilon, r.quantity, r.count.str(), to_string(r.method),
                      to_string(r.direction)});
  }
  return t;
}

Table exponent_table(const std::vector<CriticalExponentResult>& rows, double scale) {
  Table t{"exponents",
          {"scale", "lambda", "lo", "hi", "weight_lo", "weight_hi", "saturated", "upper_bound", "monotone"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.scale, r.lambda * scale, r.lo * scale, r.hi * scale, r.weight_lo,
                      r.weight_hi, r.saturated, r.upper_bound, r.monotone});
  }
  return t;
}

std::vector<int> doubling_steps(int last) {
  std::vector<int> out;
  for (int s = 8; s < last; s *= 2) out.push_back(s);
  out.push_back(last);
  return out;
}

std::string family_of(const ExperimentConfig& cfg, const std::string& command) {
  return cfg.name + "." + command;
}

SuiteResult run_metric(const ExperimentConfig& cfg, double scale,
                       std::vector<Table>& tables, std::ostream& log) {
  SuiteResult r;
  const auto& mu = require_measure(cfg);
  const auto gamma = regular_system_for(cfg, cfg.n_max);
  const auto rec = receptive_metric_sequence(cfg.system, mu, cfg.partition, gamma, cfg.n_max,
                                             Normalization::receptive);
  const auto cls = receptive_metric_sequence(cfg.system, mu, cfg.partition, gamma, cfg.n_max,
                                             Normalization::classical);
  tables.push_back(sequence_table({&rec, &cls}, scale));
  const auto fam = family_of(cfg, "metric");
  if (gamma.nested()) {
    r.expect_true(fam, "raw entropy non-decreasing in n", rec.raw_nondecreasing, Origin::definitional);
  }
  if (diagonal_like(cfg.system) && mu.kind() == MeasureOracle::Kind::bernoulli &&
      cfg.partition.coords == sites_1d({0})) {
    const double expected = diagonal_closed_form(cfg.system.generators(), mu.probabilities(0));
    r.expect_near(fam, "headline against k H(p)", expected, rec.headline, 0.01 * expected,
                  Origin::published_closed_form);
  }
  if (trivial_action(cfg.system)) {
    r.expect_near(fam, "trivial action estimate", 0.0, rec.estimate(), 0.0, Origin::definitional);
  }
  log << "metric: receptive headline " << rec.headline * scale << ", growth rate "
      << rec.slope * scale << "; classical headline " << cls.headline * scale << '\n';
  return r;
}

SuiteResult run_topo(const ExperimentConfig& cfg, double scale,
                     std::vector<Table>& tables, std::ostream& log) {
  SuiteResult r;
  const auto fam = family_of(cfg, "topo");
  const auto gamma = regular_system_for(cfg, cfg.n_max);
  std::vector<CountRecord> records;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (double eps : cfg.eps_grid) {
      records.push_back(separated_max_closed_form(cfg.system, gamma, n, eps));
    }
  }
  if (cfg.window_length) {
    const auto fa = truncate(cfg.system, *cfg.window_length, cfg.budgets.enumeration);
    const CliqueOptions clique{cfg.budgets.clique_vertices, cfg.budgets.clique_nodes};
    const CoverOptions cover{cfg.budgets.cover_nodes};
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (double eps : cfg.eps_grid) {
        try {
          const auto pair = bruteforce_counts(fa, gamma, n, eps, clique, cover);
          const auto closed = separated_max_closed_form(cfg.system, gamma, n, eps);
          records.push_back(pair.separated);
          records.push_back(pair.spanning);
          const std::string cellname = "n=" + std::to_string(n) + " eps=" + nlohmann::json(eps).dump();
          if (pair.separated.exact()) {
            r.expect_true(fam, "separated brute force = closed form, " + cellname,
                          pair.separated.count == closed.count, Origin::independent_oracle);
          }
          if (pair.spanning.exact()) {
            r.expect_true(fam, "spanning brute force = closed form, " + cellname,
                          pair.spanning.count == closed.count, Origin::independent_oracle);
          }
        } catch (const WindowError& e) {
          log << "topo: skipped n=" << n << " eps=" << eps << ": " << e.what() << '\n';
        }
      }
    }
    const auto suite = count_inequality_suite(fa, gamma, {CoordinatePartition(cfg.partition.coords, CoverRole::cover)},
                                              cfg.eps_grid, cfg.n_min, cfg.n_max, clique, cover);
    r.expect_near(fam, "count inequality violations", 0.0,
                  static_cast<double>(suite.violations.size()), 0.0, Origin::published_closed_form);
    for (const auto& v : suite.violations) {
      log << "topo: violation " << v.family << " at n=" << v.n << " eps=" << v.epsilon << ": "
          << v.detail << '\n';
    }
  }
  tables.push_back(count_table(records));
  for (double eps : cfg.eps_grid) {
    if (cfg.n_max < 1) break;
    const auto seq = separated_entropy_sequence(cfg.system, gamma, eps, cfg.n_max);
    log << "topo: eps=" << eps << " headline " << seq.headline * scale << ", growth rate "
        << seq.slope * scale << '\n';
    if (trivial_action(cfg.system)) {
      r.expect_near(fam, "trivial action estimate, eps=" + nlohmann::json(eps).dump(), 0.0,
                    seq.estimate(), 0.0, Origin::definitional);
    }
  }
  return r;
}

SuiteResult run_cover(const ExperimentConfig& cfg, double scale,
                      std::vector<Table>& tables, std::ostream& log) {
  SuiteResult r;
  const auto fam = family_of(cfg, "cover");
  const auto gamma = regular_system_for(cfg, cfg.n_max);
  const CoordinatePartition a(cfg.partition.coords, CoverRole::cover);
  const auto seq = open_cover_entropy_sequence(cfg.system, a, gamma, cfg.n_max);
  tables.push_back(sequence_table({&seq}, scale));
  if (cfg.window_length) {
    const auto fa = truncate(cfg.system, *cfg.window_length, cfg.budgets.enumeration);
    std::vector<CountRecord> records;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const auto an = join_over(a, gamma, n, cfg.system);
      FiniteCover cover;
      try {
        cover = cylinder_cover(fa, an.coords);
      } catch (const WindowError&) {
        break;
      }
      auto exact = minimal_subcover(cover, fa.size(), CoverOptions{cfg.budgets.cover_nodes});
      exact.n = n;
      auto closed = minimal_subcover_count(cfg.system, an);
      closed.n = n;
      records.push_back(exact);
      records.push_back(closed);
      if (exact.exact()) {
        r.expect_true(fam, "N(A^n) set cover = closed form, n=" + std::to_string(n),
                      exact.count == closed.count, Origin::independent_oracle);
      }
    }
    tables.push_back(count_table(records));
  }
  if (cfg.measure && cfg.measure->kind() == MeasureOracle::Kind::bernoulli) {
    bool uniform = true;
    for (int l = 0; l < cfg.measure->layer_count(); ++l) {
      const auto& p = cfg.measure->probabilities(l);
      uniform = uniform && std::all_of(p.begin(), p.end(), [&](double q) { return q == p[0]; });
    }
    if (uniform) {
      const auto metric = receptive_metric_sequence(cfg.system, *cfg.measure, cfg.partition,
                                                    gamma, cfg.n_max);
      bool same = true;
      for (std::size_t i = 0; i < seq.samples.size(); ++i) {
        same = same && seq.samples[i].raw == metric.samples[i].raw &&
               seq.samples[i].normalized == metric.samples[i].normalized;
      }
      r.expect_true(fam, "open-cover sequence = uniform metric sequence", same,
                    Origin::independent_oracle);
    }
  }
  if (trivial_action(cfg.system)) {
    r.expect_near(fam, "trivial action estimate", 0.0, seq.estimate(), 0.0, Origin::definitional);
  }
  log << "cover: headline " << seq.headline * scale << ", growth rate " << seq.slope * scale << '\n';
  return r;
}

SuiteResult run_bowen(const ExperimentConfig& cfg, double scale,
                      std::vector<Table>& tables, std::ostream& log) {
  SuiteResult r;
  const auto fam = family_of(cfg, "bowen");
  const auto& d = cfg.dimensional;
  const auto gamma = regular_system_for(cfg, d.n_cap);
  std::vector<CriticalExponentResult> rows;
  for (int cap : doubling_steps(d.n_cap)) {
    rows.push_back(bowen_entropy(cfg.system, gamma, cfg.partition, d.n_scale, cap, cfg.lambda_tol));
    r.expect_true(fam, "weights monotone in lambda, " + rows.back().scale, rows.back().monotone,
                  Origin::definitional);
  }
  tables.push_back(exponent_table(rows, scale));
  if (trivial_action(cfg.system)) {
    r.expect_near(fam, "trivial action exponent", 0.0, rows.back().lambda, 0.0, Origin::definitional);
  }
  log << "bowen: lambda* " << rows.back().lambda * scale << " at " << rows.back().scale
      << (rows.back().upper_bound ? " (upper bound)" : "") << '\n';
  return r;
}

SuiteResult run_pesin(const ExperimentConfig& cfg, double scale,
                      std::vector<Table>& tables, std::ostream& log) {
  SuiteResult r;
  const auto fam = family_of(cfg, "pesin");
  const auto& d = cfg.dimensional;
  const auto gamma = regular_system_for(cfg, d.pesin_depth);
  std::vector<CriticalExponentResult> rows;
  for (int depth : doubling_steps(d.pesin_depth)) {
    if (depth < d.n_scale) continue;
    rows.push_back(pesin_entropy(cfg.system, gamma, d.n_scale, d.epsilon, depth, cfg.lambda_tol));
    r.expect_true(fam, "weights monotone in lambda, " + rows.back().scale, rows.back().monotone,
                  Origin::definitional);
  }
  tables.push_back(exponent_table(rows, scale));
  if (trivial_action(cfg.system)) {
    r.expect_near(fam, "trivial action exponent", 0.0, rows.back().lambda, 0.0, Origin::definitional);
  }
  log << "pesin: lambda* " << rows.back().lambda * scale << " at " << rows.back().scale << '\n';
  return r;
}

SuiteResult run_local(const ExperimentConfig& cfg, double scale,
                      std::vector<Table>& tables, std::ostream& log) {
  SuiteResult r;
  const auto fam = family_of(cfg, "local");
  const auto& mu = require_measure(cfg);
  if (!cfg.seed) throw ConfigError("seed", "required for sampling experiments");
  LocalSuiteConfig lc;
  lc.sample_size = cfg.sample_size;
  lc.n_max = cfg.n_max;
  lc.eps_grid = cfg.eps_grid;
  lc.seed = *cfg.seed;
  lc.tol = cfg.tolerance;
  lc.dimensional = cfg.dimensional;
  const int need = std::max({cfg.n_max, cfg.dimensional.pesin_depth, cfg.dimensional.h_n_max});
  const auto gamma = regular_system_for(cfg, need);
  const auto rep = inequality_suite_local(cfg.system, mu, gamma, lc);
  Table points{"points", {"point_id", "n", "epsilon", "value"}, {}};
  for (std::size_t i = 0; i < rep.summary.records.size(); ++i) {
    const auto& rec = rep.summary.records[i];
    for (std::size_t e = 0; e < rec.epsilons.size(); ++e) {
      for (int n = 1; n <= rec.n_max; ++n) {
        points.rows.push_back({i, n, rec.epsilons[e], rec.values[e][static_cast<std::size_t>(n - 1)] * scale});
      }
    }
  }
  Table summary{"summary", {"integral", "standard_error", "ess_sup", "quantile", "quantile_value"}, {}};
  summary.rows.push_back({rep.summary.integral * scale, rep.summary.standard_error * scale,
                          rep.summary.ess_sup * scale, rep.summary.quantile,
                          rep.summary.quantile_value * scale});
  tables.push_back(std::move(points));
  tables.push_back(std::move(summary));
  r.expect_at_most(fam, "local integral <= metric headline", rep.local_integral, rep.h_mu_headline,
                   cfg.tolerance, Origin::published_closed_form);
  r.expect_at_most(fam, "essential sup <= c", rep.ess_sup, rep.c, cfg.tolerance,
                   Origin::published_closed_form);
  r.expect_at_most(fam, "c <= topological entropy", rep.c, rep.h_top, cfg.tolerance,
                   Origin::published_closed_form);
  if (trivial_action(cfg.system)) {
    r.expect_near(fam, "trivial action integral", 0.0, rep.local_integral, 0.0, Origin::definitional);
  }
  log << "local: integral " << rep.local_integral * scale << " (se "
      << rep.summary.standard_error * scale << "), ess sup " << rep.ess_sup * scale
      << " (sample max; a lower estimate), metric headline " << rep.h_mu_headline * scale
      << ", c " << rep.c * scale << ", h " << rep.h_top * scale << '\n';
  return r;
}

SuiteResult run_verify(const ExperimentConfig& cfg, std::vector<Table>& tables,
                       std::ostream& log) {
  SuiteResult r;
  const auto fam = family_of(cfg, "verify");
  const auto full = regular_system_for(cfg, cfg.n_max);
  // Sumset pairs grow like n^(2k+2); stop where the count passes the budget.
  const double pair_budget = std::max(5e7, static_cast<double>(cfg.budgets.enumeration));
  int depth = 0;
  double pairs = 0.0;
  for (int n = 0; n <= full.n_max(); ++n) {
    for (int i = 0; i <= n; ++i) {
      pairs += static_cast<double>(full.size(i)) * static_cast<double>(full.size(n - i));
    }
    if (pairs > pair_budget && n > 1) break;
    depth = n;
  }
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= depth; ++n) sets.push_back(full.set(n));
  const auto gamma = depth == full.n_max() ? full : RegularSystem::custom(full.k(), std::move(sets));
  const auto report = verify_regular(gamma);
  r.expect_true(fam, "regular system, n <= " + std::to_string(depth), report.regular,
                Origin::definitional);
  if (!report.regular) {
    log << "verify: not regular";
    if (report.missing_identity) log << " (identity missing from N_0)";
    if (report.i) {
      log << ", witness (i=" << *report.i << ", j=" << *report.j << ", g=" << to_string(*report.g) << ")";
    }
    log << '\n';
  } else {
    log << "verify: regular up to n=" << depth << " of " << full.n_max()
        << ", nested=" << (gamma.nested() ? "true" : "false") << '\n';
  }
  Table folner{"folner", {"generator", "n", "defect", "defect_exact", "folner_compatible"}, {}};
  for (int i = 0; i < full.k(); ++i) {
    auto g = LatticeElement::zero(full.k());
    g.coords[static_cast<std::size_t>(i)] = 1;
    const auto profile = folner_profile(full, g);
    for (std::size_t n = 0; n < profile.defects.size(); ++n) {
      folner.rows.push_back({to_string(g), n, to_double(profile.defects[n]),
                             to_string(profile.defects[n]), profile.folner_compatible});
    }
  }
  tables.push_back(std::move(folner));
  return r;
}

SuiteResult run_plot(const ExperimentConfig& cfg, double scale, std::ostream& log) {
  const auto& mu = require_measure(cfg);
  const auto gamma = regular_system_for(cfg, cfg.n_max);
  const auto rec = receptive_metric_sequence(cfg.system, mu, cfg.partition, gamma, cfg.n_max,
                                             Normalization::receptive);
  const auto cls = receptive_metric_sequence(cfg.system, mu, cfg.partition, gamma, cfg.n_max,
                                             Normalization::classical);
  const auto path = cfg.output_dir / (cfg.name + "_plot.csv");
  emit_plot_data({rec, cls}, {"receptive", "classical"}, path, scale);
  log << "plot-data: wrote " << path.string() << '\n';
  return {};
}

}  // namespace

SuiteResult run_experiment(const ExperimentConfig& cfg_in, const RunOptions& opts,
                           std::ostream& log) {
  ExperimentConfig cfg = cfg_in;
  apply_overrides(cfg, opts);
  const double scale = unit_scale(opts.units);
  if (opts.format != "csv" && opts.format != "json") {
    throw ConfigError("format", "expected csv or json");
  }
  std::vector<Table> tables;
  SuiteResult r;
  const auto& cmd = opts.command;
  if (cmd == "metric") {
    r = run_metric(cfg, scale, tables, log);
  } else if (cmd == "topo") {
    r = run_topo(cfg, scale, tables, log);
  } else if (cmd == "cover") {
    r = run_cover(cfg, scale, tables, log);
  } else if (cmd == "bowen") {
    r = run_bowen(cfg, scale, tables, log);
  } else if (cmd == "pesin") {
    r = run_pesin(cfg, scale, tables, log);
  } else if (cmd == "local") {
    r = run_local(cfg, scale, tables, log);
  } else if (cmd == "verify") {
    r = run_verify(cfg, tables, log);
  } else if (cmd == "plot-data") {
    return run_plot(cfg, scale, log);
  } else {
    throw ConfigError("command", "unknown command '" + cmd + "'");
  }
  nlohmann::json meta = {{"experiment", cfg.name},
                         {"command", cmd},
                         {"system", cfg.system.hash()},
                         {"seed", cfg.seed ? nlohmann::json(*cfg.seed) : nlohmann::json("none")},
                         {"units", opts.units}};
  write_tables(tables, r, meta, cfg.output_dir, cfg.name + "_" + cmd, opts.format);
  return r;
}

}  // namespace receptive
