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

#include "receptive/symbolic.hpp"

#include "receptive/error.hpp"
#include "receptive/numeric.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <random>

namespace receptive {

// --- sites -----------------------------------------------------------------

int Site::norm() const noexcept {
  int m = 0;
  for (int c : point) m = std::max(m, c);
  return m;
}

std::string to_string(const Site& s) {
  std::string out;
  if (s.layer != 0) out = "L" + std::to_string(s.layer) + ":";
  if (s.point.size() == 1) return out + std::to_string(s.point[0]);
  out += "(";
  for (std::size_t i = 0; i < s.point.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.point[i]);
  }
  return out + ")";
}

SiteSet normalized(SiteSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

SiteSet site_union(const SiteSet& a, const SiteSet& b) {
  SiteSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool is_subset(const SiteSet& a, const SiteSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SiteSet sites_1d(std::initializer_list<int> coords) {
  SiteSet out;
  for (int c : coords) out.emplace_back(0, std::vector<int>{c});
  return normalized(std::move(out));
}

SiteSet interval_sites(int first, int last, int layer) {
  SiteSet out;
  for (int c = first; c <= last; ++c) out.emplace_back(layer, std::vector<int>{c});
  return out;
}

std::vector<int> layers_of(const SiteSet& s) {
  std::vector<int> out;
  for (const auto& site : s) {
    if (out.empty() || out.back() != site.layer) out.push_back(site.layer);
  }
  return out;
}

// --- systems ---------------------------------------------------------------

SymbolicSystem::SymbolicSystem(int alphabet, int dim,
                               std::vector<std::vector<int>> displacements)
    : layers_{Layer{alphabet, dim}} {
  for (auto& d : displacements) disp_.push_back({std::move(d)});
  validate();
}

SymbolicSystem::SymbolicSystem(
    std::vector<Layer> layers,
    std::vector<std::vector<std::vector<int>>> displacements)
    : layers_(std::move(layers)), disp_(std::move(displacements)) {
  validate();
}

void SymbolicSystem::validate() const {
  if (layers_.empty()) throw ConfigError("system.layers", "at least one layer required");
  if (disp_.empty()) throw ConfigError("system.generators", "k >= 1 required");
  for (const auto& l : layers_) {
    if (l.alphabet < 1 || l.alphabet > 255) {
      throw ConfigError("system.alphabet", "alphabet size must lie in [1, 255]");
    }
    if (l.dim < 1) throw ConfigError("system.dim", "lattice dimension must be >= 1");
  }
  for (const auto& gen : disp_) {
    if (gen.size() != layers_.size()) {
      throw ConfigError("system.generators", "one displacement per layer required");
    }
    for (std::size_t l = 0; l < gen.size(); ++l) {
      if (static_cast<int>(gen[l].size()) != layers_[l].dim) {
        throw ConfigError("system.generators", "displacement of wrong dimension");
      }
      for (int c : gen[l]) {
        if (c < 0) throw ConfigError("system.generators", "displacements must be non-negative");
      }
    }
  }
}

const std::vector<int>& SymbolicSystem::displacement(int generator,
                                                     int layer) const {
  return disp_.at(static_cast<std::size_t>(generator))
      .at(static_cast<std::size_t>(layer));
}

std::vector<int> SymbolicSystem::translation(const LatticeElement& g,
                                             int layer) const {
  if (g.dim() != generators()) {
    throw DomainError("element of Z_+^" + std::to_string(g.dim()) +
                      " used with a Z_+^" + std::to_string(generators()) +
                      " action");
  }
  std::vector<int> out(static_cast<std::size_t>(this->layer(layer).dim), 0);
  for (int i = 0; i < generators(); ++i) {
    const auto& d = displacement(i, layer);
    const int gi = g.coords[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += gi * d[a];
  }
  return out;
}

bool SymbolicSystem::translation_free(const std::vector<int>& layers_used) const {
  for (const auto& gen : disp_) {
    for (int l : layers_used) {
      const auto& d = gen.at(static_cast<std::size_t>(l));
      if (std::any_of(d.begin(), d.end(), [](int c) { return c != 0; })) return false;
    }
  }
  return true;
}

std::string SymbolicSystem::id() const { return to_json().dump(); }

std::string SymbolicSystem::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

nlohmann::json SymbolicSystem::to_json() const {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : layers_) layers.push_back({{"alphabet", l.alphabet}, {"dim", l.dim}});
  return {{"kind", "custom"}, {"layers", layers}, {"generators", disp_}};
}

SymbolicSystem SymbolicSystem::from_json(const nlohmann::json& doc) {
  try {
    const auto kind = doc.value("kind", std::string("custom"));
    const int alphabet = doc.value("alphabet", 2);
    if (kind == "shift") return full_shift(alphabet);
    if (kind == "diagonal") return diagonal_system(alphabet, doc.value("k", 2));
    if (kind == "shift_field") return shift_field(alphabet, doc.value("dim", 2));
    if (kind == "trivial") {
      return trivial_system(alphabet, doc.value("k", 1), doc.value("dim", 1));
    }
    if (kind == "product") {
      const auto& factors = doc.at("factors");
      if (!factors.is_array() || factors.size() < 2) {
        throw ConfigError("system.factors", "at least two factors required");
      }
      std::vector<Layer> layers;
      std::vector<std::vector<std::vector<int>>> gens;
      std::vector<SymbolicSystem> parts;
      for (const auto& f : factors) parts.push_back(from_json(f));
      for (const auto& part : parts) {
        for (const auto& l : part.layers()) layers.push_back(l);
      }
      int offset = 0;
      for (const auto& part : parts) {
        for (int i = 0; i < part.generators(); ++i) {
          std::vector<std::vector<int>> gen;
          for (const auto& l : layers) gen.push_back(std::vector<int>(static_cast<std::size_t>(l.dim), 0));
          for (int l = 0; l < part.layer_count(); ++l) {
            gen[static_cast<std::size_t>(offset + l)] = part.displacement(i, l);
          }
          gens.push_back(std::move(gen));
        }
        offset += part.layer_count();
      }
      return SymbolicSystem(std::move(layers), std::move(gens));
    }
    if (kind == "custom") {
      std::vector<Layer> layers;
      for (const auto& l : doc.at("layers")) {
        layers.push_back(Layer{l.at("alphabet").get<int>(), l.at("dim").get<int>()});
      }
      return SymbolicSystem(
          std::move(layers),
          doc.at("generators").get<std::vector<std::vector<std::vector<int>>>>());
    }
    throw ConfigError("system.kind", "unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("system", e.what());
  }
}

SymbolicSystem full_shift(int alphabet) { return SymbolicSystem(alphabet, 1, {{1}}); }

SymbolicSystem diagonal_system(int alphabet, int k) {
  if (k < 1) throw ConfigError("system.k", "k >= 1 required");
  return SymbolicSystem(alphabet, 1,
                        std::vector<std::vector<int>>(static_cast<std::size_t>(k), {1}));
}

SymbolicSystem shift_field(int alphabet, int dim) {
  if (dim < 1) throw ConfigError("system.dim", "dim >= 1 required");
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    gens.push_back(std::move(e));
  }
  return SymbolicSystem(alphabet, dim, std::move(gens));
}

SymbolicSystem trivial_system(int alphabet, int k, int dim) {
  if (k < 1) throw ConfigError("system.k", "k >= 1 required");
  return SymbolicSystem(alphabet, dim,
                        std::vector<std::vector<int>>(
                            static_cast<std::size_t>(k),
                            std::vector<int>(static_cast<std::size_t>(dim), 0)));
}

SymbolicSystem single_map(const SymbolicSystem& sys, const LatticeElement& g) {
  std::vector<std::vector<int>> gen;
  for (int l = 0; l < sys.layer_count(); ++l) gen.push_back(sys.translation(g, l));
  return SymbolicSystem(sys.layers(), {std::move(gen)});
}

SymbolicSystem with_alphabet(const SymbolicSystem& sys, int layer, int alphabet) {
  auto layers = sys.layers();
  layers.at(static_cast<std::size_t>(layer)).alphabet = alphabet;
  std::vector<std::vector<std::vector<int>>> gens;
  for (int i = 0; i < sys.generators(); ++i) {
    std::vector<std::vector<int>> gen;
    for (int l = 0; l < sys.layer_count(); ++l) gen.push_back(sys.displacement(i, l));
    gens.push_back(std::move(gen));
  }
  return SymbolicSystem(std::move(layers), std::move(gens));
}

// --- partitions ------------------------------------------------------------

CoordinatePartition::CoordinatePartition(SiteSet c, CoverRole r)
    : coords(normalized(std::move(c))), role(r) {
  if (coords.empty()) throw DomainError("a coordinate partition needs at least one site");
}

SiteSet translate(const SiteSet& s, const SymbolicSystem& sys,
                  const LatticeElement& g) {
  std::vector<std::vector<int>> shift;
  for (int l = 0; l < sys.layer_count(); ++l) shift.push_back(sys.translation(g, l));
  SiteSet out;
  out.reserve(s.size());
  for (const auto& site : s) {
    if (site.layer < 0 || site.layer >= sys.layer_count() ||
        static_cast<int>(site.point.size()) != sys.layer(site.layer).dim) {
      throw DomainError("site " + to_string(site) + " does not belong to the system");
    }
    Site moved = site;
    const auto& d = shift[static_cast<std::size_t>(site.layer)];
    for (std::size_t a = 0; a < moved.point.size(); ++a) moved.point[a] += d[a];
    out.push_back(std::move(moved));
  }
  // per-layer translation keeps the lexicographic order
  return out;
}

CoordinatePartition pullback(const CoordinatePartition& a,
                             const LatticeElement& g,
                             const SymbolicSystem& sys) {
  return CoordinatePartition(translate(a.coords, sys, g), a.role);
}

CoordinatePartition join_over(const CoordinatePartition& a,
                              const RegularSystem& gamma, int n,
                              const SymbolicSystem& sys) {
  SiteSet all;
  const auto& elements = gamma.set(n);
  all.reserve(a.coords.size() * elements.size());
  for (const auto& g : elements) {
    auto moved = translate(a.coords, sys, g);
    all.insert(all.end(), moved.begin(), moved.end());
  }
  return CoordinatePartition(normalized(std::move(all)), a.role);
}

// --- measures --------------------------------------------------------------

namespace {

constexpr double kProbabilityTolerance = 1e-12;

void check_vector(const std::vector<double>& p, const std::string& field) {
  if (p.empty()) throw ConfigError(field, "probability vector is empty");
  for (double q : p) {
    if (!(q >= 0.0) || !std::isfinite(q)) {
      throw ConfigError(field, "probabilities must be finite and >= 0");
    }
  }
  const double total = compensated_sum(p);
  if (std::fabs(total - 1.0) > kProbabilityTolerance) {
    throw ConfigError(field, "probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

using Matrix = std::vector<std::vector<double>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t r = a.size();
  Matrix out(r, std::vector<double>(r, 0.0));
  std::vector<double> terms(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < r; ++c) terms[c] = a[i][c] * b[c][j];
      out[i][j] = order_free_sum(terms);
    }
  }
  return out;
}

Matrix identity(std::size_t r) {
  Matrix out(r, std::vector<double>(r, 0.0));
  for (std::size_t i = 0; i < r; ++i) out[i][i] = 1.0;
  return out;
}

Matrix power(const Matrix& m, int e) {
  Matrix result = identity(m.size());
  Matrix base = m;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : multiply(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

void check_markov_sites(const SiteSet& s) {
  for (const auto& site : s) {
    if (site.layer != 0 || site.point.size() != 1) {
      throw DomainError("Markov measures are supported on one layer with d = 1 only");
    }
  }
}

// Factors of the chain marginal of a Markov cylinder: pi(w_0) and the
// transition probabilities across each gap.
std::vector<double> markov_factors(const MeasureOracle& mu, const SiteSet& s,
                                   const Word& w) {
  check_markov_sites(s);
  std::vector<double> factors;
  if (s.empty()) return factors;
  const auto& pi = mu.stationary();
  factors.push_back(pi.at(static_cast<std::size_t>(w[0])));
  std::map<int, Matrix> cache;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int gap = s[i].point[0] - s[i - 1].point[0];
    auto it = cache.find(gap);
    if (it == cache.end()) it = cache.emplace(gap, power(mu.transition(), gap)).first;
    factors.push_back(it->second[static_cast<std::size_t>(w[i - 1])]
                                [static_cast<std::size_t>(w[i])]);
  }
  return factors;
}

void check_word(const SiteSet& s, const Word& w) {
  if (s.size() != w.size()) {
    throw DomainError("word must assign a symbol to every site");
  }
}

}  // namespace

std::vector<std::vector<double>> transition_power(const MeasureOracle& mu,
                                                  int gap) {
  if (mu.kind() != MeasureOracle::Kind::markov) throw DomainError("not a Markov measure");
  if (gap < 0) throw DomainError("negative gap");
  return power(mu.transition(), gap);
}

MeasureOracle MeasureOracle::bernoulli(std::vector<double> p) {
  check_vector(p, "measure.p");
  MeasureOracle mu;
  mu.kind_ = Kind::bernoulli;
  mu.p_.push_back(std::move(p));
  mu.exact_p_.emplace_back();
  return mu;
}

MeasureOracle MeasureOracle::bernoulli(std::vector<Rational> p) {
  if (p.empty()) throw ConfigError("measure.p", "probability vector is empty");
  Rational total = 0;
  std::vector<double> approx;
  for (const auto& q : p) {
    if (q < 0) throw ConfigError("measure.p", "probabilities must be >= 0");
    total += q;
    approx.push_back(to_double(q));
  }
  if (total != 1) {
    throw ConfigError("measure.p", "probabilities sum to " + to_string(total) + ", not 1");
  }
  MeasureOracle mu;
  mu.kind_ = Kind::bernoulli;
  mu.p_.push_back(std::move(approx));
  mu.exact_p_.emplace_back(std::move(p));
  return mu;
}

MeasureOracle MeasureOracle::product(const std::vector<MeasureOracle>& factors) {
  MeasureOracle mu;
  mu.kind_ = Kind::bernoulli;
  for (const auto& f : factors) {
    if (f.kind() != Kind::bernoulli) {
      throw ConfigError("measure.factors", "products of Markov measures are not supported");
    }
    mu.p_.insert(mu.p_.end(), f.p_.begin(), f.p_.end());
    mu.exact_p_.insert(mu.exact_p_.end(), f.exact_p_.begin(), f.exact_p_.end());
  }
  if (mu.p_.empty()) throw ConfigError("measure.factors", "no factors");
  return mu;
}

MeasureOracle MeasureOracle::markov(std::vector<std::vector<double>> transition,
                                    std::vector<double> stationary) {
  const std::size_t r = stationary.size();
  check_vector(stationary, "measure.pi");
  if (transition.size() != r) throw ConfigError("measure.P", "matrix must be r x r");
  for (std::size_t i = 0; i < r; ++i) {
    if (transition[i].size() != r) throw ConfigError("measure.P", "matrix must be r x r");
    check_vector(transition[i], "measure.P[" + std::to_string(i) + "]");
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> terms;
    for (std::size_t i = 0; i < r; ++i) terms.push_back(stationary[i] * transition[i][j]);
    if (std::fabs(compensated_sum(terms) - stationary[j]) > kProbabilityTolerance) {
      throw ConfigError("measure.pi", "pi is not stationary for P");
    }
  }
  MeasureOracle mu;
  mu.kind_ = Kind::markov;
  mu.transition_ = std::move(transition);
  mu.stationary_ = std::move(stationary);
  return mu;
}

int MeasureOracle::layer_count() const noexcept {
  return kind_ == Kind::markov ? 1 : static_cast<int>(p_.size());
}

int MeasureOracle::alphabet(int layer) const {
  if (kind_ == Kind::markov) return static_cast<int>(stationary_.size());
  return static_cast<int>(p_.at(static_cast<std::size_t>(layer)).size());
}

const std::vector<double>& MeasureOracle::probabilities(int layer) const {
  if (kind_ != Kind::bernoulli) throw DomainError("not a Bernoulli measure");
  return p_.at(static_cast<std::size_t>(layer));
}

const std::optional<std::vector<Rational>>& MeasureOracle::exact_probabilities(
    int layer) const {
  if (kind_ != Kind::bernoulli) throw DomainError("not a Bernoulli measure");
  return exact_p_.at(static_cast<std::size_t>(layer));
}

bool MeasureOracle::exact() const noexcept {
  return kind_ == Kind::bernoulli &&
         std::all_of(exact_p_.begin(), exact_p_.end(),
                     [](const auto& e) { return e.has_value(); });
}

void MeasureOracle::check_compatible(const SymbolicSystem& sys) const {
  if (layer_count() != sys.layer_count()) {
    throw ConfigError("measure", "measure has " + std::to_string(layer_count()) +
                                     " layer(s), system has " +
                                     std::to_string(sys.layer_count()));
  }
  for (int l = 0; l < sys.layer_count(); ++l) {
    if (alphabet(l) != sys.layer(l).alphabet) {
      throw ConfigError("measure", "alphabet mismatch on layer " + std::to_string(l));
    }
  }
  if (kind_ == Kind::markov && sys.layer(0).dim != 1) {
    throw ConfigError("measure.kind", "Markov measures require lattice dimension 1");
  }
}

MeasureOracle MeasureOracle::permuted(int layer,
                                      const std::vector<int>& permutation) const {
  MeasureOracle out = *this;
  const auto r = static_cast<std::size_t>(alphabet(layer));
  if (permutation.size() != r) throw DomainError("permutation of wrong size");
  auto apply = [&](const auto& v) {
    auto w = v;
    for (std::size_t s = 0; s < r; ++s) w[static_cast<std::size_t>(permutation[s])] = v[s];
    return w;
  };
  if (kind_ == Kind::markov) {
    out.stationary_ = apply(stationary_);
    Matrix t(r, std::vector<double>(r));
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        t[static_cast<std::size_t>(permutation[a])][static_cast<std::size_t>(permutation[b])] =
            transition_[a][b];
      }
    }
    out.transition_ = std::move(t);
    return out;
  }
  const auto l = static_cast<std::size_t>(layer);
  out.p_[l] = apply(p_[l]);
  if (exact_p_[l]) out.exact_p_[l] = apply(*exact_p_[l]);
  return out;
}

nlohmann::json MeasureOracle::to_json() const {
  using nlohmann::json;
  if (kind_ == Kind::markov) {
    return json{{"kind", "markov"}, {"P", transition_}, {"pi", stationary_}};
  }
  auto layer_json = [&](std::size_t l) {
    json p = json::array();
    if (exact_p_[l]) {
      for (const auto& q : *exact_p_[l]) p.push_back(to_string(q));
    } else {
      for (double q : p_[l]) p.push_back(q);
    }
    return json{{"kind", "bernoulli"}, {"p", p}};
  };
  if (p_.size() == 1) return layer_json(0);
  json factors = json::array();
  for (std::size_t l = 0; l < p_.size(); ++l) factors.push_back(layer_json(l));
  return json{{"kind", "product"}, {"factors", factors}};
}

MeasureOracle MeasureOracle::from_json(const nlohmann::json& doc) {
  try {
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "bernoulli") {
      const auto& p = doc.at("p");
      if (!p.is_array() || p.empty()) throw ConfigError("measure.p", "must be a non-empty array");
      if (std::all_of(p.begin(), p.end(), [](const auto& q) { return q.is_string(); })) {
        std::vector<Rational> exact;
        for (const auto& q : p) exact.push_back(parse_rational(q.get<std::string>(), "measure.p"));
        return bernoulli(std::move(exact));
      }
      return bernoulli(p.get<std::vector<double>>());
    }
    if (kind == "product") {
      std::vector<MeasureOracle> factors;
      for (const auto& f : doc.at("factors")) factors.push_back(from_json(f));
      return product(factors);
    }
    if (kind == "markov") {
      return markov(doc.at("P").get<std::vector<std::vector<double>>>(),
                    doc.at("pi").get<std::vector<double>>());
    }
    throw ConfigError("measure.kind", "unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("measure", e.what());
  }
}

double cylinder_measure(const MeasureOracle& mu, const SiteSet& s,
                        const Word& w) {
  check_word(s, w);
  if (mu.kind() == MeasureOracle::Kind::markov) {
    double m = 1.0;
    for (double f : markov_factors(mu, s, w)) m *= f;
    return m;
  }
  double m = 1.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    m *= mu.probabilities(s[i].layer).at(static_cast<std::size_t>(w[i]));
  }
  return m;
}

double log_cylinder_measure(const MeasureOracle& mu, const SiteSet& s,
                            const Word& w) {
  check_word(s, w);
  std::vector<double> logs;
  logs.reserve(s.size());
  if (mu.kind() == MeasureOracle::Kind::markov) {
    for (double f : markov_factors(mu, s, w)) logs.push_back(std::log(f));
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      logs.push_back(std::log(
          mu.probabilities(s[i].layer).at(static_cast<std::size_t>(w[i]))));
    }
  }
  for (double v : logs) {
    if (std::isinf(v)) return -std::numeric_limits<double>::infinity();
  }
  return compensated_sum(logs);
}

Rational cylinder_measure_exact(const MeasureOracle& mu, const SiteSet& s,
                                const Word& w) {
  check_word(s, w);
  if (!mu.exact()) throw DomainError("exact cylinder measure needs rational Bernoulli inputs");
  Rational m = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    m *= mu.exact_probabilities(s[i].layer)->at(static_cast<std::size_t>(w[i]));
  }
  return m;
}

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int draw_from(std::span<const double> p, std::mt19937_64& rng) {
  const double u = unit_draw(rng);
  double cumulative = 0.0;
  int last_positive = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] <= 0.0) continue;
    cumulative += p[s];
    last_positive = static_cast<int>(s);
    if (u < cumulative) return static_cast<int>(s);
  }
  return last_positive;
}

Word draw_word(const MeasureOracle& mu, const SiteSet& s, std::mt19937_64& rng) {
  Word w(s.size());
  if (mu.kind() == MeasureOracle::Kind::bernoulli) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      w[i] = draw_from(mu.probabilities(s[i].layer), rng);
    }
    return w;
  }
  check_markov_sites(s);
  std::map<int, Matrix> cache;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == 0) {
      w[i] = draw_from(mu.stationary(), rng);
      continue;
    }
    const int gap = s[i].point[0] - s[i - 1].point[0];
    auto it = cache.find(gap);
    if (it == cache.end()) it = cache.emplace(gap, power(mu.transition(), gap)).first;
    w[i] = draw_from(it->second[static_cast<std::size_t>(w[i - 1])], rng);
  }
  return w;
}

}  // namespace

Word sample_point(const MeasureOracle& mu, const SiteSet& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_word(mu, s, rng);
}

std::vector<Word> sample_points(const MeasureOracle& mu, const SiteSet& s,
                                std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_word(mu, s, rng));
  return out;
}

std::uint64_t word_count(const SymbolicSystem& sys, const SiteSet& s) {
  std::uint64_t total = 1;
  for (const auto& site : s) {
    const auto r = static_cast<std::uint64_t>(sys.layer(site.layer).alphabet);
    if (r != 0 && total > std::numeric_limits<std::uint64_t>::max() / r) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= r;
  }
  return total;
}

ProductSystem product_system(const SymbolicSystem& first,
                             const SymbolicSystem& second,
                             const MeasureOracle& mu1,
                             const MeasureOracle& mu2) {
  if (mu1.kind() != MeasureOracle::Kind::bernoulli ||
      mu2.kind() != MeasureOracle::Kind::bernoulli) {
    throw ConfigError("measure", "product systems need Bernoulli factors");
  }
  mu1.check_compatible(first);
  mu2.check_compatible(second);
  nlohmann::json doc = {{"kind", "product"},
                        {"factors", {first.to_json(), second.to_json()}}};
  return ProductSystem{SymbolicSystem::from_json(doc),
                       MeasureOracle::product({mu1, mu2})};
}

std::vector<double> pair_alphabet_vector(const MeasureOracle& product_measure,
                                         int first_layer, int second_layer) {
  const auto& a = product_measure.probabilities(first_layer);
  const auto& b = product_measure.probabilities(second_layer);
  std::vector<double> out;
  for (double x : a) {
    for (double y : b) out.push_back(x * y);
  }
  return out;
}

// --- finite truncations ----------------------------------------------------

SiteSet window_sites(const SymbolicSystem& sys, int length) {
  if (length < 0) throw DomainError("window length must be >= 0");
  SiteSet out;
  for (int l = 0; l < sys.layer_count(); ++l) {
    const int d = sys.layer(l).dim;
    std::vector<int> p(static_cast<std::size_t>(d), 0);
    while (true) {
      out.emplace_back(l, p);
      int axis = d - 1;
      while (axis >= 0 && p[static_cast<std::size_t>(axis)] == length) {
        p[static_cast<std::size_t>(axis)] = 0;
        --axis;
      }
      if (axis < 0) break;
      ++p[static_cast<std::size_t>(axis)];
    }
  }
  return out;
}

FiniteApproximation::FiniteApproximation(SymbolicSystem sys, int length,
                                         std::vector<Word> points)
    : sys_(std::move(sys)), length_(length), sites_(window_sites(sys_, length)) {
  for (const auto& s : sites_) norms_.push_back(s.norm());
  count_ = points.size();
  symbols_.reserve(count_ * sites_.size());
  for (const auto& w : points) {
    if (w.size() != sites_.size()) {
      throw DomainError("point does not match the truncation window");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0 || w[i] >= sys_.layer(sites_[i].layer).alphabet) {
        throw DomainError("symbol outside the alphabet");
      }
      symbols_.push_back(static_cast<std::uint8_t>(w[i]));
    }
  }
}

std::span<const std::uint8_t> FiniteApproximation::point(std::size_t i) const {
  return {symbols_.data() + i * sites_.size(), sites_.size()};
}

Word FiniteApproximation::word(std::size_t i) const {
  auto p = point(i);
  return Word(p.begin(), p.end());
}

int FiniteApproximation::index_of(const Site& s) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), s);
  if (it == sites_.end() || *it != s) return -1;
  return static_cast<int>(it - sites_.begin());
}

double FiniteApproximation::distance(std::size_t i, std::size_t j) const {
  const auto x = point(i);
  const auto y = point(j);
  int m = INT_MAX;
  for (std::size_t s = 0; s < sites_.size(); ++s) {
    if (x[s] != y[s]) m = std::min(m, norms_[s]);
  }
  return m == INT_MAX ? 0.0 : std::ldexp(1.0, -m);
}

ShiftMap FiniteApproximation::shift_map(const LatticeElement& g) const {
  ShiftMap map;
  const auto moved = translate(sites_, sys_, g);
  map.source.reserve(sites_.size());
  for (const auto& s : moved) map.source.push_back(index_of(s));
  return map;
}

int FiniteApproximation::visible_radius(const LatticeElement& g) const {
  const auto map = shift_map(g);
  int radius = INT_MAX;
  for (std::size_t j = 0; j < sites_.size(); ++j) {
    if (map.source[j] < 0) radius = std::min(radius, norms_[j]);
  }
  // sites of gx beyond the window itself are never visible
  const bool moves = std::any_of(sites_.begin(), sites_.end(), [&](const Site& s) {
    return map.source[static_cast<std::size_t>(&s - sites_.data())] !=
           static_cast<int>(&s - sites_.data());
  });
  if (moves) radius = std::min(radius, length_ + 1);
  return radius;
}

double FiniteApproximation::shifted_distance(std::size_t i, std::size_t j,
                                             const ShiftMap& map) const {
  const auto x = point(i);
  const auto y = point(j);
  int m = INT_MAX;
  for (std::size_t s = 0; s < sites_.size(); ++s) {
    const int src = map.source[s];
    if (src >= 0 && norms_[s] < m &&
        x[static_cast<std::size_t>(src)] != y[static_cast<std::size_t>(src)]) {
      m = norms_[s];
    }
  }
  return m == INT_MAX ? 0.0 : std::ldexp(1.0, -m);
}

void FiniteApproximation::write_points_csv(std::ostream& out) const {
  out << "point_id,site,symbol\n";
  for (std::size_t i = 0; i < count_; ++i) {
    const auto p = point(i);
    for (std::size_t s = 0; s < sites_.size(); ++s) {
      out << i << ',' << '"' << to_string(sites_[s]) << '"' << ','
          << static_cast<int>(p[s]) << '\n';
    }
  }
}

void FiniteApproximation::write_metric_csv(std::ostream& out) const {
  out << "i,j,distance\n";
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t j = i + 1; j < count_; ++j) {
      out << i << ',' << j << ',' << distance(i, j) << '\n';
    }
  }
}

FiniteApproximation truncate(const SymbolicSystem& sys, int length,
                             std::uint64_t budget) {
  const auto sites = window_sites(sys, length);
  std::vector<Word> points;
  points.reserve(static_cast<std::size_t>(std::min(word_count(sys, sites), budget)));
  for_each_word(sys, sites, budget, [&](const Word& w) { points.push_back(w); });
  return FiniteApproximation(sys, length, std::move(points));
}

}  // namespace receptive
