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

#include "receptive/lattice.hpp"

#include "receptive/error.hpp"

#include <algorithm>
#include <numeric>

namespace receptive {

bool LatticeElement::is_identity() const noexcept {
  return std::all_of(coords.begin(), coords.end(),
                     [](int c) { return c == 0; });
}

LatticeElement operator+(const LatticeElement& a, const LatticeElement& b) {
  if (a.coords.size() != b.coords.size()) {
    throw DomainError("lattice dimension mismatch in sum");
  }
  LatticeElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] += b.coords[i];
  }
  return out;
}

LatticeElement operator*(int p, const LatticeElement& a) {
  LatticeElement out = a;
  for (auto& c : out.coords) c *= p;
  return out;
}

std::string to_string(const LatticeElement& g) {
  if (g.coords.size() == 1) return std::to_string(g.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.coords[i]);
  }
  return s + ")";
}

LatticeSet normalized(LatticeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const LatticeSet& s, const LatticeElement& g) {
  return std::binary_search(s.begin(), s.end(), g);
}

bool is_subset(const LatticeSet& a, const LatticeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::standard: return "standard";
    case SystemKind::even: return "even";
    case SystemKind::scaled: return "scaled";
    case SystemKind::restricted: return "restricted";
    case SystemKind::custom: return "custom";
  }
  return "custom";
}

namespace {

// All points of the box [0, n]^k in lexicographic order.
LatticeSet box(int k, int n) {
  LatticeSet out;
  LatticeElement g = LatticeElement::zero(k);
  while (true) {
    out.push_back(g);
    int axis = k - 1;
    while (axis >= 0 && g.coords[static_cast<std::size_t>(axis)] == n) {
      g.coords[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
    ++g.coords[static_cast<std::size_t>(axis)];
  }
  return out;
}

bool all_nested(const std::vector<LatticeSet>& sets) {
  for (std::size_t n = 1; n < sets.size(); ++n) {
    if (!is_subset(sets[n - 1], sets[n])) return false;
  }
  return true;
}

}  // namespace

RegularSystem::RegularSystem(int k, SystemKind kind,
                             std::vector<LatticeSet> sets)
    : k_(k), kind_(kind), sets_(std::move(sets)) {
  if (k_ < 1) throw DomainError("regular system needs k >= 1");
  if (sets_.empty()) throw DomainError("regular system needs N_0");
  for (auto& s : sets_) {
    s = normalized(std::move(s));
    if (s.empty()) throw DomainError("regular system sets must be non-empty");
    for (const auto& g : s) {
      if (g.dim() != k_) throw DomainError("element of wrong dimension");
      for (int c : g.coords) {
        if (c < 0) throw DomainError("elements of Z_+^k must be non-negative");
      }
    }
  }
  nested_ = all_nested(sets_);
}

RegularSystem RegularSystem::custom(int k, std::vector<LatticeSet> sets) {
  return RegularSystem(k, SystemKind::custom, std::move(sets));
}

const LatticeSet& RegularSystem::set(int n) const {
  if (n < 0 || n > n_max()) {
    throw DomainError("index " + std::to_string(n) +
                      " outside regular system range [0, " +
                      std::to_string(n_max()) + "]");
  }
  return sets_[static_cast<std::size_t>(n)];
}

RegularSystem standard_system(int k, int n_max) {
  if (k < 1 || n_max < 1) {
    throw DomainError("standard_system needs k >= 1 and n_max >= 1");
  }
  std::vector<LatticeSet> sets;
  sets.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) sets.push_back(box(k, n));
  return RegularSystem(k, SystemKind::standard, std::move(sets));
}

RegularSystem even_system(int n_max) {
  if (n_max < 1) throw DomainError("even_system needs n_max >= 1");
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= n_max; ++n) {
    LatticeSet s;
    for (int m = 0; m <= n; ++m) s.push_back(LatticeElement{2 * m});
    sets.push_back(std::move(s));
  }
  return RegularSystem(1, SystemKind::even, std::move(sets));
}

RegularSystem scaled_system(const RegularSystem& gamma, int p, int n_max_out) {
  if (p < 1) throw DomainError("scale factor must be >= 1");
  const int fit = gamma.n_max() / p;
  const int out_max = n_max_out < 0 ? fit : n_max_out;
  if (static_cast<long long>(p) * out_max > gamma.n_max()) {
    throw DomainError("scaled system needs N_" + std::to_string(p * out_max) +
                      " but the source stops at N_" +
                      std::to_string(gamma.n_max()));
  }
  if (p == 1 && out_max == gamma.n_max()) return gamma;
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= out_max; ++n) sets.push_back(gamma.set(p * n));
  RegularSystem out(gamma.k(), SystemKind::scaled, std::move(sets));
  // scaling a scaled system composes the factors
  if (gamma.kind() == SystemKind::scaled) {
    out.scale_ = gamma.scale() * p;
    out.base_ = gamma.base_;
  } else {
    out.scale_ = p;
    out.base_ = std::make_shared<const RegularSystem>(gamma);
  }
  return out;
}

RegularSystem restricted_system(const RegularSystem& gamma,
                                const std::vector<int>& moduli) {
  if (static_cast<int>(moduli.size()) != gamma.k()) {
    throw DomainError("restricted_system needs one modulus per axis");
  }
  for (int p : moduli) {
    if (p < 1) throw DomainError("moduli must be >= 1");
  }
  if (std::all_of(moduli.begin(), moduli.end(), [](int p) { return p == 1; })) {
    return gamma;
  }
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= gamma.n_max(); ++n) {
    LatticeSet s;
    for (const auto& g : gamma.set(n)) {
      bool keep = true;
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        keep = keep && g.coords[i] % moduli[i] == 0;
      }
      if (keep) s.push_back(g);
    }
    sets.push_back(std::move(s));
  }
  RegularSystem out(gamma.k(), SystemKind::restricted, std::move(sets));
  out.moduli_ = moduli;
  out.base_ = std::make_shared<const RegularSystem>(gamma);
  return out;
}

RegularSystem dilated_system(const RegularSystem& gamma, int p) {
  if (p < 1) throw DomainError("dilation factor must be >= 1");
  if (p == 1) return gamma;
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= gamma.n_max(); ++n) {
    LatticeSet s;
    for (const auto& g : gamma.set(n)) s.push_back(p * g);
    sets.push_back(std::move(s));
  }
  return RegularSystem::custom(gamma.k(), std::move(sets));
}

RegularSystem product_system(const RegularSystem& first,
                             const RegularSystem& second) {
  const int n_max = std::min(first.n_max(), second.n_max());
  std::vector<LatticeSet> sets;
  for (int n = 0; n <= n_max; ++n) {
    LatticeSet s;
    for (const auto& a : first.set(n)) {
      for (const auto& b : second.set(n)) {
        LatticeElement g = a;
        g.coords.insert(g.coords.end(), b.coords.begin(), b.coords.end());
        s.push_back(std::move(g));
      }
    }
    sets.push_back(std::move(s));
  }
  return RegularSystem::custom(first.k() + second.k(), std::move(sets));
}

RegularityReport verify_regular(const RegularSystem& gamma) {
  RegularityReport report;
  if (!contains(gamma.set(0), LatticeElement::zero(gamma.k()))) {
    report.regular = false;
    report.missing_identity = true;
    return report;
  }
  const int n_max = gamma.n_max();
  auto check = [&](int i, int j) {
    const auto& target = gamma.set(i + j);
    std::optional<LatticeElement> worst;
    for (const auto& a : gamma.set(i)) {
      for (const auto& b : gamma.set(j)) {
        auto g = a + b;
        if (!contains(target, g) && (!worst || g < *worst)) worst = g;
      }
    }
    if (worst) {
      report.regular = false;
      report.i = i;
      report.j = j;
      report.g = std::move(worst);
      return false;
    }
    return true;
  };
  for (int i = 1; i <= n_max; ++i) {
    for (int j = 0; i + j <= n_max; ++j) {
      if (!check(i, j)) return report;
    }
  }
  check(0, 0);
  return report;
}

Rational folner_defect(const RegularSystem& gamma, const LatticeElement& g,
                       int n) {
  const auto& base = gamma.set(n);
  LatticeSet shifted;
  shifted.reserve(base.size());
  for (const auto& h : base) shifted.push_back(g + h);
  // translation preserves lexicographic order, so `shifted` is sorted
  LatticeSet diff;
  std::set_symmetric_difference(base.begin(), base.end(), shifted.begin(),
                                shifted.end(), std::back_inserter(diff));
  return Rational(static_cast<long long>(diff.size()),
                  static_cast<long long>(base.size()));
}

FolnerProfile folner_profile(const RegularSystem& gamma,
                             const LatticeElement& g) {
  FolnerProfile profile;
  for (int n = 0; n <= gamma.n_max(); ++n) {
    profile.defects.push_back(folner_defect(gamma, g, n));
  }
  bool non_increasing = true;
  for (std::size_t n = 1; n < profile.defects.size(); ++n) {
    non_increasing = non_increasing && profile.defects[n] <= profile.defects[n - 1];
  }
  profile.folner_compatible =
      non_increasing && profile.defects.back() < profile.defects.front();
  return profile;
}

// --- serialization -------------------------------------------------------

nlohmann::json RegularSystem::to_json() const {
  using nlohmann::json;
  switch (kind_) {
    case SystemKind::standard:
      return json{{"kind", "standard"}, {"k", k_}, {"n_max", n_max()}};
    case SystemKind::even:
      return json{{"kind", "even"}, {"n_max", n_max()}};
    case SystemKind::scaled:
      return json{{"kind", "scaled"},
                  {"p", scale_},
                  {"n_max", n_max()},
                  {"base", base_->to_json()}};
    case SystemKind::restricted:
      return json{
          {"kind", "restricted"}, {"moduli", moduli_}, {"base", base_->to_json()}};
    case SystemKind::custom: break;
  }
  json sets = json::array();
  for (const auto& s : sets_) {
    json elems = json::array();
    for (const auto& g : s) elems.push_back(g.coords);
    sets.push_back(std::move(elems));
  }
  return json{{"kind", "custom"}, {"k", k_}, {"sets", std::move(sets)}};
}

RegularSystem RegularSystem::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind")) {
    throw ConfigError("regular_system.kind", "missing");
  }
  const auto kind = doc.at("kind").get<std::string>();
  auto int_field = [&](const char* name) {
    if (!doc.contains(name) || !doc.at(name).is_number_integer()) {
      throw ConfigError(std::string("regular_system.") + name,
                        "missing or not an integer");
    }
    return doc.at(name).get<int>();
  };
  try {
    if (kind == "standard") return standard_system(int_field("k"), int_field("n_max"));
    if (kind == "even") return even_system(int_field("n_max"));
    if (kind == "scaled") {
      return scaled_system(from_json(doc.at("base")), int_field("p"),
                           int_field("n_max"));
    }
    if (kind == "restricted") {
      return restricted_system(from_json(doc.at("base")),
                               doc.at("moduli").get<std::vector<int>>());
    }
    if (kind == "custom") {
      const int k = int_field("k");
      std::vector<LatticeSet> sets;
      for (const auto& elems : doc.at("sets")) {
        LatticeSet s;
        for (const auto& c : elems) {
          s.emplace_back(c.get<std::vector<int>>());
        }
        sets.push_back(std::move(s));
      }
      return custom(k, std::move(sets));
    }
  } catch (const DomainError& e) {
    throw ConfigError("regular_system", e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("regular_system", e.what());
  }
  throw ConfigError("regular_system.kind", "unknown kind '" + kind + "'");
}

}  // namespace receptive
