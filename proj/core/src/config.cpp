// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace majorana_rp {

namespace {

using json = nlohmann::json;

std::string join_violations(const std::vector<std::string>& v) {
  std::string msg = "invalid config:";
  for (const auto& s : v) {
    msg += "\n  " + s;
  }
  return msg;
}

class Checker {
 public:
  void add(const std::string& path, const std::string& msg) { out_.push_back(path + ": " + msg); }
  const std::vector<std::string>& violations() const { return out_; }
  bool ok() const { return out_.empty(); }

  bool object(const json& j, const std::string& path) {
    if (!j.is_object()) {
      add(path, "expected an object");
      return false;
    }
    return true;
  }

  void keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
      if (!ok.contains(key)) {
        add(path + "." + key, "unknown key");
      }
    }
  }

  std::optional<long long> integer(const json& j, const std::string& path, long long min) {
    if (!j.is_number_integer()) {
      add(path, "expected an integer");
      return std::nullopt;
    }
    const auto v = j.get<long long>();
    if (v < min) {
      add(path, "must be >= " + std::to_string(min));
      return std::nullopt;
    }
    return v;
  }

  std::optional<double> number(const json& j, const std::string& path) {
    if (!j.is_number()) {
      add(path, "expected a number");
      return std::nullopt;
    }
    return j.get<double>();
  }

  std::optional<double> positive(const json& j, const std::string& path) {
    auto v = number(j, path);
    if (v && !(*v > 0.0)) {
      add(path, "must be positive");
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::vector<int>> int_list(const json& j, const std::string& path) {
    if (!j.is_array()) {
      add(path, "expected an array of integers");
      return std::nullopt;
    }
    std::vector<int> out;
    bool good = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_number_integer()) {
        add(path + "[" + std::to_string(i) + "]", "expected an integer");
        good = false;
        continue;
      }
      out.push_back(j[i].get<int>());
    }
    return good ? std::optional(out) : std::nullopt;
  }

 private:
  std::vector<std::string> out_;
};

std::optional<ReflectionGeometry> parse_geometry(const json& j, Checker& ck) {
  const std::string path = "geometry";
  if (!ck.object(j, path)) {
    return std::nullopt;
  }
  ck.keys(j, path, {"chain", "pairs", "flavors", "side"});
  const bool has_chain = j.contains("chain");
  const bool has_pairs = j.contains("pairs");
  if (has_chain == has_pairs) {
    ck.add(path, "exactly one of 'chain' or 'pairs' is required");
    return std::nullopt;
  }
  std::optional<ReflectionGeometry> g;
  if (has_chain) {
    const auto& c = j["chain"];
    if (!ck.object(c, path + ".chain")) {
      return std::nullopt;
    }
    ck.keys(c, path + ".chain", {"sites_per_side", "flavors"});
    if (!c.contains("sites_per_side")) {
      ck.add(path + ".chain.sites_per_side", "missing");
    }
    auto m = c.contains("sites_per_side")
                 ? ck.integer(c["sites_per_side"], path + ".chain.sites_per_side", 1)
                 : std::nullopt;
    auto n = c.contains("flavors") ? ck.integer(c["flavors"], path + ".chain.flavors", 1)
                                   : std::optional<long long>(1);
    if (j.contains("flavors") || j.contains("side")) {
      ck.add(path, "'flavors'/'side' belong inside 'chain' or next to 'pairs'");
    }
    if (m && n) {
      try {
        g = ReflectionGeometry::chain(static_cast<int>(*m), static_cast<int>(*n));
      } catch (const std::invalid_argument& e) {
        ck.add(path + ".chain", e.what());
      }
    }
  } else {
    const auto& p = j["pairs"];
    if (!p.is_array() || p.empty()) {
      ck.add(path + ".pairs", "expected a non-empty array of [site_a, site_b]");
      return std::nullopt;
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& e = p[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        ck.add(path + ".pairs[" + std::to_string(i) + "]", "expected [site_a, site_b]");
        continue;
      }
      pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    auto n = j.contains("flavors") ? ck.integer(j["flavors"], path + ".flavors", 1)
                                   : std::optional<long long>(1);
    std::map<int, Side> sides;
    if (j.contains("side") && ck.object(j["side"], path + ".side")) {
      for (const auto& [key, value] : j["side"].items()) {
        const std::string sp = path + ".side." + key;
        int label = 0;
        try {
          std::size_t used = 0;
          label = std::stoi(key, &used);
          if (used != key.size()) {
            throw std::invalid_argument(key);
          }
        } catch (const std::exception&) {
          ck.add(sp, "site label must be an integer");
          continue;
        }
        if (value == "minus") {
          sides[label] = Side::minus;
        } else if (value == "plus") {
          sides[label] = Side::plus;
        } else {
          ck.add(sp, "expected \"minus\" or \"plus\"");
        }
      }
    }
    if (n && pairs.size() == p.size()) {
      g = ReflectionGeometry::from_pairs(pairs, static_cast<int>(*n), sides);
    }
  }
  if (g) {
    const auto problems = validate(*g);
    for (const auto& v : problems) {
      ck.add(path, v);
    }
    if (!problems.empty()) {
      return std::nullopt;
    }
  }
  return g;
}

std::optional<CliffordElement> parse_element(const json& j, const std::string& path,
                                             const ReflectionGeometry* g, Checker& ck) {
  if (!j.is_array()) {
    ck.add(path, "expected an array of {indices, re, im}");
    return std::nullopt;
  }
  std::optional<CliffordElement> out;
  if (g) {
    out.emplace(g->generators());
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = path + "[" + std::to_string(i) + "]";
    const auto& t = j[i];
    if (!ck.object(t, tp)) {
      continue;
    }
    ck.keys(t, tp, {"indices", "re", "im"});
    if (!t.contains("indices")) {
      ck.add(tp + ".indices", "missing");
      continue;
    }
    auto idx = ck.int_list(t["indices"], tp + ".indices");
    const double re = t.contains("re") ? ck.number(t["re"], tp + ".re").value_or(0.0) : 0.0;
    const double im = t.contains("im") ? ck.number(t["im"], tp + ".im").value_or(0.0) : 0.0;
    if (idx && out) {
      try {
        *out += CliffordElement::product_of(g->generators(), *idx, Complex{re, im});
      } catch (const std::invalid_argument& e) {
        ck.add(tp + ".indices", e.what());
      }
    }
  }
  return out;
}

std::optional<std::vector<CrossTerm>> parse_cross(const json& j, Checker& ck) {
  const std::string path = "hamiltonian.cross";
  if (!j.is_array()) {
    ck.add(path, "expected an array of {subset, J}");
    return std::nullopt;
  }
  std::vector<CrossTerm> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = path + "[" + std::to_string(i) + "]";
    const auto& t = j[i];
    if (!ck.object(t, tp)) {
      continue;
    }
    ck.keys(t, tp, {"subset", "J"});
    if (!t.contains("subset") || !t.contains("J")) {
      ck.add(tp, "requires 'subset' and 'J'");
      continue;
    }
    auto subset = ck.int_list(t["subset"], tp + ".subset");
    auto coupling = ck.number(t["J"], tp + ".J");
    if (subset && coupling) {
      out.push_back({*subset, *coupling});
    }
  }
  return out;
}

std::optional<RandomModelOptions> parse_random(const json& j, Checker& ck) {
  const std::string path = "hamiltonian.random";
  if (!ck.object(j, path)) {
    return std::nullopt;
  }
  ck.keys(j, path, {"h_minus_terms", "cross_terms", "scale", "h_plus"});
  RandomModelOptions o;
  if (j.contains("h_minus_terms")) {
    o.h_minus_terms = static_cast<int>(
        ck.integer(j["h_minus_terms"], path + ".h_minus_terms", 0).value_or(0));
  }
  if (j.contains("cross_terms")) {
    o.cross_terms =
        static_cast<int>(ck.integer(j["cross_terms"], path + ".cross_terms", 0).value_or(0));
  }
  if (j.contains("scale")) {
    o.scale = ck.positive(j["scale"], path + ".scale").value_or(1.0);
  }
  if (j.contains("h_plus")) {
    if (j["h_plus"] == "mirror") {
      o.mirror = true;
    } else if (j["h_plus"] == "independent") {
      o.mirror = false;
    } else {
      ck.add(path + ".h_plus", "expected \"mirror\" or \"independent\"");
    }
  }
  return o;
}

RunOptions parse_run(const json& j, Checker& ck) {
  RunOptions r;
  const std::string path = "run";
  if (!ck.object(j, path)) {
    return r;
  }
  ck.keys(j, path, {"beta", "tol", "seed", "out", "format", "k_schedule", "samples"});
  if (j.contains("beta")) {
    const auto& b = j["beta"];
    if (b.is_number()) {
      if (auto v = ck.positive(b, path + ".beta")) {
        r.betas.push_back(*v);
      }
    } else if (b.is_array()) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (auto v = ck.positive(b[i], path + ".beta[" + std::to_string(i) + "]")) {
          r.betas.push_back(*v);
        }
      }
    } else {
      ck.add(path + ".beta", "expected a number or an array of numbers");
    }
  }
  if (j.contains("tol")) {
    r.tol = ck.positive(j["tol"], path + ".tol");
  }
  if (j.contains("seed")) {
    if (auto s = ck.integer(j["seed"], path + ".seed", 0)) {
      r.seed = static_cast<std::uint64_t>(*s);
    }
  }
  if (j.contains("out")) {
    if (j["out"].is_string()) {
      r.out = j["out"].get<std::string>();
    } else {
      ck.add(path + ".out", "expected a string");
    }
  }
  if (j.contains("format")) {
    if (j["format"] == "json" || j["format"] == "csv") {
      r.format = j["format"].get<std::string>();
    } else {
      ck.add(path + ".format", "expected \"json\" or \"csv\"");
    }
  }
  if (j.contains("k_schedule")) {
    if (j["k_schedule"].is_array() && j["k_schedule"].empty()) {
      ck.add(path + ".k_schedule", "must not be empty");
    } else if (auto ks = ck.int_list(j["k_schedule"], path + ".k_schedule")) {
      for (std::size_t i = 0; i < ks->size(); ++i) {
        if ((*ks)[i] < 1) {
          ck.add(path + ".k_schedule[" + std::to_string(i) + "]", "must be >= 1");
        }
      }
      r.k_schedule = *ks;
    }
  }
  if (j.contains("samples")) {
    r.samples = static_cast<int>(ck.integer(j["samples"], path + ".samples", 0).value_or(0));
  }
  return r;
}

std::optional<SpinModelSection> parse_spin_model(const json& j, Checker& ck) {
  const std::string path = "spin_model";
  if (!ck.object(j, path)) {
    return std::nullopt;
  }
  ck.keys(j, path, {"kind", "bonds"});
  SpinModelSection s;
  bool good = true;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    ck.add(path + ".kind", "expected \"ising\", \"rotator\" or \"heisenberg\"");
    good = false;
  } else {
    try {
      s.kind = parse_spin_model_kind(j["kind"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      ck.add(path + ".kind", e.what());
      good = false;
    }
  }
  if (!j.contains("bonds") || !j["bonds"].is_array() || j["bonds"].empty()) {
    ck.add(path + ".bonds", "expected a non-empty array of [site, reflected_site]");
    return std::nullopt;
  }
  for (std::size_t i = 0; i < j["bonds"].size(); ++i) {
    const auto& b = j["bonds"][i];
    if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() ||
        !b[1].is_number_integer()) {
      ck.add(path + ".bonds[" + std::to_string(i) + "]", "expected [site, reflected_site]");
      good = false;
      continue;
    }
    s.bonds.emplace_back(b[0].get<int>(), b[1].get<int>());
  }
  return good ? std::optional(s) : std::nullopt;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

ModelConfig parse_config(const std::string& text, std::optional<std::uint64_t> seed_override) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("syntax: ") + e.what()});
  }
  Checker ck;
  if (!ck.object(root, "config")) {
    throw ConfigError(ck.violations());
  }
  ck.keys(root, "config", {"geometry", "hamiltonian", "spin_model", "run"});

  std::optional<ReflectionGeometry> geometry;
  if (root.contains("geometry")) {
    geometry = parse_geometry(root["geometry"], ck);
  } else {
    ck.add("geometry", "missing");
  }
  const ReflectionGeometry* g = geometry ? &*geometry : nullptr;

  RunOptions run = root.contains("run") ? parse_run(root["run"], ck) : RunOptions{};
  if (seed_override) {
    run.seed = seed_override;
  }

  std::optional<CliffordElement> h_minus;
  std::optional<CliffordElement> h_plus;
  std::optional<std::vector<CrossTerm>> cross;
  std::optional<RandomModelOptions> random;
  double beta = 1.0;
  bool has_h_minus = false;
  bool has_h_plus = false;
  if (root.contains("hamiltonian")) {
    const auto& h = root["hamiltonian"];
    if (ck.object(h, "hamiltonian")) {
      ck.keys(h, "hamiltonian", {"h_minus", "cross", "h_plus", "beta", "random"});
      if (h.contains("h_minus")) {
        has_h_minus = true;
        h_minus = parse_element(h["h_minus"], "hamiltonian.h_minus", g, ck);
      }
      if (h.contains("h_plus")) {
        has_h_plus = true;
        if (h["h_plus"].is_string()) {
          if (h["h_plus"] != "mirror") {
            ck.add("hamiltonian.h_plus", "expected \"mirror\" or a monomial list");
          }
          has_h_plus = false;
        } else {
          h_plus = parse_element(h["h_plus"], "hamiltonian.h_plus", g, ck);
        }
      }
      if (h.contains("cross")) {
        cross = parse_cross(h["cross"], ck);
      }
      if (h.contains("random")) {
        random = parse_random(h["random"], ck);
      }
      if (h.contains("beta")) {
        beta = ck.positive(h["beta"], "hamiltonian.beta").value_or(1.0);
      }
    }
  }
  std::optional<SpinModelSection> spin;
  if (root.contains("spin_model")) {
    spin = parse_spin_model(root["spin_model"], ck);
  }

  const int cross_sources = (root.contains("hamiltonian") && root["hamiltonian"].is_object() &&
                             root["hamiltonian"].contains("cross")) +
                            (root.contains("hamiltonian") && root["hamiltonian"].is_object() &&
                             root["hamiltonian"].contains("random")) +
                            root.contains("spin_model");
  if (cross_sources != 1) {
    ck.add("config",
           "exactly one of hamiltonian.cross, hamiltonian.random or spin_model is required");
  }
  if (random && (has_h_minus || has_h_plus)) {
    ck.add("hamiltonian.random", "cannot be combined with explicit h_minus/h_plus");
  }
  if (random && !run.seed) {
    ck.add("run.seed", "required for randomized models");
  }
  if (run.samples > 0 && !run.seed) {
    ck.add("run.seed", "required when run.samples > 0");
  }

  if (!ck.ok() || !g) {
    if (ck.ok()) {
      ck.add("geometry", "could not be built");
    }
    throw ConfigError(ck.violations());
  }

  HamiltonianSpec spec{*g, h_minus.value_or(CliffordElement(g->generators())), {}, h_plus, beta};
  if (random) {
    Rng rng(*run.seed);
    random->beta = beta;
    spec = random_spec(*g, *random, rng);
  } else if (spin) {
    for (const auto& bond : spin->bonds) {
      try {
        auto terms = build_spin_model(spin->kind, *g, bond);
        spec.cross.insert(spec.cross.end(), terms.begin(), terms.end());
      } catch (const std::exception& e) {
        ck.add("spin_model.bonds", e.what());
      }
    }
  } else if (cross) {
    spec.cross = *cross;
  }
  for (const auto& v : structural_violations(spec)) {
    ck.add("hamiltonian", v);
  }
  if (!ck.ok()) {
    throw ConfigError(ck.violations());
  }
  return ModelConfig{std::move(spec), spin, random, run};
}

ModelConfig load_config(const std::filesystem::path& path,
                        std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError({"config: cannot read '" + path.string() + "'"});
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), seed_override);
}

}  // namespace majorana_rp
