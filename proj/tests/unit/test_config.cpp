// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "majorana_rp/config.hpp"

namespace mr = majorana_rp;

namespace {

std::string config_path(const std::string& name) {
  return std::string(MAJORANA_RP_CONFIG_DIR) + "/" + name;
}

std::vector<std::string> violations_of(const std::string& text) {
  try {
    mr::parse_config(text);
  } catch (const mr::ConfigError& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Config, SampleConfigsParse) {
  for (const char* name : {"counterexample.json", "ising_bond.json", "rotator_bond.json",
                           "heisenberg_bond.json", "asymmetric_bounds.json", "split_h0_zero.json",
                           "chain8_trotter.json"}) {
    EXPECT_NO_THROW(mr::load_config(config_path(name))) << name;
  }
}

TEST(Config, CounterexampleResolves) {
  const auto cfg = mr::load_config(config_path("counterexample.json"));
  EXPECT_EQ(cfg.spec.geometry.generators(), 2);
  ASSERT_EQ(cfg.spec.cross.size(), 1U);
  EXPECT_EQ(cfg.spec.cross[0].subset, std::vector<int>{1});
  EXPECT_EQ(cfg.spec.cross[0].coupling, -1.0);
  EXPECT_TRUE(cfg.spec.mirrored());
  EXPECT_EQ(cfg.run.betas, (std::vector<double>{0.5, 1.0, 2.0}));
}

TEST(Config, SpinModelExpandsToCrossTerms) {
  const auto cfg = mr::load_config(config_path("heisenberg_bond.json"));
  ASSERT_TRUE(cfg.spin_model.has_value());
  EXPECT_EQ(cfg.spec.cross.size(), 3U);
}

TEST(Config, FixedPointGeometryIsRejected) {
  try {
    mr::load_config(config_path("fixed_point.json"));
    FAIL();
  } catch (const mr::ConfigError& e) {
    EXPECT_TRUE(mentions(e.violations(), "fixed point"));
  }
}

TEST(Config, ListsEveryViolationInOnePass) {
  const auto v = violations_of(R"({
    "geometry": {"chain": {"sites_per_side": 1, "flavors": 1}, "colour": 3},
    "hamiltonian": {"cross": [{"subset": [1], "J": "big"}], "beta": -2, "extra": true},
    "run": {"format": "xml", "k_schedule": [], "mystery": 1},
    "unknown_section": {}
  })");
  EXPECT_TRUE(mentions(v, "geometry.colour: unknown key"));
  EXPECT_TRUE(mentions(v, "hamiltonian.cross[0].J"));
  EXPECT_TRUE(mentions(v, "hamiltonian.beta"));
  EXPECT_TRUE(mentions(v, "hamiltonian.extra: unknown key"));
  EXPECT_TRUE(mentions(v, "run.format"));
  EXPECT_TRUE(mentions(v, "run.k_schedule"));
  EXPECT_TRUE(mentions(v, "run.mystery: unknown key"));
  EXPECT_TRUE(mentions(v, "config.unknown_section: unknown key"));
  EXPECT_GE(v.size(), 8U);
}

TEST(Config, ExactlyOneInteractionSource) {
  EXPECT_TRUE(mentions(violations_of(R"({"geometry": {"chain": {"sites_per_side": 1}}})"),
                       "exactly one of"));
  EXPECT_TRUE(mentions(violations_of(R"({
    "geometry": {"chain": {"sites_per_side": 1, "flavors": 4}},
    "hamiltonian": {"cross": []},
    "spin_model": {"kind": "ising", "bonds": [[1, 2]]}})"),
                       "exactly one of"));
}

TEST(Config, RandomSectionNeedsSeed) {
  const std::string text = R"({
    "geometry": {"chain": {"sites_per_side": 2}},
    "hamiltonian": {"random": {"cross_terms": 2}}})";
  EXPECT_TRUE(mentions(violations_of(text), "run.seed"));
  const auto a = mr::parse_config(text, 99);
  const auto b = mr::parse_config(text, 99);
  EXPECT_EQ(a.spec.h_minus, b.spec.h_minus);
  EXPECT_EQ(a.spec.cross.size(), 2U);
  const auto c = mr::parse_config(text, 100);
  EXPECT_NE(a.spec.h_minus, c.spec.h_minus);
}

TEST(Config, StructuralViolationsSurface) {
  const auto v = violations_of(R"({
    "geometry": {"chain": {"sites_per_side": 2}},
    "hamiltonian": {"h_minus": [{"indices": [1], "re": 1.0}], "cross": [{"subset": [3], "J": -1}]}})");
  EXPECT_TRUE(mentions(v, "not even"));
  EXPECT_TRUE(mentions(v, "{3}"));
}

TEST(Config, ExplicitPairsWithSides) {
  const auto cfg = mr::parse_config(R"({
    "geometry": {"pairs": [[1, 2], [3, 4]], "flavors": 1, "side": {"2": "minus", "4": "minus"}},
    "hamiltonian": {"cross": [{"subset": [2], "J": -1}]}})");
  EXPECT_EQ(cfg.spec.geometry.side(2), mr::Side::minus);
  EXPECT_EQ(cfg.spec.geometry.side(1), mr::Side::plus);
}

TEST(Config, SyntaxErrorAndMissingFile) {
  EXPECT_THROW(mr::parse_config("{ not json"), mr::ConfigError);
  EXPECT_THROW(mr::load_config("/nonexistent/config.json"), mr::ConfigError);
}
