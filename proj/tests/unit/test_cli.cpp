// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "majorana_rp_cli/cli_commands.hpp"

namespace cli = majorana_rp::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "majorana_rp");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) {
  return std::string(MAJORANA_RP_CONFIG_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("majorana_rp_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(CliCertify, CounterexampleEvenAlgebraIsPositive) {
  const auto r = run({"certify", "--config", config("counterexample.json")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 3U);
  EXPECT_EQ(j["reports"][0]["verdict"], "positive");
  EXPECT_EQ(j["reports"][0]["classification"], "certified");
}

TEST(CliCertify, HeisenbergReportsViolatedClassification) {
  const auto dir = scratch("heisenberg");
  const auto r = run({"certify", "--config", config("heisenberg_bond.json"), "--out",
                      dir.string(), "--format", "csv"});
  EXPECT_TRUE(r.code == cli::kExitOk || r.code == cli::kExitIndefinite);
  const auto j = nlohmann::json::parse(slurp(dir / "rp_report.json"));
  for (const auto& rep : j["reports"]) {
    EXPECT_EQ(rep["classification"], "violated");
    if (rep["verdict"] == "indefinite") {
      EXPECT_FALSE(rep["witness"].is_null());
      EXPECT_LT(rep["witness_value"]["re"].get<double>(), 0.0);
    }
  }
  EXPECT_EQ(slurp(dir / "gram_spectrum.csv").rfind("beta,index,eigenvalue\n", 0), 0U);
}

TEST(CliCertify, StableKeyOrder) {
  const auto r = run({"certify", "--config", config("ising_bond.json"), "--beta", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto keys = {"\"beta\"", "\"side\"", "\"gram_dim\"", "\"min_eigenvalue\"",
                     "\"max_eigenvalue\"", "\"hermiticity_residual\"", "\"verdict\"",
                     "\"witness\""};
  std::size_t pos = 0;
  for (const char* k : keys) {
    const auto found = r.out.find(k, pos);
    ASSERT_NE(found, std::string::npos) << k;
    pos = found;
  }
}

TEST(CliCertify, FixedPointGeometryIsAnError) {
  const auto r = run({"certify", "--config", config("fixed_point.json")});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("fixed point"), std::string::npos);
}

TEST(CliCertify, BadFlagsAreErrors) {
  EXPECT_EQ(run({"certify"}).code, cli::kExitError);
  EXPECT_EQ(run({"certify", "--config", config("ising_bond.json"), "--beta", "-1"}).code,
            cli::kExitError);
  EXPECT_EQ(run({"certify", "--config", config("ising_bond.json"), "--format", "xml"}).code,
            cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
}

TEST(CliCounterexample, MatchesTargetAndIsDeterministic) {
  const auto a = run({"counterexample"});
  const auto b = run({"counterexample"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("target 0 - 2.3504023872876028i"), std::string::npos) << a.out;
}

TEST(CliCounterexample, BetaTwo) {
  const auto r = run({"counterexample", "--beta", "2"});
  EXPECT_EQ(r.code, cli::kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  double deviation = -1.0;
  while (std::getline(lines, line)) {
    if (line.rfind("deviation ", 0) == 0) {
      deviation = std::stod(line.substr(10));
    }
  }
  EXPECT_GE(deviation, 0.0);
  EXPECT_LE(deviation, 1e-12);
  EXPECT_NE(r.out.find(std::to_string(2 * std::sinh(2.0)).substr(0, 6)), std::string::npos);
}

TEST(CliTrotter, CounterexampleRatiosApproachTwo) {
  const auto r = run({"trotter", "--config", config("counterexample.json"), "--beta", "1",
                      "--format", "csv", "--k", "2,4,8,16,32,64,128,256,512,1024"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("k,error,ratio\n2,", 0), 0U);
}

TEST(CliTrotter, ExactSplitPasses) {
  const auto r = run({"trotter", "--config", config("split_h0_zero.json"), "--format", "json"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["rows"]) {
    EXPECT_LE(row["error"].get<double>(), 1e-13);
  }
}

TEST(CliTrotter, Errors) {
  EXPECT_EQ(run({"trotter", "--config", "/nonexistent.json"}).code, cli::kExitError);
  EXPECT_EQ(run({"trotter", "--config", config("counterexample.json")}).code, cli::kExitError)
      << "three betas in the config";
  EXPECT_EQ(run({"trotter", "--config", config("counterexample.json"), "--beta", "1", "--k",
                 "0,2"})
                .code,
            cli::kExitError);
}

TEST(CliBounds, SeededAsymmetricModel) {
  const auto a = run({"bounds", "--config", config("asymmetric_bounds.json")});
  EXPECT_EQ(a.code, cli::kExitOk) << a.err;
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_FALSE(j["symmetric"].get<bool>());
  EXPECT_GE(j["min_slack"].get<double>(), -1e-10);
  EXPECT_EQ(j["checks"].size(), 2U + 2U * 8U);
  const auto b = run({"bounds", "--config", config("asymmetric_bounds.json")});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"bounds", "--config", config("asymmetric_bounds.json"), "--seed", "7"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliBounds, SymmetricModelEquality) {
  const auto r = run({"bounds", "--config", config("ising_bond.json"), "--beta", "1"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["symmetric"].get<bool>());
  EXPECT_LE(j["partition_equality_residual"].get<double>(), 1e-10);
}

TEST(CliOutput, ReportsAreByteIdenticalAcrossRuns) {
  const auto d1 = scratch("det1");
  const auto d2 = scratch("det2");
  for (const auto& d : {d1, d2}) {
    run({"certify", "--config", config("rotator_bond.json"), "--out", d.string(), "--format",
         "csv"});
  }
  EXPECT_EQ(slurp(d1 / "rp_report.json"), slurp(d2 / "rp_report.json"));
  EXPECT_EQ(slurp(d1 / "gram_spectrum.csv"), slurp(d2 / "gram_spectrum.csv"));
}

TEST(CliCertify, DumpMatrices) {
  EXPECT_EQ(run({"certify", "--config", config("counterexample.json"), "--dump-matrices"}).code,
            cli::kExitError);
  const auto dir = scratch("dump");
  const auto r = run({"certify", "--config", config("counterexample.json"), "--beta", "1",
                      "--out", dir.string(), "--dump-matrices"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream h(slurp(dir / "hamiltonian_beta1.csv"));
  std::string line;
  std::getline(h, line);
  EXPECT_EQ(line, "2");
  int rows = 0;
  while (std::getline(h, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
    ++rows;
  }
  EXPECT_EQ(rows, 2);
  // exp(-H) for H = -i c1 theta(c1) has trace 2 cosh 1.
  std::istringstream w(slurp(dir / "gibbs_weight_beta1.csv"));
  std::getline(w, line);
  double trace = 0.0;
  for (int i = 0; i < 2; ++i) {
    std::getline(w, line);
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      v.push_back(std::stod(cell));
    }
    trace += v[static_cast<std::size_t>(2 * i)];
  }
  EXPECT_NEAR(trace, 2.0 * std::cosh(1.0), 1e-14);
}
