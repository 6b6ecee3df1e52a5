// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace majorana_rp::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIndefinite = 2;

/// Flags common to the subcommands. Flags override the config's run section.
struct Options {
  std::optional<std::string> config;
  std::vector<double> betas;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::vector<int> k_schedule;
  bool dump_matrices = false;  // certify: write beta*H and exp(-beta*H) as CSV under --out
};

int cmd_certify(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_counterexample(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_trotter(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_bounds(const Options& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace majorana_rp::cli
