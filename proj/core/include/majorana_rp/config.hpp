// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "majorana_rp/hamiltonian.hpp"
#include "majorana_rp/random_model.hpp"
#include "majorana_rp/spin_bridge.hpp"

namespace majorana_rp {

/// Raised when a config fails schema or structural validation; carries every
/// violation found in a single pass.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct SpinModelSection {
  SpinModelKind kind = SpinModelKind::ising;
  std::vector<std::pair<int, int>> bonds;
};

struct RunOptions {
  std::vector<double> betas;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::vector<int> k_schedule;
  int samples = 0;  // random even test pairs for bound checks
};

/// A parsed model. `spec` is fully resolved: spin_model bonds and random
/// sections have already been expanded into cross terms and H_-/H_+.
struct ModelConfig {
  HamiltonianSpec spec;
  std::optional<SpinModelSection> spin_model;
  std::optional<RandomModelOptions> random;
  RunOptions run;
};

/// Parses the JSON config. `seed_override` takes precedence over run.seed.
/// Throws ConfigError listing every violation.
ModelConfig parse_config(const std::string& text,
                         std::optional<std::uint64_t> seed_override = std::nullopt);
ModelConfig load_config(const std::filesystem::path& path,
                        std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace majorana_rp
