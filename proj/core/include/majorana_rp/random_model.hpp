// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/geometry.hpp"
#include "majorana_rp/hamiltonian.hpp"

namespace majorana_rp {

using Rng = std::mt19937_64;

/// Even, self-adjoint element on one side built from `terms` distinct
/// non-identity even monomials (fewer if the side has fewer) with magnitudes
/// up to `scale`.
CliffordElement random_even_hermitian(const ReflectionGeometry& g, Side side, int terms,
                                      double scale, Rng& rng);

/// Even element on one side with arbitrary complex coefficients, identity included.
CliffordElement random_even_element(const ReflectionGeometry& g, Side side, int terms,
                                    double scale, Rng& rng);

/// Distinct minus-side subsets (size 1..3) with couplings satisfying the sign
/// restrictions: one common sign for odd subsets, <= 0 for even subsets.
std::vector<CrossTerm> random_admissible_cross(const ReflectionGeometry& g, int terms,
                                               double scale, Rng& rng);

struct RandomModelOptions {
  int h_minus_terms = 4;
  int cross_terms = 3;
  double scale = 1.0;
  bool mirror = true;  // false: independent random H_+
  double beta = 1.0;
};

HamiltonianSpec random_spec(const ReflectionGeometry& g, const RandomModelOptions& opts, Rng& rng);

}  // namespace majorana_rp
