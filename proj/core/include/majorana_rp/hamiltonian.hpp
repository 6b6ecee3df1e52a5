// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/geometry.hpp"

namespace majorana_rp {

/// One interaction across the reflection plane: J * i^sigma * C * theta(C),
/// where C is the canonically ordered product over `subset` (minus side).
struct CrossTerm {
  std::vector<int> subset;
  double coupling = 0.0;
};

/// H = beta * (H_- + H_0 + H_+). `h_plus` empty means H_+ = theta(H_-).
struct HamiltonianSpec {
  ReflectionGeometry geometry;
  CliffordElement h_minus;
  std::vector<CrossTerm> cross;
  std::optional<CliffordElement> h_plus;
  double beta = 1.0;

  bool mirrored() const { return !h_plus.has_value(); }
};

/// |subset| mod 2.
int sigma(const std::vector<int>& subset);

/// C_J for a subset of Majorana indices (sorted ascending, sign +1).
CliffordElement subset_product(int generators, const std::vector<int>& subset);

/// C_J * theta(C_J) for one subset, without coupling or phase.
CliffordElement interaction_monomial(const ReflectionGeometry& g, const std::vector<int>& subset);

/// H_0 with the exact symbolic residuals of its two structural identities.
struct CrossCoupling {
  CliffordElement h0;
  double adjoint_residual = 0.0;     // max |coeff(H_0^* - H_0)|
  double reflection_residual = 0.0;  // max |coeff(theta(H_0) - H_0)|
};

/// Throws std::invalid_argument for subsets touching the plus side, empty or
/// duplicated subsets, repeated indices, or non-finite couplings.
CrossCoupling build_h0(const ReflectionGeometry& g, const std::vector<CrossTerm>& cross);

/// Structural problems with the spec: parity, support and self-adjointness of
/// H_-/H_+, and the cross-term list. Empty means the spec is admissible.
std::vector<std::string> structural_violations(const HamiltonianSpec& spec);

/// theta(H_-) when mirrored, otherwise the explicit H_+.
CliffordElement resolved_h_plus(const HamiltonianSpec& spec);

/// beta * (H_- + H_0 + H_+). Throws std::invalid_argument listing every
/// structural violation.
CliffordElement assemble(const HamiltonianSpec& spec);

struct CouplingVerdict {
  bool certified = true;
  std::vector<std::string> reasons;
};

/// Sign restrictions on cross couplings: all sigma=1 couplings share one sign
/// (set by the first nonzero one in input order) and all sigma=0 couplings are
/// <= 0. Zero couplings are compatible with either sign.
CouplingVerdict classify_couplings(const std::vector<CrossTerm>& cross);

}  // namespace majorana_rp
