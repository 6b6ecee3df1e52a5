// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/hamiltonian.hpp"
#include "majorana_rp/matrix_rep.hpp"

namespace majorana_rp {

/// Upper bound on L^k for enumerate_expansion.
inline constexpr std::uint64_t kExpansionGuard = 1'000'000;

/// ((I - H_0/k) exp(-H_-/k) exp(-H_+/k))^k with beta folded into every part.
/// Evaluated by binary powering of the single-step factor.
DenseOperator lie_product_approx(const HamiltonianSpec& spec, int k);

/// Largest singular value, taken as the top eigenvalue of [[0, M], [M^*, 0]].
double operator_norm(const DenseOperator& m);

/// One summand of the k-step expansion. Label 0 is the empty subset; label
/// l >= 1 is spec.cross[l-1].
struct ExpansionTerm {
  std::vector<int> labels;
  std::vector<int> counts;   // Majoranas per factor on the minus side
  double coefficient = 0.0;  // k^-k * prod(-J_l) with -J_0 = k
  int phase_power = 0;       // sum sigma mod 4
};

/// All L^k index sequences with L = 1 + #cross terms, in lexicographic order.
/// Throws std::length_error when L^k exceeds kExpansionGuard.
std::vector<ExpansionTerm> enumerate_expansion(const HamiltonianSpec& spec, int k);

/// Y_{l1..lk} = prod_i C_li theta(C_li) exp(-H_-/k) exp(-H_+/k) as a matrix.
DenseOperator expansion_product(const HamiltonianSpec& spec, const std::vector<int>& labels, int k);

/// sum over terms of i^phase * coefficient * Y. Reconstructs the k-step product.
DenseOperator reconstruct_from_expansion(const HamiltonianSpec& spec,
                                         const std::vector<ExpansionTerm>& terms, int k);

/// True iff the total Majorana count over the sequence is even.
bool parity_filter(const ExpansionTerm& term);

struct YFactorization {
  CliffordElement d;  // C_l1 e^{-H_-/k} C_l2 e^{-H_-/k} ... C_lk e^{-H_-/k}
  Complex phase;      // i^{-sum sigma}
  double residual = 0.0;  // max-entry |Y - phase D theta(D)|
};

/// Requires a mirror-symmetric spec and a term kept by parity_filter
/// (std::invalid_argument otherwise).
YFactorization factorize_y(const ExpansionTerm& term, const HamiltonianSpec& spec, int k);

/// Sign s with prod_i C_li theta(C_li) = s * C theta(C), C = prod_i C_li,
/// computed purely symbolically. Exponentials are omitted: they commute with
/// the opposite-side Majoranas.
int symbolic_reorder_sign(const HamiltonianSpec& spec, const std::vector<int>& labels);

struct MinusSignCount {
  long long count = 0;  // (1/2)(sum n)^2 - (1/2) sum n^2
  int parity = 0;       // count mod 2
  bool consistent = false;  // (-1)^count == i^{-sum (n mod 2)} and the mod-2 shift holds
};

/// Throws std::invalid_argument when sum n is odd or any n is negative.
MinusSignCount count_minus_signs(const std::vector<int>& n_list);

/// n^2 mod 4 == n mod 2.
bool square_mod4_identity(long long n);

struct ConvergenceRow {
  int k = 0;
  double error = 0.0;
  double ratio = 0.0;  // error(previous k) / error(k); NaN on the first row
};

/// Operator-norm error of lie_product_approx against exp(-H) along a k schedule.
std::vector<ConvergenceRow> convergence_table(const HamiltonianSpec& spec,
                                              const std::vector<int>& schedule);

}  // namespace majorana_rp
