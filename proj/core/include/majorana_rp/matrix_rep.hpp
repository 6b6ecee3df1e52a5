// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/geometry.hpp"

namespace majorana_rp {

/// Operator on the 2^N-dimensional Fock space. Basis state s is the subset of
/// modes {j : bit j-1 of s set}; creation operators act by exterior
/// multiplication, a_j^* e_S = (-1)^{#{k in S : k < j}} e_{S+j}.
using DenseOperator = Eigen::MatrixXcd;

/// Bytes needed for one dense operator on `modes` modes.
std::size_t dense_bytes(int modes);

/// Throws std::length_error (with the memory estimate) when modes exceeds cap.
void require_within_cap(int modes, int cap = kModeCap);

/// c_{2j-1} = a_j + a_j^*, c_{2j} = i (a_j - a_j^*), j = 1..N. Odd-indexed
/// matrices are real, even-indexed ones purely imaginary.
std::vector<DenseOperator> build_majoranas(int modes, int cap = kModeCap);

/// Action of a monomial on a basis vector: M e_s = i^phase e_target.
struct BasisImage {
  std::uint64_t target;
  int phase;  // power of i, in 0..3
};
BasisImage apply_monomial(std::uint64_t monomial_bits, std::uint64_t state);

DenseOperator to_matrix(const CliffordElement& a, int cap = kModeCap);
DenseOperator to_matrix(const Monomial& m, int cap = kModeCap);

/// Full expansion a_beta = 2^-N Tr(M_beta^* A) over all 4^N monomials.
/// Only permitted for 2N <= 16; larger operators need an explicit support.
/// Coefficients below prune_relative * max|a| are dropped.
CliffordElement from_matrix(const DenseOperator& m, double prune_relative = 1e-14);

/// Expansion restricted to the listed monomials.
CliffordElement from_matrix(const DenseOperator& m, std::span<const Monomial> support,
                            double prune_relative = 1e-14);

/// 2^-N Tr(M_beta^* A) for a single monomial.
Complex expansion_coefficient(const DenseOperator& a, std::uint64_t monomial_bits);

/// Tr(M W) in O(2^N).
Complex monomial_trace_product(std::uint64_t monomial_bits, const DenseOperator& w);

/// Tr(X W) = sum_beta x_beta Tr(M_beta W), accumulated in key order.
Complex trace_product(const CliffordElement& x, const DenseOperator& w);

/// Algebraic reflection of a dense operator: to_matrix(reflect(from_matrix(m))).
DenseOperator reflect_matrix(const DenseOperator& m, const ReflectionGeometry& g);

/// Modes N such that dim == 2^N; throws std::invalid_argument otherwise.
int modes_for_dimension(Eigen::Index dim);

/// Debug dump: first line "dim", then one row per line of "re,im" pairs
/// separated by commas, printed with 17 significant digits.
void write_csv(std::ostream& os, const DenseOperator& m);

}  // namespace majorana_rp
