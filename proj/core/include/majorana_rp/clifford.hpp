// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "majorana_rp/geometry.hpp"

namespace majorana_rp {

using Complex = std::complex<double>;

/// Generators are stored as bits of a 64-bit word.
inline constexpr int kMaxGenerators = 64;

/// Canonically ordered product c_{i1} c_{i2} ... c_{ik}, i1 < ... < ik, over a
/// Clifford algebra with a fixed number of generators. The empty set is the
/// identity.
class Monomial {
 public:
  explicit Monomial(int generators, std::uint64_t bits = 0);
  /// 1-based indices in any order; duplicates are rejected.
  static Monomial from_indices(int generators, std::span<const int> indices);
  static Monomial from_indices(int generators, std::initializer_list<int> indices) {
    return from_indices(generators, std::span<const int>(indices.begin(), indices.size()));
  }

  int generators() const { return generators_; }
  std::uint64_t bits() const { return bits_; }
  int degree() const;
  bool is_identity() const { return bits_ == 0; }
  bool contains(int index) const;
  std::vector<int> indices() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  int generators_;
  std::uint64_t bits_;
};

std::string to_string(const Monomial& m);

struct SignedMonomial {
  Monomial monomial;
  int sign;  // +1 or -1
};

/// Canonical form of the concatenation m1 m2 with the sign picked up from
/// anticommuting generators into order; repeated generators square to I.
SignedMonomial canonical_product(const Monomial& m1, const Monomial& m2);

/// Canonical form of c_{i1} c_{i2} ... c_{ik} for an arbitrary index sequence.
SignedMonomial canonical_sequence(int generators, std::span<const int> indices);

/// (-1)^{k(k-1)/2}: sign of reversing a degree-k monomial.
int reversal_sign(int degree);

enum class Parity { even, odd, mixed };
enum class Support { minus, plus, both, scalar };

const char* to_string(Parity p);
const char* to_string(Support s);

/// Finite linear combination A = sum_beta a_beta M_beta with complex
/// coefficients. Scalars are elements with only the identity term. Stored
/// coefficients are never exactly zero.
class CliffordElement {
 public:
  using Terms = std::map<std::uint64_t, Complex>;

  explicit CliffordElement(int generators);

  static CliffordElement zero(int generators) { return CliffordElement(generators); }
  static CliffordElement scalar(int generators, Complex value);
  static CliffordElement identity(int generators) { return scalar(generators, 1.0); }
  /// The Majorana c_index (1-based).
  static CliffordElement generator(int generators, int index);
  static CliffordElement from_monomial(const Monomial& m, Complex coefficient = 1.0);
  /// Monomial from 1-based indices in canonical order; the sorting sign is applied.
  static CliffordElement product_of(int generators, std::span<const int> indices,
                                    Complex coefficient = 1.0);
  static CliffordElement product_of(int generators, std::initializer_list<int> indices,
                                    Complex coefficient = 1.0) {
    return product_of(generators, std::span<const int>(indices.begin(), indices.size()),
                      coefficient);
  }

  int generators() const { return generators_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(const Monomial& m) const;
  Complex scalar_part() const;
  double max_abs() const;

  /// Accumulates into the coefficient of m; exact zeros are erased.
  void add_term(const Monomial& m, Complex coefficient);

  /// Drops coefficients with |a| < relative * max |a|. For numerically sourced elements.
  CliffordElement& prune(double relative);

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(Complex s);

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  void require_same(const CliffordElement& other) const;

  int generators_;
  Terms terms_;
};

CliffordElement operator+(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a, const CliffordElement& b);
CliffordElement operator*(CliffordElement a, Complex s);
CliffordElement operator*(Complex s, CliffordElement a);
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

std::string to_string(const CliffordElement& a);

/// Bilinear extension of canonical_product.
CliffordElement mul(const CliffordElement& a, const CliffordElement& b);

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b);

/// Reverses every monomial and conjugates coefficients.
CliffordElement adjoint(const CliffordElement& a);

/// Matrix trace in the 2^N-dimensional representation: 2^N * a_0.
Complex trace(const CliffordElement& a);

/// The anti-linear reflection: indices mapped through the geometry, images
/// re-canonicalized with their sorting sign, coefficients conjugated.
CliffordElement reflect(const CliffordElement& a, const ReflectionGeometry& g);
SignedMonomial reflect(const Monomial& m, const ReflectionGeometry& g);

Parity parity(const CliffordElement& a);
Support support_side(const CliffordElement& a, const ReflectionGeometry& g);

/// max_beta |a_beta - b_beta|.
double max_abs_difference(const CliffordElement& a, const CliffordElement& b);

bool is_self_adjoint(const CliffordElement& a, double tol = 0.0);

}  // namespace majorana_rp
