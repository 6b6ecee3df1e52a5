// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace majorana_rp {

namespace {

void check_generators(int generators) {
  if (generators < 0 || generators > kMaxGenerators) {
    throw std::invalid_argument("generator count " + std::to_string(generators) +
                                " outside [0, " + std::to_string(kMaxGenerators) + "]");
  }
}

std::uint64_t generator_mask(int generators) {
  return generators == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << generators) - 1;
}

void require_same_generators(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("generator count mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

// Parity of #{(a, b) : a in lhs, b in rhs, a > b}.
int product_sign(std::uint64_t lhs, std::uint64_t rhs) {
  int swaps = 0;
  while (rhs != 0) {
    const int b = std::countr_zero(rhs);
    rhs &= rhs - 1;
    const std::uint64_t above = b == 63 ? 0 : lhs >> (b + 1);
    swaps += std::popcount(above);
  }
  return (swaps & 1) != 0 ? -1 : 1;
}

}  // namespace

Monomial::Monomial(int generators, std::uint64_t bits) : generators_(generators), bits_(bits) {
  check_generators(generators);
  if ((bits & ~generator_mask(generators)) != 0) {
    throw std::invalid_argument("monomial uses generators beyond " + std::to_string(generators));
  }
}

Monomial Monomial::from_indices(int generators, std::span<const int> indices) {
  check_generators(generators);
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > generators) {
      throw std::invalid_argument("Majorana index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(generators));
    }
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if ((bits & bit) != 0) {
      throw std::invalid_argument("repeated Majorana index " + std::to_string(i));
    }
    bits |= bit;
  }
  return Monomial(generators, bits);
}

int Monomial::degree() const { return std::popcount(bits_); }

bool Monomial::contains(int index) const {
  return index >= 1 && index <= generators_ && ((bits_ >> (index - 1)) & 1U) != 0;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_identity()) {
    return "I";
  }
  std::string s = "M{";
  bool first = true;
  for (int i : m.indices()) {
    if (!first) {
      s += ',';
    }
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

SignedMonomial canonical_product(const Monomial& m1, const Monomial& m2) {
  require_same_generators(m1.generators(), m2.generators());
  return {Monomial(m1.generators(), m1.bits() ^ m2.bits()), product_sign(m1.bits(), m2.bits())};
}

SignedMonomial canonical_sequence(int generators, std::span<const int> indices) {
  SignedMonomial acc{Monomial(generators), 1};
  for (int i : indices) {
    const int single[] = {i};
    auto step = canonical_product(acc.monomial, Monomial::from_indices(generators, single));
    acc = {step.monomial, acc.sign * step.sign};
  }
  return acc;
}

int reversal_sign(int degree) { return ((degree * (degree - 1) / 2) % 2) == 0 ? 1 : -1; }

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::mixed:
      return "mixed";
  }
  return "?";
}

const char* to_string(Support s) {
  switch (s) {
    case Support::minus:
      return "minus";
    case Support::plus:
      return "plus";
    case Support::both:
      return "both";
    case Support::scalar:
      return "scalar";
  }
  return "?";
}

CliffordElement::CliffordElement(int generators) : generators_(generators) {
  check_generators(generators);
}

CliffordElement CliffordElement::scalar(int generators, Complex value) {
  CliffordElement e(generators);
  e.add_term(Monomial(generators), value);
  return e;
}

CliffordElement CliffordElement::generator(int generators, int index) {
  const int idx[] = {index};
  return from_monomial(Monomial::from_indices(generators, idx));
}

CliffordElement CliffordElement::from_monomial(const Monomial& m, Complex coefficient) {
  CliffordElement e(m.generators());
  e.add_term(m, coefficient);
  return e;
}

CliffordElement CliffordElement::product_of(int generators, std::span<const int> indices,
                                            Complex coefficient) {
  const auto sm = canonical_sequence(generators, indices);
  return from_monomial(sm.monomial, coefficient * static_cast<double>(sm.sign));
}

Complex CliffordElement::coefficient(const Monomial& m) const {
  require_same_generators(generators_, m.generators());
  auto it = terms_.find(m.bits());
  return it == terms_.end() ? Complex{} : it->second;
}

Complex CliffordElement::scalar_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Complex{} : it->second;
}

double CliffordElement::max_abs() const {
  double m = 0.0;
  for (const auto& [bits, c] : terms_) {
    m = std::max(m, std::abs(c));
  }
  return m;
}

void CliffordElement::add_term(const Monomial& m, Complex coefficient) {
  require_same_generators(generators_, m.generators());
  if (coefficient == Complex{}) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m.bits(), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == Complex{}) {
      terms_.erase(it);
    }
  }
}

CliffordElement& CliffordElement::prune(double relative) {
  const double cutoff = relative * max_abs();
  std::erase_if(terms_, [cutoff](const auto& kv) { return std::abs(kv.second) < cutoff; });
  return *this;
}

void CliffordElement::require_same(const CliffordElement& other) const {
  require_same_generators(generators_, other.generators_);
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  require_same(other);
  for (const auto& [bits, c] : other.terms_) {
    add_term(Monomial(generators_, bits), c);
  }
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  require_same(other);
  for (const auto& [bits, c] : other.terms_) {
    add_term(Monomial(generators_, bits), -c);
  }
  return *this;
}

CliffordElement& CliffordElement::operator*=(Complex s) {
  if (s == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [bits, c] : terms_) {
    c *= s;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
  return *this;
}

CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
CliffordElement operator*(CliffordElement a, Complex s) { return a *= s; }
CliffordElement operator*(Complex s, CliffordElement a) { return a *= s; }
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return mul(a, b); }

std::string to_string(const CliffordElement& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [bits, c] : a.terms()) {
    if (!first) {
      os << " + ";
    }
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)*"
       << to_string(Monomial(a.generators(), bits));
    first = false;
  }
  return os.str();
}

CliffordElement mul(const CliffordElement& a, const CliffordElement& b) {
  require_same_generators(a.generators(), b.generators());
  CliffordElement out(a.generators());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const double sign = product_sign(ba, bb);
      out.add_term(Monomial(a.generators(), ba ^ bb), sign * ca * cb);
    }
  }
  return out;
}

CliffordElement commutator(const CliffordElement& a, const CliffordElement& b) {
  return mul(a, b) - mul(b, a);
}

CliffordElement adjoint(const CliffordElement& a) {
  CliffordElement out(a.generators());
  for (const auto& [bits, c] : a.terms()) {
    const double sign = reversal_sign(std::popcount(bits));
    out.add_term(Monomial(a.generators(), bits), sign * std::conj(c));
  }
  return out;
}

Complex trace(const CliffordElement& a) {
  if (a.generators() % 2 != 0) {
    throw std::invalid_argument("trace needs an even number of generators");
  }
  return std::ldexp(1.0, a.generators() / 2) * a.scalar_part();
}

SignedMonomial reflect(const Monomial& m, const ReflectionGeometry& g) {
  require_same_generators(m.generators(), g.generators());
  std::vector<int> image;
  for (int i : m.indices()) {
    image.push_back(g.reflect_index(i));
  }
  return canonical_sequence(m.generators(), image);
}

CliffordElement reflect(const CliffordElement& a, const ReflectionGeometry& g) {
  require_same_generators(a.generators(), g.generators());
  CliffordElement out(a.generators());
  for (const auto& [bits, c] : a.terms()) {
    const auto image = reflect(Monomial(a.generators(), bits), g);
    out.add_term(image.monomial, static_cast<double>(image.sign) * std::conj(c));
  }
  return out;
}

Parity parity(const CliffordElement& a) {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [bits, c] : a.terms()) {
    (std::popcount(bits) % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) {
    return Parity::mixed;
  }
  return has_odd ? Parity::odd : Parity::even;
}

Support support_side(const CliffordElement& a, const ReflectionGeometry& g) {
  require_same_generators(a.generators(), g.generators());
  const std::uint64_t minus = g.side_mask(Side::minus);
  const std::uint64_t plus = g.side_mask(Side::plus);
  bool uses_minus = false;
  bool uses_plus = false;
  for (const auto& [bits, c] : a.terms()) {
    uses_minus = uses_minus || (bits & minus) != 0;
    uses_plus = uses_plus || (bits & plus) != 0;
  }
  if (uses_minus && uses_plus) {
    return Support::both;
  }
  if (uses_minus) {
    return Support::minus;
  }
  return uses_plus ? Support::plus : Support::scalar;
}

double max_abs_difference(const CliffordElement& a, const CliffordElement& b) {
  return (a - b).max_abs();
}

bool is_self_adjoint(const CliffordElement& a, double tol) {
  return max_abs_difference(adjoint(a), a) <= tol;
}

}  // namespace majorana_rp
