// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/matrix_rep.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace majorana_rp {

namespace {

constexpr int kFullExpansionMaxGenerators = 16;

const Complex kPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int modes_of(const CliffordElement& a) {
  if (a.generators() % 2 != 0) {
    throw std::invalid_argument("dense representation needs an even number of generators");
  }
  return a.generators() / 2;
}

}  // namespace

std::size_t dense_bytes(int modes) {
  const std::size_t dim = std::size_t{1} << modes;
  return dim * dim * sizeof(Complex);
}

void require_within_cap(int modes, int cap) {
  if (modes < 0) {
    throw std::invalid_argument("negative mode count");
  }
  if (modes > cap) {
    throw std::length_error("dense operator on " + std::to_string(modes) + " modes needs " +
                            std::to_string(dense_bytes(modes)) + " bytes; cap is " +
                            std::to_string(cap) + " modes");
  }
}

BasisImage apply_monomial(std::uint64_t monomial_bits, std::uint64_t state) {
  // Generators act right to left: highest index first.
  int phase = 0;
  for (std::uint64_t rest = monomial_bits; rest != 0;) {
    const int g = 63 - std::countl_zero(rest);
    rest &= ~(std::uint64_t{1} << g);
    const int mode = g / 2;  // generator g+1 belongs to mode g/2 + 1
    const std::uint64_t bit = std::uint64_t{1} << mode;
    const bool occupied = (state & bit) != 0;
    if (std::popcount(state & (bit - 1)) % 2 != 0) {
      phase += 2;
    }
    if (g % 2 == 1) {
      // c_{2j} = i(a_j - a_j^*): +i when annihilating, -i when creating.
      phase += occupied ? 1 : 3;
    }
    state ^= bit;
  }
  return {state, phase & 3};
}

std::vector<DenseOperator> build_majoranas(int modes, int cap) {
  if (modes < 1) {
    throw std::invalid_argument("build_majoranas: need at least one mode");
  }
  require_within_cap(modes, cap);
  std::vector<DenseOperator> out;
  out.reserve(static_cast<std::size_t>(2 * modes));
  for (int i = 1; i <= 2 * modes; ++i) {
    out.push_back(to_matrix(Monomial(2 * modes, std::uint64_t{1} << (i - 1)), cap));
  }
  return out;
}

DenseOperator to_matrix(const Monomial& m, int cap) {
  return to_matrix(CliffordElement::from_monomial(m), cap);
}

DenseOperator to_matrix(const CliffordElement& a, int cap) {
  const int modes = modes_of(a);
  require_within_cap(modes, cap);
  const Eigen::Index dim = Eigen::Index{1} << modes;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& [bits, c] : a.terms()) {
    for (Eigen::Index s = 0; s < dim; ++s) {
      const auto img = apply_monomial(bits, static_cast<std::uint64_t>(s));
      out(static_cast<Eigen::Index>(img.target), s) += c * kPhases[img.phase];
    }
  }
  return out;
}

int modes_for_dimension(Eigen::Index dim) {
  if (dim < 1 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

Complex expansion_coefficient(const DenseOperator& a, std::uint64_t monomial_bits) {
  const Eigen::Index dim = a.rows();
  Complex acc{};
  for (Eigen::Index s = 0; s < dim; ++s) {
    const auto img = apply_monomial(monomial_bits, static_cast<std::uint64_t>(s));
    acc += std::conj(kPhases[img.phase]) * a(static_cast<Eigen::Index>(img.target), s);
  }
  return acc / static_cast<double>(dim);
}

CliffordElement from_matrix(const DenseOperator& m, std::span<const Monomial> support,
                            double prune_relative) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("from_matrix: operator is not square");
  }
  const int modes = modes_for_dimension(m.rows());
  CliffordElement out(2 * modes);
  for (const auto& mono : support) {
    if (mono.generators() != 2 * modes) {
      throw std::invalid_argument("from_matrix: support monomial over wrong generator count");
    }
    out.add_term(mono, expansion_coefficient(m, mono.bits()));
  }
  return out.prune(prune_relative);
}

CliffordElement from_matrix(const DenseOperator& m, double prune_relative) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("from_matrix: operator is not square");
  }
  const int modes = modes_for_dimension(m.rows());
  const int generators = 2 * modes;
  if (generators > kFullExpansionMaxGenerators) {
    throw std::length_error("from_matrix: full expansion limited to " +
                            std::to_string(kFullExpansionMaxGenerators) +
                            " generators; pass a support list");
  }
  CliffordElement out(generators);
  const std::uint64_t count = std::uint64_t{1} << generators;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    out.add_term(Monomial(generators, bits), expansion_coefficient(m, bits));
  }
  return out.prune(prune_relative);
}

Complex monomial_trace_product(std::uint64_t monomial_bits, const DenseOperator& w) {
  // Tr(M W) = sum_s M(t(s), s) W(s, t(s)).
  const Eigen::Index dim = w.rows();
  Complex acc{};
  for (Eigen::Index s = 0; s < dim; ++s) {
    const auto img = apply_monomial(monomial_bits, static_cast<std::uint64_t>(s));
    acc += kPhases[img.phase] * w(s, static_cast<Eigen::Index>(img.target));
  }
  return acc;
}

Complex trace_product(const CliffordElement& x, const DenseOperator& w) {
  const int modes = modes_of(x);
  if (w.rows() != (Eigen::Index{1} << modes) || w.cols() != w.rows()) {
    throw std::invalid_argument("trace_product: operator dimension does not match element");
  }
  Complex acc{};
  for (const auto& [bits, c] : x.terms()) {
    acc += c * monomial_trace_product(bits, w);
  }
  return acc;
}

DenseOperator reflect_matrix(const DenseOperator& m, const ReflectionGeometry& g) {
  if (m.rows() != m.cols() || m.rows() != (Eigen::Index{1} << g.modes()) ||
      g.generators() % 2 != 0) {
    throw std::invalid_argument("reflect_matrix: operator dimension does not match geometry");
  }
  // Beyond the full-expansion range the symbolic form is still exact: expand
  // over every monomial through the support overload.
  CliffordElement sym(g.generators());
  if (g.generators() <= kFullExpansionMaxGenerators) {
    sym = from_matrix(m, 0.0);
  } else {
    std::vector<Monomial> all;
    const std::uint64_t count = std::uint64_t{1} << g.generators();
    all.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b) {
      all.emplace_back(g.generators(), b);
    }
    sym = from_matrix(m, all, 0.0);
  }
  return to_matrix(reflect(sym, g));
}

void write_csv(std::ostream& os, const DenseOperator& m) {
  const auto old = os.precision(17);
  os << m.rows() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c != 0) {
        os << ',';
      }
      os << m(r, c).real() << ',' << m(r, c).imag();
    }
    os << '\n';
  }
  os.precision(old);
}

}  // namespace majorana_rp
