// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/random_model.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "majorana_rp/gibbs_rp.hpp"

namespace majorana_rp {

namespace {

// Partial Fisher-Yates on indices: first `count` entries of a random permutation.
std::vector<std::size_t> pick_distinct(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    idx[i] = i;
  }
  count = std::min(count, n);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(count);
  return idx;
}

}  // namespace

CliffordElement random_even_hermitian(const ReflectionGeometry& g, Side side, int terms,
                                      double scale, Rng& rng) {
  auto basis = even_basis(g, side);
  basis.erase(basis.begin());  // identity
  std::uniform_real_distribution<double> coeff(-scale, scale);
  CliffordElement out(g.generators());
  for (std::size_t i : pick_distinct(basis.size(), static_cast<std::size_t>(terms), rng)) {
    const auto& m = basis[i];
    // M^* = reversal_sign * M, so a real coefficient works when the sign is +1
    // and an imaginary one when it is -1.
    const Complex phase = reversal_sign(m.degree()) == 1 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
    out.add_term(m, coeff(rng) * phase);
  }
  return out;
}

CliffordElement random_even_element(const ReflectionGeometry& g, Side side, int terms,
                                    double scale, Rng& rng) {
  const auto basis = even_basis(g, side);
  std::uniform_real_distribution<double> coeff(-scale, scale);
  CliffordElement out(g.generators());
  for (std::size_t i : pick_distinct(basis.size(), static_cast<std::size_t>(terms), rng)) {
    const double re = coeff(rng);
    const double im = coeff(rng);
    out.add_term(basis[i], Complex{re, im});
  }
  return out;
}

std::vector<CrossTerm> random_admissible_cross(const ReflectionGeometry& g, int terms,
                                               double scale, Rng& rng) {
  const auto minus = g.side_indices(Side::minus);
  std::vector<std::vector<int>> candidates;
  const int m = static_cast<int>(minus.size());
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
    const int size = std::popcount(sub);
    if (size > 3) {
      continue;
    }
    std::vector<int> subset;
    for (int k = 0; k < m; ++k) {
      if ((sub >> k) & 1U) {
        subset.push_back(minus[static_cast<std::size_t>(k)]);
      }
    }
    candidates.push_back(std::move(subset));
  }
  std::uniform_real_distribution<double> magnitude(0.1 * scale, scale);
  std::bernoulli_distribution coin(0.5);
  const double odd_sign = coin(rng) ? 1.0 : -1.0;
  std::vector<CrossTerm> out;
  for (std::size_t i : pick_distinct(candidates.size(), static_cast<std::size_t>(terms), rng)) {
    const auto& subset = candidates[i];
    const double sign = subset.size() % 2 == 1 ? odd_sign : -1.0;
    out.push_back({subset, sign * magnitude(rng)});
  }
  return out;
}

HamiltonianSpec random_spec(const ReflectionGeometry& g, const RandomModelOptions& opts,
                            Rng& rng) {
  g.require_valid();
  auto h_minus = random_even_hermitian(g, Side::minus, opts.h_minus_terms, opts.scale, rng);
  auto cross = random_admissible_cross(g, opts.cross_terms, opts.scale, rng);
  std::optional<CliffordElement> h_plus;
  if (!opts.mirror) {
    h_plus = random_even_hermitian(g, Side::plus, opts.h_minus_terms, opts.scale, rng);
  }
  return HamiltonianSpec{g, std::move(h_minus), std::move(cross), std::move(h_plus), opts.beta};
}

}  // namespace majorana_rp
