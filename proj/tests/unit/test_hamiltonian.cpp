// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "majorana_rp/hamiltonian.hpp"
#include "majorana_rp/matrix_rep.hpp"
#include "majorana_rp/random_model.hpp"
#include "test_util.hpp"

namespace mr = majorana_rp;
using mr::CliffordElement;
using mr::Complex;
using mr::CrossTerm;
using mr::HamiltonianSpec;
using mr::ReflectionGeometry;

namespace {

bool mentions(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Sigma, CardinalityModTwo) {
  EXPECT_EQ(mr::sigma({1}), 1);
  EXPECT_EQ(mr::sigma({1, 3}), 0);
  EXPECT_EQ(mr::sigma({1, 2, 5}), 1);
}

TEST(BuildH0, CounterexampleTerm) {
  const auto g = ReflectionGeometry::chain(1, 1);
  const auto h0 = mr::build_h0(g, {{{1}, -1.0}}).h0;
  EXPECT_EQ(h0, CliffordElement::product_of(2, {1, 2}, Complex(0, -1)));
}

TEST(BuildH0, EmptyIsZero) {
  const auto g = ReflectionGeometry::chain(2, 1);
  EXPECT_TRUE(mr::build_h0(g, {}).h0.is_zero());
}

TEST(BuildH0, EvenSubsetSign) {
  const auto g = ReflectionGeometry::from_pairs({{1, 2}, {3, 4}}, 1);
  const auto built = mr::build_h0(g, {{{1, 3}, -2.0}});
  // c1 c3 c2 c4 = -c1 c2 c3 c4 (one transposition), times J = -2.
  EXPECT_EQ(built.h0, CliffordElement::product_of(4, {1, 2, 3, 4}, 2.0));
  const auto cs = oracle::majoranas(2);
  const oracle::Mat direct = -2.0 * oracle::word(cs, {1, 3, 2, 4});
  EXPECT_LT(oracle::max_abs(mr::to_matrix(built.h0) - direct), 1e-15);
  EXPECT_LT(oracle::max_abs(direct - direct.adjoint()), 1e-15);
}

TEST(BuildH0, RejectsBadTerms) {
  const auto g = ReflectionGeometry::chain(2, 1);
  EXPECT_THROW(mr::build_h0(g, {{{3}, -1.0}}), std::invalid_argument);          // plus side
  EXPECT_THROW(mr::build_h0(g, {{{}, -1.0}}), std::invalid_argument);           // empty
  EXPECT_THROW(mr::build_h0(g, {{{1}, -1.0}, {{1}, -2.0}}), std::invalid_argument);
  EXPECT_THROW(mr::build_h0(g, {{{1}, std::nan("")}}), std::invalid_argument);
}

TEST(BuildH0, SelfAdjointAndReflectionSymmetric) {
  const auto g = ReflectionGeometry::chain(2, 2);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  const auto minus = g.side_indices(mr::Side::minus);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<CrossTerm> cross;
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << minus.size()); ++sub) {
      if (rng() % 3 != 0) {
        continue;
      }
      std::vector<int> subset;
      for (std::size_t k = 0; k < minus.size(); ++k) {
        if ((sub >> k) & 1U) {
          subset.push_back(minus[k]);
        }
      }
      cross.push_back({subset, coupling(rng)});
    }
    const auto built = mr::build_h0(g, cross);
    EXPECT_EQ(built.adjoint_residual, 0.0);
    EXPECT_EQ(built.reflection_residual, 0.0);
    const auto m = mr::to_matrix(built.h0);
    EXPECT_LE(oracle::max_abs(m - m.adjoint()), 1e-12);
  }
}

TEST(BuildH0, InteractionAdjointSign) {
  const auto g = ReflectionGeometry::chain(3, 1);
  const auto minus = g.side_indices(mr::Side::minus);
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << minus.size()); ++sub) {
    std::vector<int> subset;
    for (std::size_t k = 0; k < minus.size(); ++k) {
      if ((sub >> k) & 1U) {
        subset.push_back(minus[k]);
      }
    }
    const auto x = mr::interaction_monomial(g, subset);
    const double sign = subset.size() % 2 == 0 ? 1.0 : -1.0;
    EXPECT_EQ(mr::adjoint(x), x * sign);
  }
}

TEST(Assemble, AllZero) {
  const auto g = ReflectionGeometry::chain(1, 1);
  EXPECT_TRUE(mr::assemble(HamiltonianSpec{g, CliffordElement(2), {}, std::nullopt, 1.0}).is_zero());
}

TEST(Assemble, Counterexample) {
  const auto g = ReflectionGeometry::chain(1, 1);
  const HamiltonianSpec spec{g, CliffordElement(2), {{{1}, -1.0}}, std::nullopt, 1.0};
  EXPECT_EQ(mr::assemble(spec), CliffordElement::product_of(2, {1, 2}, Complex(0, -1)));
  auto hot = spec;
  hot.beta = 2.5;
  EXPECT_EQ(mr::assemble(hot), CliffordElement::product_of(2, {1, 2}, Complex(0, -2.5)));
}

TEST(Assemble, MirrorAddsReflectedTerm) {
  const auto g = ReflectionGeometry::chain(2, 2);
  // c1 c3 is real-antisymmetric; i c1 c3 is self-adjoint.
  const auto hm = CliffordElement::product_of(8, {1, 3}, Complex(0, -1));
  const HamiltonianSpec spec{g, hm, {}, std::nullopt, 1.0};
  const auto h = mr::assemble(spec);
  const auto image = mr::reflect(hm, g);
  EXPECT_EQ(h, hm + image);
  EXPECT_EQ(mr::support_side(image, g), mr::Support::plus);
  EXPECT_TRUE(mr::is_self_adjoint(h));
}

TEST(StructuralViolations, ReportsEveryProblem) {
  const auto g = ReflectionGeometry::chain(2, 1);
  HamiltonianSpec spec{g, CliffordElement::generator(4, 1), {{{1}, -1.0}, {{1}, -1.0}},
                       CliffordElement::product_of(4, {1, 2}, Complex(0, 1)), -1.0};
  const auto v = mr::structural_violations(spec);
  EXPECT_TRUE(mentions(v, "beta"));
  EXPECT_TRUE(mentions(v, "h_minus: not even"));
  EXPECT_TRUE(mentions(v, "h_plus: not supported"));
  EXPECT_TRUE(mentions(v, "duplicate"));
  EXPECT_THROW(mr::assemble(spec), std::invalid_argument);
}

TEST(StructuralViolations, NonSelfAdjointHalf) {
  const auto g = ReflectionGeometry::chain(2, 1);
  const HamiltonianSpec spec{g, CliffordElement::product_of(4, {1, 2}), {}, std::nullopt, 1.0};
  EXPECT_TRUE(mentions(mr::structural_violations(spec), "self-adjoint"));
}

TEST(ClassifyCouplings, Examples) {
  EXPECT_TRUE(mr::classify_couplings({{{1}, -1.0}}).certified);
  const auto mixed = mr::classify_couplings({{{1}, 1.0}, {{3}, -1.0}});
  EXPECT_FALSE(mixed.certified);
  EXPECT_TRUE(mentions(mixed.reasons, "{3}"));
  const auto even = mr::classify_couplings({{{1, 3}, 0.5}});
  EXPECT_FALSE(even.certified);
  EXPECT_TRUE(mentions(even.reasons, "{1,3}"));
}

TEST(ClassifyCouplings, ZerosAreSignless) {
  EXPECT_TRUE(mr::classify_couplings({{{1}, 0.0}, {{2}, 1.0}, {{3}, 0.0}, {{4}, 2.0}}).certified);
  EXPECT_TRUE(mr::classify_couplings({{{1, 2}, 0.0}}).certified);
  EXPECT_TRUE(mr::classify_couplings({{{1}, 2.0}, {{3}, 0.5}}).certified);
}

TEST(ClassifyCouplings, InvariantUnderScalingAndPermutation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coupling(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<CrossTerm> cross;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < n; ++t) {
      std::vector<int> subset = rng() % 2 ? std::vector<int>{t + 1} : std::vector<int>{t + 1, t + 7};
      cross.push_back({subset, coupling(rng)});
    }
    const bool base = mr::classify_couplings(cross).certified;
    auto scaled = cross;
    const double s = scale(rng);
    for (auto& t : scaled) {
      t.coupling *= s;
    }
    EXPECT_EQ(mr::classify_couplings(scaled).certified, base);
    auto shuffled = cross;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(mr::classify_couplings(shuffled).certified, base);
  }
}

TEST(RandomModel, AdmissibleAndSelfAdjoint) {
  const auto g = ReflectionGeometry::chain(2, 2);
  mr::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = mr::random_spec(g, {}, rng);
    EXPECT_TRUE(mr::structural_violations(spec).empty());
    EXPECT_TRUE(mr::classify_couplings(spec.cross).certified);
  }
}
