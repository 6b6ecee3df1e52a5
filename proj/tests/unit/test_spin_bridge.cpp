// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "majorana_rp/gibbs_rp.hpp"
#include "majorana_rp/spin_bridge.hpp"
#include "test_util.hpp"

namespace mr = majorana_rp;
using mr::Axis;
using mr::CliffordElement;
using mr::Complex;
using mr::DenseOperator;
using mr::ReflectionGeometry;

namespace {

constexpr Axis kAxes[] = {Axis::x, Axis::y, Axis::z};

CliffordElement cross_hamiltonian(const ReflectionGeometry& g, mr::SpinModelKind kind) {
  return mr::build_h0(g, mr::build_spin_model(kind, g, {1, 2})).h0;
}

}  // namespace

TEST(Pauli, SquaresToIdentityAndSelfAdjoint) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto s = mr::spin_site(g, 1);
  for (Axis a : kAxes) {
    const auto p = mr::pauli(s, a);
    EXPECT_EQ(mr::mul(p, p), CliffordElement::identity(8));
    EXPECT_EQ(mr::adjoint(p), p);
    EXPECT_EQ(mr::parity(p), mr::Parity::even);
  }
}

TEST(Pauli, RealityPattern) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto s = mr::spin_site(g, 1);
  const DenseOperator x = mr::to_matrix(mr::pauli(s, Axis::x));
  const DenseOperator y = mr::to_matrix(mr::pauli(s, Axis::y));
  const DenseOperator z = mr::to_matrix(mr::pauli(s, Axis::z));
  EXPECT_EQ(x.imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(z.imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(y.real().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Pauli, DistinctSitesCommute) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto sites = mr::spin_sites(g);
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      EXPECT_TRUE(mr::commutator(mr::pauli(sites[0], a), mr::pauli(sites[1], b)).is_zero());
    }
  }
}

TEST(Pauli, ProductIsIZOnChiralSector) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto s = mr::spin_site(g, 1);
  const std::vector<mr::SpinSite> one{s};
  const DenseOperator xy = mr::projected_matrix(mr::mul(mr::pauli(s, Axis::x), mr::pauli(s, Axis::y)), one);
  const DenseOperator z = mr::projected_matrix(mr::pauli(s, Axis::z), one);
  EXPECT_LE(oracle::max_abs(xy - Complex(0, 1) * z), 1e-12);
}

TEST(Gamma5, AlgebraicProperties) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto sites = mr::spin_sites(g);
  for (const auto& s : sites) {
    const auto g5 = mr::gamma5(s);
    EXPECT_EQ(mr::mul(g5, g5), CliffordElement::identity(8));
    EXPECT_EQ(mr::adjoint(g5), g5);
    for (const auto& t : sites) {
      for (Axis a : kAxes) {
        EXPECT_TRUE(mr::commutator(g5, mr::pauli(t, a)).is_zero());
      }
    }
  }
}

TEST(ChiralProjector, RankAndIdempotence) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto sites = mr::spin_sites(g);
  const DenseOperator p = mr::chiral_projector(sites);
  EXPECT_EQ(p.rows(), 16);
  EXPECT_LE(oracle::max_abs(p * p - p), 1e-14);
  EXPECT_LE(oracle::max_abs(p - p.adjoint()), 1e-14);
  EXPECT_NEAR(p.trace().real(), 4.0, 1e-14);
  const DenseOperator v = mr::chiral_isometry(sites);
  EXPECT_EQ(v.cols(), 4);
  EXPECT_LE(oracle::max_abs(v.adjoint() * v - DenseOperator::Identity(4, 4)), 1e-13);
}

TEST(ChiralProjector, WrongFlavorCount) {
  EXPECT_THROW(mr::spin_sites(ReflectionGeometry::chain(1, 2)), std::invalid_argument);
  EXPECT_THROW(mr::chiral_projector(std::vector<mr::SpinSite>{}), std::invalid_argument);
}

TEST(SpinModel, Classification) {
  const auto g = ReflectionGeometry::chain(1, 4);
  using K = mr::SpinModelKind;
  EXPECT_TRUE(mr::classify_couplings(mr::build_spin_model(K::ising, g, {1, 2})).certified);
  EXPECT_TRUE(mr::classify_couplings(mr::build_spin_model(K::rotator, g, {1, 2})).certified);
  const auto heis = mr::classify_couplings(mr::build_spin_model(K::heisenberg, g, {1, 2}));
  EXPECT_FALSE(heis.certified);
  ASSERT_EQ(heis.reasons.size(), 1U);
  EXPECT_NE(heis.reasons[0].find("positive sigma=0"), std::string::npos);
}

TEST(SpinModel, TermsArePairsWithEvenSigma) {
  const auto g = ReflectionGeometry::chain(1, 4);
  for (auto kind : {mr::SpinModelKind::ising, mr::SpinModelKind::rotator,
                    mr::SpinModelKind::heisenberg}) {
    for (const auto& t : mr::build_spin_model(kind, g, {1, 2})) {
      EXPECT_EQ(t.subset.size(), 2U);
      EXPECT_EQ(mr::sigma(t.subset), 0);
    }
    const auto h = cross_hamiltonian(g, kind);
    for (const auto& s : mr::spin_sites(g)) {
      EXPECT_TRUE(mr::commutator(h, mr::gamma5(s)).is_zero());
    }
  }
}

TEST(SpinModel, NonCrossingBond) {
  const auto g = ReflectionGeometry::chain(2, 4);
  EXPECT_THROW(mr::build_spin_model(mr::SpinModelKind::ising, g, {1, 2}), std::invalid_argument);
  EXPECT_THROW(mr::build_spin_model(mr::SpinModelKind::ising, g, {4, 1}), std::invalid_argument);
  EXPECT_NO_THROW(mr::build_spin_model(mr::SpinModelKind::ising, g, {2, 3}));
  EXPECT_THROW(mr::parse_spin_model_kind("xy"), std::invalid_argument);
}

TEST(SpinModel, IsingAndRotatorCertifyPositive) {
  const auto g = ReflectionGeometry::chain(1, 4);
  for (auto kind : {mr::SpinModelKind::ising, mr::SpinModelKind::rotator}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const mr::HamiltonianSpec spec{g, CliffordElement(8), mr::build_spin_model(kind, g, {1, 2}),
                                     std::nullopt, beta};
      const auto r = mr::certify_rp(spec);
      EXPECT_EQ(r.verdict, mr::Verdict::positive) << mr::to_string(kind) << " " << beta;
    }
  }
}

TEST(ProjectedMatrix, SingleSitePauliAlgebra) {
  const auto s = mr::make_spin_site(1, 4, 1);
  const std::vector<mr::SpinSite> one{s};
  std::vector<DenseOperator> p;
  for (Axis a : kAxes) {
    p.push_back(mr::projected_matrix(mr::pauli(s, a), one));
  }
  ASSERT_EQ(p[0].rows(), 2);
  const DenseOperator id = DenseOperator::Identity(2, 2);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      DenseOperator expect = a == b ? id : DenseOperator::Zero(2, 2);
      if (a != b) {
        const int c = 3 - a - b;
        const double eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
        expect = Complex(0, eps) * p[static_cast<std::size_t>(c)];
      }
      EXPECT_LE(oracle::max_abs(p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)] -
                                expect),
                1e-12)
          << a << b;
    }
  }
}

TEST(ProjectedMatrix, IsingBondSpectrum) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto sites = mr::spin_sites(g);
  const DenseOperator h = mr::projected_matrix(cross_hamiltonian(g, mr::SpinModelKind::ising), sites);
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
  const Eigen::Vector4d expect(-1, -1, 1, 1);
  EXPECT_LE((es.eigenvalues() - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ProjectedMatrix, IdentityAndSectorCheck) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto sites = mr::spin_sites(g);
  EXPECT_LE(oracle::max_abs(mr::projected_matrix(CliffordElement::identity(8), sites) -
                            DenseOperator::Identity(4, 4)),
            1e-13);
  EXPECT_THROW(mr::projected_matrix(CliffordElement::generator(8, 1), sites),
               std::invalid_argument);
}

TEST(AlternativePauli, AlsoSatisfiesPauliAlgebra) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const auto s = mr::spin_site(g, 1);
  const std::vector<mr::SpinSite> one{s};
  const auto x = mr::alternative_pauli(s, Axis::x);
  const auto y = mr::alternative_pauli(s, Axis::y);
  const auto z = mr::alternative_pauli(s, Axis::z);
  for (const auto& p : {x, y, z}) {
    EXPECT_EQ(mr::mul(p, p), CliffordElement::identity(8));
    EXPECT_EQ(mr::adjoint(p), p);
  }
  const DenseOperator xy = mr::projected_matrix(mr::mul(x, y), one);
  EXPECT_LE(oracle::max_abs(xy - Complex(0, 1) * mr::projected_matrix(z, one)), 1e-12);
}

TEST(ProjectedMatrix, PartialSiteListKeepsSpectatorModes) {
  const auto g = ReflectionGeometry::chain(1, 4);
  const std::vector<mr::SpinSite> one{mr::spin_site(g, 1)};
  EXPECT_EQ(mr::chiral_isometry(one).cols(), 8);
  EXPECT_EQ(mr::chiral_isometry(mr::spin_sites(g)).cols(), 4);
}
