// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/spin_bridge.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace majorana_rp {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_sites(std::span<const SpinSite> sites) {
  if (sites.empty()) {
    throw std::invalid_argument("chiral sector needs at least one spin site");
  }
  for (const auto& s : sites) {
    if (s.generators != sites.front().generators) {
      throw std::invalid_argument("spin sites over different generator counts");
    }
  }
}

}  // namespace

int SpinSite::b(Axis axis) const {
  switch (axis) {
    case Axis::x:
      return bx;
    case Axis::y:
      return by;
    case Axis::z:
      return bz;
  }
  return 0;
}

SpinSite make_spin_site(int site, int generators, int first_index) {
  if (first_index < 1 || first_index + 3 > generators) {
    throw std::invalid_argument("spin site indices outside 1.." + std::to_string(generators));
  }
  return {site, generators, first_index, first_index + 1, first_index + 2, first_index + 3};
}

SpinSite spin_site(const ReflectionGeometry& g, int site) {
  if (g.flavors() != 4) {
    throw std::invalid_argument("spin sites need 4 Majorana flavors per site, geometry has " +
                                std::to_string(g.flavors()));
  }
  return make_spin_site(site, g.generators(), g.index(site, 0));
}

std::vector<SpinSite> spin_sites(const ReflectionGeometry& g) {
  std::vector<SpinSite> out;
  for (int site : g.sites()) {
    out.push_back(spin_site(g, site));
  }
  return out;
}

CliffordElement pauli(const SpinSite& s, Axis axis) {
  return CliffordElement::product_of(s.generators, {s.b(axis), s.c}, kI);
}

CliffordElement alternative_pauli(const SpinSite& s, Axis axis) {
  switch (axis) {
    case Axis::x:
      return CliffordElement::product_of(s.generators, {s.by, s.bz}, -kI);
    case Axis::y:
      return CliffordElement::product_of(s.generators, {s.bz, s.bx}, -kI);
    case Axis::z:
      return CliffordElement::product_of(s.generators, {s.bx, s.by}, -kI);
  }
  throw std::invalid_argument("unknown axis");
}

CliffordElement gamma5(const SpinSite& s) {
  return CliffordElement::product_of(s.generators, {s.bx, s.by, s.bz, s.c});
}

DenseOperator chiral_projector(std::span<const SpinSite> sites) {
  require_sites(sites);
  const int g = sites.front().generators;
  CliffordElement p = CliffordElement::identity(g);
  for (const auto& s : sites) {
    p = mul(p, (CliffordElement::identity(g) + gamma5(s)) * 0.5);
  }
  return to_matrix(p);
}

DenseOperator chiral_isometry(std::span<const SpinSite> sites) {
  const DenseOperator p = chiral_projector(sites);
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(p);
  // Eigenvalues are 0 or 1, ascending: the sector is the trailing block. Each
  // site halves the space; generators outside the sites are left untouched.
  const Eigen::Index rank = p.rows() >> sites.size();
  return es.eigenvectors().rightCols(rank);
}

SpinModelKind parse_spin_model_kind(const std::string& name) {
  if (name == "ising") {
    return SpinModelKind::ising;
  }
  if (name == "rotator") {
    return SpinModelKind::rotator;
  }
  if (name == "heisenberg") {
    return SpinModelKind::heisenberg;
  }
  throw std::invalid_argument("unknown spin model kind '" + name +
                              "' (expected ising, rotator or heisenberg)");
}

const char* to_string(SpinModelKind kind) {
  switch (kind) {
    case SpinModelKind::ising:
      return "ising";
    case SpinModelKind::rotator:
      return "rotator";
    case SpinModelKind::heisenberg:
      return "heisenberg";
  }
  return "?";
}

std::vector<CrossTerm> build_spin_model(SpinModelKind kind, const ReflectionGeometry& g,
                                        std::pair<int, int> bond) {
  const auto [i, j] = bond;
  if (g.reflect_site(i) != j || g.side(i) != Side::minus) {
    throw std::invalid_argument("bond (" + std::to_string(i) + "," + std::to_string(j) +
                                ") does not cross the reflection from the minus side");
  }
  const auto s = spin_site(g, i);
  auto term = [&s](Axis a, double j_coupling) {
    return CrossTerm{{s.b(a), s.c}, j_coupling};
  };
  switch (kind) {
    case SpinModelKind::ising:
      return {term(Axis::z, -1.0)};
    case SpinModelKind::rotator:
      return {term(Axis::x, -1.0), term(Axis::z, -1.0)};
    case SpinModelKind::heisenberg:
      return {term(Axis::x, -1.0), term(Axis::y, 1.0), term(Axis::z, -1.0)};
  }
  throw std::invalid_argument("unknown spin model kind");
}

DenseOperator projected_matrix(const CliffordElement& a, std::span<const SpinSite> sites) {
  require_sites(sites);
  for (const auto& s : sites) {
    const auto comm = commutator(a, gamma5(s));
    if (comm.max_abs() > 1e-12 * std::max(1.0, a.max_abs())) {
      throw std::invalid_argument("projected_matrix: operator does not preserve the chiral sector"
                                  " (fails to commute with gamma5 of site " +
                                  std::to_string(s.site) + ")");
    }
  }
  const DenseOperator v = chiral_isometry(sites);
  return v.adjoint() * to_matrix(a) * v;
}

}  // namespace majorana_rp
