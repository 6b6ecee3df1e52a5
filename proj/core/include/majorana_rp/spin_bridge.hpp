// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/geometry.hpp"
#include "majorana_rp/hamiltonian.hpp"
#include "majorana_rp/matrix_rep.hpp"

namespace majorana_rp {

enum class Axis { x, y, z };

/// Four Majoranas b^x, b^y, b^z, c on one site. With consecutive indices
/// starting at an odd number, b^x and b^z are real and b^y, c imaginary.
struct SpinSite {
  int site = 0;
  int generators = 0;
  int bx = 0;
  int by = 0;
  int bz = 0;
  int c = 0;

  int b(Axis axis) const;
};

/// Site with flavors (b^x, b^y, b^z, c) on indices first..first+3.
SpinSite make_spin_site(int site, int generators, int first_index);

/// Spin sites of a geometry with four flavors per site, in index order.
/// Throws std::invalid_argument for any other flavor count.
std::vector<SpinSite> spin_sites(const ReflectionGeometry& g);
SpinSite spin_site(const ReflectionGeometry& g, int site);

/// sigma^alpha = i b^alpha c.
CliffordElement pauli(const SpinSite& s, Axis axis);

/// The other half of the rotation generators: sigma^x = -i b^y b^z and
/// cyclic permutations. Not used by the model builders.
CliffordElement alternative_pauli(const SpinSite& s, Axis axis);

/// gamma^5 = b^x b^y b^z c.
CliffordElement gamma5(const SpinSite& s);

/// prod_j (I + gamma_j^5)/2 over the given sites.
DenseOperator chiral_projector(std::span<const SpinSite> sites);

enum class SpinModelKind { ising, rotator, heisenberg };

SpinModelKind parse_spin_model_kind(const std::string& name);
const char* to_string(SpinModelKind kind);

/// Cross terms for one bond (site, theta(site)); `site` must be on the minus
/// side. ising: z at -1; rotator: x, z at -1; heisenberg: x at -1, y at +1,
/// z at -1. Subsets are {b^alpha, c} of the minus site.
std::vector<CrossTerm> build_spin_model(SpinModelKind kind, const ReflectionGeometry& g,
                                        std::pair<int, int> bond);

/// P to_matrix(a) P restricted to the range of P (columns of an isometry
/// spanning the gamma^5 = +1 sector). Throws std::invalid_argument when a
/// does not commute with every gamma^5.
DenseOperator projected_matrix(const CliffordElement& a, std::span<const SpinSite> sites);

/// Orthonormal basis of the chiral sector, one column per state.
DenseOperator chiral_isometry(std::span<const SpinSite> sites);

}  // namespace majorana_rp
