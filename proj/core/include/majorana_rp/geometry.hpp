// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace majorana_rp {

enum class Side { minus, plus };

const char* to_string(Side side);

/// Largest number of fermionic modes (2N Majoranas => N modes) any geometry
/// or dense representation is allowed to reach.
inline constexpr int kModeCap = 13;

/// Lattice sites split into two half-lattices exchanged by a reflection.
///
/// Each site carries `flavors` Majoranas. Global Majorana indices run over
/// 1..2N and are assigned site-major, flavor-minor, following the order of
/// `sites()` (the index order). Only the pairing between sites and the
/// minus/plus split are kept; no coordinates are modelled.
///
/// Construction does not validate. Call validate() (or require_valid()) before
/// using the index maps of a hand-built geometry.
class ReflectionGeometry {
 public:
  ReflectionGeometry(std::vector<int> index_order, std::map<int, Side> side,
                     std::map<int, int> theta, int flavors);

  /// 1D chain of 2M sites, site i reflected onto 2M+1-i, sites 1..M on the
  /// minus side. Minus sites take indices first; plus sites follow in mirror
  /// order so that index j on the minus side reflects onto j + M*n.
  static ReflectionGeometry chain(int sites_per_side, int flavors);

  /// Explicit pairing table. By default the first site of each pair is on the
  /// minus side; `side_overrides` replaces individual assignments and moves the
  /// partner to the opposite side. Indices are assigned in ascending label order.
  static ReflectionGeometry from_pairs(const std::vector<std::pair<int, int>>& pairs, int flavors,
                                       const std::map<int, Side>& side_overrides = {});

  const std::vector<int>& sites() const { return index_order_; }
  int flavors() const { return flavors_; }
  int generators() const { return static_cast<int>(index_order_.size()) * flavors_; }
  int modes() const { return generators() / 2; }

  Side side(int site) const;
  int reflect_site(int site) const;

  /// Global 1-based Majorana index of (site, flavor), flavor in [0, flavors).
  int index(int site, int flavor) const;
  int site_of(int index) const;
  int flavor_of(int index) const;
  Side index_side(int index) const;
  int reflect_index(int index) const;

  std::vector<int> side_indices(Side side) const;
  std::uint64_t side_mask(Side side) const;

  /// Throws std::invalid_argument listing every violation if validate() is non-empty.
  void require_valid() const;

  friend std::vector<std::string> validate(const ReflectionGeometry& g);
  friend bool operator==(const ReflectionGeometry&, const ReflectionGeometry&) = default;

 private:
  std::vector<int> index_order_;
  std::map<int, Side> side_;
  std::map<int, int> theta_;
  int flavors_;
  std::map<int, int> position_;
};

/// Every invariant violation, one message per failing site. Empty means valid.
std::vector<std::string> validate(const ReflectionGeometry& g);

}  // namespace majorana_rp
