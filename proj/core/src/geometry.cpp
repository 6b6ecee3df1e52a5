// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace majorana_rp {

const char* to_string(Side side) { return side == Side::minus ? "minus" : "plus"; }

ReflectionGeometry::ReflectionGeometry(std::vector<int> index_order, std::map<int, Side> side,
                                       std::map<int, int> theta, int flavors)
    : index_order_(std::move(index_order)),
      side_(std::move(side)),
      theta_(std::move(theta)),
      flavors_(flavors) {
  for (std::size_t i = 0; i < index_order_.size(); ++i) {
    position_.emplace(index_order_[i], static_cast<int>(i));
  }
}

ReflectionGeometry ReflectionGeometry::chain(int sites_per_side, int flavors) {
  if (sites_per_side < 1 || flavors < 1) {
    throw std::invalid_argument("chain: sites_per_side and flavors must be >= 1");
  }
  if (sites_per_side * flavors > kModeCap) {
    throw std::invalid_argument("chain: " + std::to_string(2 * sites_per_side * flavors) +
                                " Majoranas exceed the cap of " + std::to_string(2 * kModeCap));
  }
  const int m = sites_per_side;
  std::vector<int> order;
  std::map<int, Side> side;
  std::map<int, int> theta;
  for (int s = 1; s <= m; ++s) {
    order.push_back(s);
  }
  for (int s = 1; s <= m; ++s) {
    order.push_back(2 * m + 1 - s);
  }
  for (int s = 1; s <= 2 * m; ++s) {
    side[s] = s <= m ? Side::minus : Side::plus;
    theta[s] = 2 * m + 1 - s;
  }
  return ReflectionGeometry(std::move(order), std::move(side), std::move(theta), flavors);
}

ReflectionGeometry ReflectionGeometry::from_pairs(const std::vector<std::pair<int, int>>& pairs,
                                                  int flavors,
                                                  const std::map<int, Side>& side_overrides) {
  std::set<int> labels;
  std::map<int, Side> side;
  std::map<int, int> theta;
  for (const auto& [a, b] : pairs) {
    labels.insert(a);
    labels.insert(b);
    // Later pairs do not silently overwrite earlier ones; validate() flags the
    // resulting non-involution instead.
    theta.emplace(a, b);
    theta.emplace(b, a);
    side.emplace(a, Side::minus);
    side.emplace(b, Side::plus);
  }
  // An override flips the pair, so the partner lands on the opposite side
  // unless it carries an override of its own.
  for (const auto& [site, s] : side_overrides) {
    side[site] = s;
    const auto partner = theta.find(site);
    if (partner != theta.end() && partner->second != site &&
        side_overrides.count(partner->second) == 0) {
      side[partner->second] = s == Side::minus ? Side::plus : Side::minus;
    }
  }
  return ReflectionGeometry(std::vector<int>(labels.begin(), labels.end()), std::move(side),
                            std::move(theta), flavors);
}

Side ReflectionGeometry::side(int site) const {
  auto it = side_.find(site);
  if (it == side_.end()) {
    throw std::out_of_range("unknown site " + std::to_string(site));
  }
  return it->second;
}

int ReflectionGeometry::reflect_site(int site) const {
  auto it = theta_.find(site);
  if (it == theta_.end()) {
    throw std::out_of_range("site " + std::to_string(site) + " has no reflection partner");
  }
  return it->second;
}

int ReflectionGeometry::index(int site, int flavor) const {
  auto it = position_.find(site);
  if (it == position_.end() || flavor < 0 || flavor >= flavors_) {
    throw std::out_of_range("no Majorana for site " + std::to_string(site) + " flavor " +
                            std::to_string(flavor));
  }
  return it->second * flavors_ + flavor + 1;
}

int ReflectionGeometry::site_of(int index) const {
  if (index < 1 || index > generators()) {
    throw std::out_of_range("Majorana index " + std::to_string(index) + " out of range");
  }
  return index_order_[static_cast<std::size_t>((index - 1) / flavors_)];
}

int ReflectionGeometry::flavor_of(int index) const {
  if (index < 1 || index > generators()) {
    throw std::out_of_range("Majorana index " + std::to_string(index) + " out of range");
  }
  return (index - 1) % flavors_;
}

Side ReflectionGeometry::index_side(int index) const { return side(site_of(index)); }

int ReflectionGeometry::reflect_index(int index) const {
  return this->index(reflect_site(site_of(index)), flavor_of(index));
}

std::vector<int> ReflectionGeometry::side_indices(Side s) const {
  std::vector<int> out;
  for (int i = 1; i <= generators(); ++i) {
    if (index_side(i) == s) {
      out.push_back(i);
    }
  }
  return out;
}

std::uint64_t ReflectionGeometry::side_mask(Side s) const {
  std::uint64_t mask = 0;
  for (int i : side_indices(s)) {
    mask |= std::uint64_t{1} << (i - 1);
  }
  return mask;
}

void ReflectionGeometry::require_valid() const {
  const auto violations = validate(*this);
  if (violations.empty()) {
    return;
  }
  std::string msg = "invalid reflection geometry:";
  for (const auto& v : violations) {
    msg += "\n  " + v;
  }
  throw std::invalid_argument(msg);
}

std::vector<std::string> validate(const ReflectionGeometry& g) {
  std::vector<std::string> out;
  if (g.flavors_ < 1) {
    out.push_back("flavors: must be >= 1, got " + std::to_string(g.flavors_));
  }
  if (g.index_order_.empty()) {
    out.push_back("sites: geometry has no sites");
  }
  if (g.position_.size() != g.index_order_.size()) {
    out.push_back("sites: duplicate site labels in index order");
  }
  if (g.flavors_ >= 1 && g.generators() > 2 * kModeCap) {
    out.push_back("size: " + std::to_string(g.generators()) + " Majoranas exceed the cap of " +
                  std::to_string(2 * kModeCap));
  }
  for (int site : g.index_order_) {
    const std::string tag = "site " + std::to_string(site) + ": ";
    auto side_it = g.side_.find(site);
    if (side_it == g.side_.end()) {
      out.push_back(tag + "no side assignment");
    }
    auto th = g.theta_.find(site);
    if (th == g.theta_.end()) {
      out.push_back(tag + "no reflection partner");
      continue;
    }
    const int image = th->second;
    if (image == site) {
      out.push_back(tag + "fixed point of the reflection");
      continue;
    }
    if (!g.position_.contains(image)) {
      out.push_back(tag + "reflects onto unknown site " + std::to_string(image));
      continue;
    }
    auto back = g.theta_.find(image);
    if (back == g.theta_.end() || back->second != site) {
      out.push_back(tag + "reflection is not an involution (image " + std::to_string(image) +
                    " does not map back)");
    }
    auto image_side = g.side_.find(image);
    if (side_it != g.side_.end() && image_side != g.side_.end() &&
        side_it->second == image_side->second) {
      out.push_back(tag + "side-swap: reflects onto site " + std::to_string(image) +
                    " on the same (" + to_string(side_it->second) + ") side");
    }
  }
  for (const auto& [site, image] : g.theta_) {
    if (!g.position_.contains(site)) {
      out.push_back("site " + std::to_string(site) + ": reflection entry for unknown site");
    }
  }
  return out;
}

}  // namespace majorana_rp
