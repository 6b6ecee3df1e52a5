// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace majorana_rp {

namespace {

std::string subset_string(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    s += (i == 0 ? "" : ",") + std::to_string(subset[i]);
  }
  return s + "}";
}

std::string coupling_string(double j) {
  std::ostringstream os;
  os << j;
  return os.str();
}

std::vector<std::string> cross_violations(const ReflectionGeometry& g,
                                          const std::vector<CrossTerm>& cross) {
  std::vector<std::string> out;
  std::set<std::vector<int>> seen;
  for (std::size_t t = 0; t < cross.size(); ++t) {
    const auto& term = cross[t];
    const std::string tag = "cross[" + std::to_string(t) + "] " + subset_string(term.subset) + ": ";
    if (term.subset.empty()) {
      out.push_back(tag + "empty subset");
      continue;
    }
    if (!std::isfinite(term.coupling)) {
      out.push_back(tag + "coupling is not a finite real number");
    }
    std::vector<int> sorted = term.subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back(tag + "repeated Majorana index");
    }
    bool in_range = true;
    for (int i : sorted) {
      if (i < 1 || i > g.generators()) {
        out.push_back(tag + "index " + std::to_string(i) + " out of range");
        in_range = false;
      }
    }
    if (in_range) {
      for (int i : sorted) {
        if (g.index_side(i) != Side::minus) {
          out.push_back(tag + "index " + std::to_string(i) + " is on the plus side");
        }
      }
    }
    if (!seen.insert(sorted).second) {
      out.push_back(tag + "duplicate subset");
    }
  }
  return out;
}

void check_half(const CliffordElement& h, const ReflectionGeometry& g, Side side,
                const std::string& name, std::vector<std::string>& out) {
  if (h.generators() != g.generators()) {
    out.push_back(name + ": generator count " + std::to_string(h.generators()) +
                  " does not match geometry (" + std::to_string(g.generators()) + ")");
    return;
  }
  if (parity(h) != Parity::even) {
    out.push_back(name + ": not even (parity " + std::string(to_string(parity(h))) + ")");
  }
  const auto supp = support_side(h, g);
  if (supp == Support::both ||
      (supp != Support::scalar && supp != (side == Side::minus ? Support::minus : Support::plus))) {
    out.push_back(name + ": not supported on the " + std::string(to_string(side)) + " side");
  }
  const double adj = max_abs_difference(adjoint(h), h);
  if (adj > 1e-12 * std::max(1.0, h.max_abs())) {
    out.push_back(name + ": not self-adjoint (residual " + coupling_string(adj) + ")");
  }
}

}  // namespace

int sigma(const std::vector<int>& subset) { return static_cast<int>(subset.size() % 2); }

CliffordElement subset_product(int generators, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  return CliffordElement::from_monomial(Monomial::from_indices(generators, sorted));
}

CliffordElement interaction_monomial(const ReflectionGeometry& g, const std::vector<int>& subset) {
  const auto c = subset_product(g.generators(), subset);
  return mul(c, reflect(c, g));
}

CrossCoupling build_h0(const ReflectionGeometry& g, const std::vector<CrossTerm>& cross) {
  const auto problems = cross_violations(g, cross);
  if (!problems.empty()) {
    std::string msg = "invalid cross terms:";
    for (const auto& p : problems) {
      msg += "\n  " + p;
    }
    throw std::invalid_argument(msg);
  }
  CliffordElement h0(g.generators());
  for (const auto& term : cross) {
    const Complex phase = sigma(term.subset) == 1 ? Complex{0.0, 1.0} : Complex{1.0, 0.0};
    h0 += interaction_monomial(g, term.subset) * (term.coupling * phase);
  }
  CrossCoupling out{h0, max_abs_difference(adjoint(h0), h0),
                    max_abs_difference(reflect(h0, g), h0)};
  return out;
}

CliffordElement resolved_h_plus(const HamiltonianSpec& spec) {
  return spec.h_plus ? *spec.h_plus : reflect(spec.h_minus, spec.geometry);
}

std::vector<std::string> structural_violations(const HamiltonianSpec& spec) {
  auto out = validate(spec.geometry);
  if (!out.empty()) {
    return out;
  }
  if (!(spec.beta > 0.0) || !std::isfinite(spec.beta)) {
    out.push_back("beta: must be a positive finite number");
  }
  check_half(spec.h_minus, spec.geometry, Side::minus, "h_minus", out);
  if (spec.h_plus) {
    check_half(*spec.h_plus, spec.geometry, Side::plus, "h_plus", out);
  }
  auto cross = cross_violations(spec.geometry, spec.cross);
  out.insert(out.end(), cross.begin(), cross.end());
  return out;
}

CliffordElement assemble(const HamiltonianSpec& spec) {
  const auto problems = structural_violations(spec);
  if (!problems.empty()) {
    std::string msg = "invalid Hamiltonian spec:";
    for (const auto& p : problems) {
      msg += "\n  " + p;
    }
    throw std::invalid_argument(msg);
  }
  auto built = build_h0(spec.geometry, spec.cross);
  CliffordElement h = spec.h_minus + built.h0 + resolved_h_plus(spec);
  return h * spec.beta;
}

CouplingVerdict classify_couplings(const std::vector<CrossTerm>& cross) {
  CouplingVerdict v;
  int odd_sign = 0;
  for (const auto& term : cross) {
    if (sigma(term.subset) == 1 && term.coupling != 0.0) {
      odd_sign = term.coupling > 0.0 ? 1 : -1;
      break;
    }
  }
  for (std::size_t t = 0; t < cross.size(); ++t) {
    const auto& term = cross[t];
    const std::string tag = "cross[" + std::to_string(t) + "] " + subset_string(term.subset) +
                            " J=" + coupling_string(term.coupling) + ": ";
    if (sigma(term.subset) == 1) {
      const int s = term.coupling > 0.0 ? 1 : (term.coupling < 0.0 ? -1 : 0);
      if (s != 0 && s != odd_sign) {
        v.certified = false;
        v.reasons.push_back(tag + "mixed signs among sigma=1 couplings");
      }
    } else if (term.coupling > 0.0) {
      v.certified = false;
      v.reasons.push_back(tag + "positive sigma=0 coupling");
    }
  }
  return v;
}

}  // namespace majorana_rp
