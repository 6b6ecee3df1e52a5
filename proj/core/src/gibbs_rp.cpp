// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/gibbs_rp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace majorana_rp {

namespace {

double rp_norm(const CliffordElement& a, const DenseOperator& w, const ReflectionGeometry& g) {
  return std::sqrt(std::max(0.0, rp_functional(a, a, w, g).real()));
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree();
  }
  return a.indices() < b.indices();
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::positive ? "positive" : "indefinite"; }

DenseOperator hermitian_exp(const DenseOperator& m, double t) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(m);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_exp: eigendecomposition failed");
  }
  const Eigen::VectorXd scaled = (-t * es.eigenvalues().array()).exp().matrix();
  return es.eigenvectors() * scaled.asDiagonal() * es.eigenvectors().adjoint();
}

DenseOperator gibbs_weight(const CliffordElement& h) {
  const double residual = max_abs_difference(adjoint(h), h);
  if (residual > 1e-10 * std::max(1.0, h.max_abs())) {
    throw std::invalid_argument("gibbs_weight: Hamiltonian is not self-adjoint (residual " +
                                std::to_string(residual) + ")");
  }
  return hermitian_exp(to_matrix(h), 1.0);
}

Complex rp_functional(const CliffordElement& a, const CliffordElement& b, const DenseOperator& w,
                      const ReflectionGeometry& g) {
  return trace_product(mul(a, reflect(b, g)), w);
}

Complex rp_functional(const CliffordElement& a, const CliffordElement& b, const CliffordElement& h,
                      const ReflectionGeometry& g) {
  return rp_functional(a, b, gibbs_weight(h), g);
}

Complex rp_functional_prime(const CliffordElement& a, const CliffordElement& b,
                            const DenseOperator& w, const ReflectionGeometry& g) {
  return trace_product(mul(reflect(a, g), b), w);
}

Complex rp_functional_prime(const CliffordElement& a, const CliffordElement& b,
                            const CliffordElement& h, const ReflectionGeometry& g) {
  return rp_functional_prime(a, b, gibbs_weight(h), g);
}

Complex conjugated_reflected_functional(const CliffordElement& a, const CliffordElement& b,
                                        const CliffordElement& h, const ReflectionGeometry& g) {
  return std::conj(rp_functional(a, b, reflect(h, g), g));
}

std::vector<Monomial> even_basis(const ReflectionGeometry& g, Side side) {
  const auto idx = g.side_indices(side);
  const int m = static_cast<int>(idx.size());
  if (m > kMaxGenerators - 1) {
    throw std::length_error("even_basis: side too large");
  }
  std::vector<Monomial> out;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
    if (std::popcount(sub) % 2 != 0) {
      continue;
    }
    std::vector<int> chosen;
    for (int k = 0; k < m; ++k) {
      if ((sub >> k) & 1U) {
        chosen.push_back(idx[static_cast<std::size_t>(k)]);
      }
    }
    out.push_back(Monomial::from_indices(g.generators(), chosen));
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

GramMatrix gram_matrix_from_weight(const DenseOperator& w, const ReflectionGeometry& g,
                                   Side side) {
  const int m = static_cast<int>(g.side_indices(side).size());
  if (m > kGramSideCap) {
    throw std::length_error("gram_matrix: " + std::to_string(m) +
                            " Majoranas on one side exceed the cap of " +
                            std::to_string(kGramSideCap));
  }
  GramMatrix out;
  out.basis = even_basis(g, side);
  const auto d = static_cast<Eigen::Index>(out.basis.size());
  std::vector<SignedMonomial> reflected;
  reflected.reserve(out.basis.size());
  for (const auto& q : out.basis) {
    reflected.push_back(reflect(q, g));
  }
  out.entries.resize(d, d);
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = 0; q < d; ++q) {
      const auto& rq = reflected[static_cast<std::size_t>(q)];
      const auto prod = canonical_product(out.basis[static_cast<std::size_t>(p)], rq.monomial);
      out.entries(p, q) = static_cast<double>(prod.sign * rq.sign) *
                          monomial_trace_product(prod.monomial.bits(), w);
    }
  }
  out.hermiticity_residual =
      d == 0 ? 0.0 : (out.entries - out.entries.adjoint()).cwiseAbs().maxCoeff();
  return out;
}

GramMatrix gram_matrix(const CliffordElement& h, const ReflectionGeometry& g, Side side) {
  const int m = static_cast<int>(g.side_indices(side).size());
  if (m > kGramSideCap) {
    throw std::length_error("gram_matrix: " + std::to_string(m) +
                            " Majoranas on one side exceed the cap of " +
                            std::to_string(kGramSideCap));
  }
  return gram_matrix_from_weight(gibbs_weight(h), g, side);
}

Spectrum hermitian_spectrum(const Eigen::MatrixXcd& g) {
  const Eigen::MatrixXcd herm = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_spectrum: eigendecomposition failed");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

bool is_psd(const Eigen::VectorXd& ev, double tol) {
  if (ev.size() == 0) {
    return true;
  }
  return ev(0) >= -tol * std::max(1.0, ev(ev.size() - 1));
}

RPReport certify_rp(const HamiltonianSpec& spec, double tol) {
  RPReport r;
  r.beta = spec.beta;
  r.tolerance = tol;
  r.structural_violations = structural_violations(spec);
  if (!r.structural_violations.empty()) {
    std::string msg = "certify_rp: spec is not buildable:";
    for (const auto& v : r.structural_violations) {
      msg += "\n  " + v;
    }
    throw std::invalid_argument(msg);
  }
  const auto verdict = classify_couplings(spec.cross);
  r.couplings_certified = verdict.certified;
  r.classification_reasons = verdict.reasons;
  const auto& g = spec.geometry;
  const auto h_plus = resolved_h_plus(spec);
  r.mirror_symmetric = max_abs_difference(h_plus, reflect(spec.h_minus, g)) <=
                       1e-12 * std::max(1.0, spec.h_minus.max_abs());

  const auto h = assemble(spec);
  const auto w = gibbs_weight(h);
  const auto gram = gram_matrix_from_weight(w, g, Side::minus);
  const auto spec_ev = hermitian_spectrum(gram.entries);
  r.side = Side::minus;
  r.gram_dim = gram.basis.size();
  r.hermiticity_residual = gram.hermiticity_residual;
  r.spectrum.assign(spec_ev.eigenvalues.data(),
                    spec_ev.eigenvalues.data() + spec_ev.eigenvalues.size());
  r.min_eigenvalue = r.spectrum.front();
  r.max_eigenvalue = r.spectrum.back();
  r.verdict = is_psd(spec_ev.eigenvalues, tol) ? Verdict::positive : Verdict::indefinite;

  if (r.verdict == Verdict::indefinite) {
    const Eigen::VectorXcd v = spec_ev.eigenvectors.col(0);
    CliffordElement a(g.generators());
    Eigen::Index largest = 0;
    v.cwiseAbs().maxCoeff(&largest);
    const Complex scale = std::conj(v(largest));
    for (Eigen::Index p = 0; p < v.size(); ++p) {
      a.add_term(gram.basis[static_cast<std::size_t>(p)], std::conj(v(p)) / scale);
    }
    a.prune(1e-14);
    r.witness_value = rp_functional(a, a, w, g);
    r.witness = std::move(a);
  }
  return r;
}

BoundsReport check_bounds(const HamiltonianSpec& spec,
                          const std::vector<std::pair<CliffordElement, CliffordElement>>& pairs) {
  const auto problems = structural_violations(spec);
  if (!problems.empty()) {
    std::string msg = "check_bounds: spec is not buildable:";
    for (const auto& v : problems) {
      msg += "\n  " + v;
    }
    throw std::invalid_argument(msg);
  }
  const auto& g = spec.geometry;
  BoundsReport r;
  r.couplings_certified = classify_couplings(spec.cross).certified;

  const auto& hm = spec.h_minus;
  const auto hp = resolved_h_plus(spec);
  const auto h0 = build_h0(g, spec.cross).h0;
  r.symmetric = max_abs_difference(hm, reflect(hp, g)) <= 1e-12 * std::max(1.0, hm.max_abs());

  const auto w = gibbs_weight((hm + h0 + hp) * spec.beta);
  const auto w_minus = gibbs_weight((hm + h0 + reflect(hm, g)) * spec.beta);
  const auto w_plus = gibbs_weight((reflect(hp, g) + h0 + hp) * spec.beta);

  r.partition_function = w.trace().real();
  r.z_minus = w_minus.trace().real();
  r.z_plus = w_plus.trace().real();
  const double z_bound = std::sqrt(std::max(0.0, r.z_minus * r.z_plus));
  r.partition_equality_residual = std::abs(r.partition_function - z_bound);
  r.checks.push_back({"partition_function", r.partition_function, z_bound,
                      z_bound - r.partition_function});

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    if (parity(a) != Parity::even || parity(b) != Parity::even) {
      throw std::invalid_argument("check_bounds: pair " + std::to_string(i) + " is not even");
    }
    const auto sa = support_side(a, g);
    const auto sb = support_side(b, g);
    const bool minus_ok = (sa == Support::minus || sa == Support::scalar) &&
                          (sb == Support::minus || sb == Support::scalar);
    const bool plus_ok = (sa == Support::plus || sa == Support::scalar) &&
                         (sb == Support::plus || sb == Support::scalar);
    if (!minus_ok && !plus_ok) {
      throw std::invalid_argument("check_bounds: pair " + std::to_string(i) +
                                  " is not supported on a single side");
    }
    const double lhs = std::abs(rp_functional(a, b, w, g));
    BoundCheck c;
    c.lhs = lhs;
    if (minus_ok) {
      c.name = "rp_bound_minus[" + std::to_string(i) + "]";
      c.rhs = rp_norm(a, w_minus, g) * rp_norm(b, w_plus, g);
    } else {
      c.name = "rp_bound_plus[" + std::to_string(i) + "]";
      c.rhs = rp_norm(a, w_plus, g) * rp_norm(b, w_minus, g);
    }
    c.slack = c.rhs - c.lhs;
    r.checks.push_back(std::move(c));
  }
  r.min_slack = r.checks.front().slack;
  for (const auto& c : r.checks) {
    r.min_slack = std::min(r.min_slack, c.slack);
  }
  return r;
}

SchwarzReport schwarz_and_antiunitarity_check(
    const CliffordElement& h, const ReflectionGeometry& g,
    const std::vector<std::pair<CliffordElement, CliffordElement>>& pairs) {
  if (max_abs_difference(reflect(h, g), h) > 1e-10 * std::max(1.0, h.max_abs())) {
    throw std::invalid_argument("schwarz_and_antiunitarity_check: H is not reflection symmetric");
  }
  const auto w = gibbs_weight(h);
  SchwarzReport r;
  r.samples = pairs.size();
  bool first = true;
  for (const auto& [a, b] : pairs) {
    const Complex ab = rp_functional(a, b, w, g);
    const double slack = rp_norm(a, w, g) * rp_norm(b, w, g) - std::abs(ab);
    const auto ta = reflect(a, g);
    const auto tb = reflect(b, g);
    const double anti = std::abs(ab - rp_functional(tb, ta, w, g));
    const double norm_res = std::abs(rp_norm(ta, w, g) - rp_norm(a, w, g));
    r.min_schwarz_slack = first ? slack : std::min(r.min_schwarz_slack, slack);
    r.max_antiunitarity_residual = std::max(r.max_antiunitarity_residual, anti);
    r.max_norm_residual = std::max(r.max_norm_residual, norm_res);
    first = false;
  }
  return r;
}

}  // namespace majorana_rp
