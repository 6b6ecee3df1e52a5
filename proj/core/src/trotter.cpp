// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp/trotter.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "majorana_rp/gibbs_rp.hpp"

namespace majorana_rp {

namespace {

void require_buildable(const HamiltonianSpec& spec, const char* who) {
  const auto problems = structural_violations(spec);
  if (!problems.empty()) {
    std::string msg = std::string(who) + ": spec is not buildable:";
    for (const auto& p : problems) {
      msg += "\n  " + p;
    }
    throw std::invalid_argument(msg);
  }
}

void require_steps(int k) {
  if (k < 1) {
    throw std::invalid_argument("Trotter step count must be >= 1, got " + std::to_string(k));
  }
}

Complex i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

// Matrices shared by every Y in an expansion.
struct StepFactors {
  DenseOperator half_weights;               // exp(-H_-/k) exp(-H_+/k)
  std::vector<DenseOperator> interactions;  // label l -> C_l theta(C_l), label 0 -> I
};

StepFactors step_factors(const HamiltonianSpec& spec, int k) {
  const auto& g = spec.geometry;
  StepFactors f;
  const double t = 1.0 / k;
  f.half_weights = hermitian_exp(to_matrix(spec.h_minus * spec.beta), t) *
                   hermitian_exp(to_matrix(resolved_h_plus(spec) * spec.beta), t);
  const Eigen::Index dim = f.half_weights.rows();
  f.interactions.push_back(DenseOperator::Identity(dim, dim));
  for (const auto& term : spec.cross) {
    f.interactions.push_back(to_matrix(interaction_monomial(g, term.subset)));
  }
  return f;
}

DenseOperator product_for(const StepFactors& f, const std::vector<int>& labels) {
  const Eigen::Index dim = f.half_weights.rows();
  DenseOperator y = DenseOperator::Identity(dim, dim);
  for (int l : labels) {
    y = y * f.interactions.at(static_cast<std::size_t>(l)) * f.half_weights;
  }
  return y;
}

// The k-fold product amplifies the rounding error of one step roughly k times,
// so the Lie product is accumulated in extended precision.
using ExtScalar = std::complex<long double>;
using ExtOperator = Eigen::Matrix<ExtScalar, Eigen::Dynamic, Eigen::Dynamic>;

ExtOperator ext_hermitian_exp(const DenseOperator& m, long double t) {
  const ExtOperator e = m.cast<ExtScalar>();
  Eigen::SelfAdjointEigenSolver<ExtOperator> es(e);
  const auto& v = es.eigenvectors();
  Eigen::Matrix<long double, Eigen::Dynamic, 1> d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d(i) = std::exp(-t * d(i));
  }
  return v * d.cast<ExtScalar>().asDiagonal() * v.adjoint();
}

ExtOperator ext_power(ExtOperator base, int k) {
  ExtOperator result = ExtOperator::Identity(base.rows(), base.cols());
  while (k > 0) {
    if (k & 1) {
      result = result * base;
    }
    k >>= 1;
    if (k > 0) {
      base = base * base;
    }
  }
  return result;
}

ExtOperator ext_lie_product(const HamiltonianSpec& spec, int k) {
  require_steps(k);
  require_buildable(spec, "lie_product_approx");
  const auto h0 = build_h0(spec.geometry, spec.cross).h0 * spec.beta;
  const long double t = 1.0L / k;
  const ExtOperator m0 = to_matrix(h0).cast<ExtScalar>();
  const Eigen::Index dim = m0.rows();
  const ExtOperator step = (ExtOperator::Identity(dim, dim) - ExtScalar(t) * m0) *
                           ext_hermitian_exp(to_matrix(spec.h_minus * spec.beta), t) *
                           ext_hermitian_exp(to_matrix(resolved_h_plus(spec) * spec.beta), t);
  return ext_power(step, k);
}

}  // namespace

DenseOperator lie_product_approx(const HamiltonianSpec& spec, int k) {
  return ext_lie_product(spec, k).cast<Complex>();
}

double operator_norm(const DenseOperator& m) {
  const Eigen::Index r = m.rows();
  const Eigen::Index c = m.cols();
  DenseOperator embed = DenseOperator::Zero(r + c, r + c);
  embed.topRightCorner(r, c) = m;
  embed.bottomLeftCorner(c, r) = m.adjoint();
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(embed, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<ExpansionTerm> enumerate_expansion(const HamiltonianSpec& spec, int k) {
  require_steps(k);
  require_buildable(spec, "enumerate_expansion");
  const std::uint64_t labels = 1 + spec.cross.size();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= labels;
    if (total > kExpansionGuard) {
      throw std::length_error("enumerate_expansion: " + std::to_string(labels) + "^" +
                              std::to_string(k) + " terms exceed the guard of " +
                              std::to_string(kExpansionGuard));
    }
  }
  // -J for each label, with -J_0 = k; beta rescales the couplings.
  std::vector<double> minus_j{static_cast<double>(k)};
  std::vector<int> counts{0};
  for (const auto& term : spec.cross) {
    minus_j.push_back(-spec.beta * term.coupling);
    counts.push_back(static_cast<int>(term.subset.size()));
  }
  const double norm = std::pow(static_cast<double>(k), -k);

  std::vector<ExpansionTerm> out;
  out.reserve(total);
  std::vector<int> seq(static_cast<std::size_t>(k), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    ExpansionTerm t;
    t.labels = seq;
    double coeff = norm;
    int phase = 0;
    for (int l : seq) {
      const auto ul = static_cast<std::size_t>(l);
      t.counts.push_back(counts[ul]);
      coeff *= minus_j[ul];
      phase += counts[ul] % 2;
    }
    t.coefficient = coeff;
    t.phase_power = phase % 4;
    out.push_back(std::move(t));
    for (int pos = k - 1; pos >= 0; --pos) {
      auto& digit = seq[static_cast<std::size_t>(pos)];
      if (++digit < static_cast<int>(labels)) {
        break;
      }
      digit = 0;
    }
  }
  return out;
}

DenseOperator expansion_product(const HamiltonianSpec& spec, const std::vector<int>& labels,
                                int k) {
  require_steps(k);
  require_buildable(spec, "expansion_product");
  return product_for(step_factors(spec, k), labels);
}

DenseOperator reconstruct_from_expansion(const HamiltonianSpec& spec,
                                         const std::vector<ExpansionTerm>& terms, int k) {
  require_steps(k);
  require_buildable(spec, "reconstruct_from_expansion");
  const auto f = step_factors(spec, k);
  const Eigen::Index dim = f.half_weights.rows();
  DenseOperator acc = DenseOperator::Zero(dim, dim);
  for (const auto& t : terms) {
    acc += (i_power(t.phase_power) * t.coefficient) * product_for(f, t.labels);
  }
  return acc;
}

bool parity_filter(const ExpansionTerm& term) {
  return std::accumulate(term.counts.begin(), term.counts.end(), 0) % 2 == 0;
}

YFactorization factorize_y(const ExpansionTerm& term, const HamiltonianSpec& spec, int k) {
  require_steps(k);
  require_buildable(spec, "factorize_y");
  if (!parity_filter(term)) {
    throw std::invalid_argument("factorize_y: term has an odd Majorana count (dropped by parity)");
  }
  const auto& g = spec.geometry;
  if (max_abs_difference(resolved_h_plus(spec), reflect(spec.h_minus, g)) >
      1e-12 * std::max(1.0, spec.h_minus.max_abs())) {
    throw std::invalid_argument("factorize_y: needs H_+ = theta(H_-)");
  }
  const auto basis = even_basis(g, Side::minus);
  const DenseOperator e_minus = hermitian_exp(to_matrix(spec.h_minus * spec.beta), 1.0 / k);
  const CliffordElement e_sym = from_matrix(e_minus, basis);

  CliffordElement d = CliffordElement::identity(g.generators());
  int sigma_sum = 0;
  for (int l : term.labels) {
    if (l > 0) {
      const auto& subset = spec.cross.at(static_cast<std::size_t>(l - 1)).subset;
      d = mul(d, subset_product(g.generators(), subset));
      sigma_sum += sigma(subset);
    }
    d = mul(d, e_sym);
  }
  d.prune(1e-14);

  YFactorization out{d, i_power(-sigma_sum), 0.0};
  const DenseOperator y = expansion_product(spec, term.labels, k);
  const DenseOperator rhs = out.phase * (to_matrix(d) * to_matrix(reflect(d, g)));
  out.residual = (y - rhs).cwiseAbs().maxCoeff();
  return out;
}

int symbolic_reorder_sign(const HamiltonianSpec& spec, const std::vector<int>& labels) {
  const auto& g = spec.geometry;
  CliffordElement interleaved = CliffordElement::identity(g.generators());
  CliffordElement c = CliffordElement::identity(g.generators());
  for (int l : labels) {
    if (l == 0) {
      continue;
    }
    const auto& subset = spec.cross.at(static_cast<std::size_t>(l - 1)).subset;
    interleaved = mul(interleaved, interaction_monomial(g, subset));
    c = mul(c, subset_product(g.generators(), subset));
  }
  const auto grouped = mul(c, reflect(c, g));
  if (interleaved.size() != 1 || grouped.size() != 1 ||
      interleaved.terms().begin()->first != grouped.terms().begin()->first) {
    throw std::logic_error("symbolic_reorder_sign: products are not proportional monomials");
  }
  const Complex ratio = interleaved.terms().begin()->second / grouped.terms().begin()->second;
  return ratio.real() > 0.0 ? 1 : -1;
}

MinusSignCount count_minus_signs(const std::vector<int>& n_list) {
  long long sum = 0;
  long long sum_sq = 0;
  long long odd = 0;
  for (int n : n_list) {
    if (n < 0) {
      throw std::invalid_argument("count_minus_signs: negative count");
    }
    sum += n;
    sum_sq += static_cast<long long>(n) * n;
    odd += n % 2;
  }
  if (sum % 2 != 0) {
    throw std::invalid_argument("count_minus_signs: total Majorana count is odd");
  }
  MinusSignCount out;
  out.count = (sum * sum - sum_sq) / 2;
  out.parity = static_cast<int>(out.count % 2);
  // 2 N^2 drops out mod 2, leaving (1/2) sum n^2.
  const bool shift_ok = out.parity == static_cast<int>((sum_sq / 2) % 2);
  // (-1)^count against i^{-odd}; odd is even here so i^{-odd} is real.
  const int sign = out.parity == 0 ? 1 : -1;
  const int i_sign = (((-odd) % 4 + 4) % 4) == 0 ? 1 : -1;
  out.consistent = shift_ok && sign == i_sign;
  return out;
}

bool square_mod4_identity(long long n) {
  const long long a = ((n % 4) * (n % 4)) % 4;
  return ((a + 4) % 4) == (((n % 2) + 2) % 2);
}

std::vector<ConvergenceRow> convergence_table(const HamiltonianSpec& spec,
                                              const std::vector<int>& schedule) {
  if (schedule.empty()) {
    throw std::invalid_argument("convergence_table: empty k schedule");
  }
  const auto h = assemble(spec);
  const ExtOperator exact = ext_hermitian_exp(to_matrix(h), 1.0L);
  std::vector<ConvergenceRow> rows;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int k : schedule) {
    ConvergenceRow row;
    row.k = k;
    const ExtOperator diff = ext_lie_product(spec, k) - exact;
    row.error = operator_norm(diff.cast<Complex>());
    row.ratio = prev / row.error;
    prev = row.error;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace majorana_rp
