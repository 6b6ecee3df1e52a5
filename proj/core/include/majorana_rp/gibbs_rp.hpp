// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/geometry.hpp"
#include "majorana_rp/hamiltonian.hpp"
#include "majorana_rp/matrix_rep.hpp"

namespace majorana_rp {

/// Default PSD tolerance: min eigenvalue >= -tol * max(1, max eigenvalue).
inline constexpr double kPsdTolerance = 1e-10;

/// Largest number of Majoranas on one side for which Gram matrices are built.
inline constexpr int kGramSideCap = 8;

/// exp(-H) through the eigendecomposition of the Hermitian matrix of H.
/// Throws std::invalid_argument if H is not self-adjoint within 1e-10
/// (relative to max(1, max |h_beta|)).
DenseOperator gibbs_weight(const CliffordElement& h);

/// exp(-t M) for a Hermitian matrix M (lower triangle used).
DenseOperator hermitian_exp(const DenseOperator& m, double t = 1.0);

/// Tr(A theta(B) W) for a precomputed weight W = exp(-H).
Complex rp_functional(const CliffordElement& a, const CliffordElement& b, const DenseOperator& w,
                      const ReflectionGeometry& g);
/// Tr(A theta(B) exp(-H)). Linear in A, anti-linear in B.
Complex rp_functional(const CliffordElement& a, const CliffordElement& b, const CliffordElement& h,
                      const ReflectionGeometry& g);

/// Tr(theta(A) B W).
Complex rp_functional_prime(const CliffordElement& a, const CliffordElement& b,
                            const DenseOperator& w, const ReflectionGeometry& g);
Complex rp_functional_prime(const CliffordElement& a, const CliffordElement& b,
                            const CliffordElement& h, const ReflectionGeometry& g);

/// Even-degree monomials on one side (identity included) in graded
/// lexicographic order; 2^(m-1) of them for m Majoranas on that side.
std::vector<Monomial> even_basis(const ReflectionGeometry& g, Side side);

struct GramMatrix {
  std::vector<Monomial> basis;
  Eigen::MatrixXcd entries;  // entries(p, q) = Tr(M_p theta(M_q) exp(-H))
  double hermiticity_residual = 0.0;  // max |G - G^*|
};

/// Gram matrix of the RP form over even_basis(g, side). Throws
/// std::length_error beyond kGramSideCap Majoranas on the side.
GramMatrix gram_matrix(const CliffordElement& h, const ReflectionGeometry& g, Side side);
GramMatrix gram_matrix_from_weight(const DenseOperator& w, const ReflectionGeometry& g, Side side);

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXcd eigenvectors;
};

/// Eigen-decomposition of the Hermitian part (G + G^*)/2.
Spectrum hermitian_spectrum(const Eigen::MatrixXcd& g);

/// min >= -tol * max(1, max).
bool is_psd(const Eigen::VectorXd& ascending_eigenvalues, double tol = kPsdTolerance);

enum class Verdict { positive, indefinite };
const char* to_string(Verdict v);

struct RPReport {
  double beta = 1.0;
  Side side = Side::minus;
  std::size_t gram_dim = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double hermiticity_residual = 0.0;
  double tolerance = kPsdTolerance;
  Verdict verdict = Verdict::positive;
  bool couplings_certified = true;
  std::vector<std::string> classification_reasons;
  bool mirror_symmetric = true;  // H_+ == theta(H_-)
  std::vector<std::string> structural_violations;
  std::vector<double> spectrum;  // ascending
  std::optional<CliffordElement> witness;
  std::optional<Complex> witness_value;  // Tr(A theta(A) exp(-H)) for the witness
};

/// Classification, structure checks and the minus-side Gram spectrum. On an
/// indefinite spectrum, the witness is built from the eigenvector of the most
/// negative eigenvalue, scaled so its largest coefficient is 1. Findings are
/// report data; only a non-buildable spec throws.
RPReport certify_rp(const HamiltonianSpec& spec, double tol = kPsdTolerance);

/// conj Tr(A theta(B) exp(-theta(H))): the right-hand side of the
/// conjugation identity satisfied by rp_functional_prime.
Complex conjugated_reflected_functional(const CliffordElement& a, const CliffordElement& b,
                                        const CliffordElement& h, const ReflectionGeometry& g);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
};

struct BoundsReport {
  bool couplings_certified = true;
  bool symmetric = false;  // H_- == theta(H_+)
  double partition_function = 0.0;
  double z_minus = 0.0;  // Tr exp(-(H_- + H_0 + theta(H_-)))
  double z_plus = 0.0;   // Tr exp(-(theta(H_+) + H_0 + H_+))
  double partition_equality_residual = 0.0;  // |Z - sqrt(Z_- Z_+)|
  std::vector<BoundCheck> checks;
  double min_slack = 0.0;
};

/// Reflection bounds for a spec with independent H_-, H_+ (beta applied to
/// every Hamiltonian). Each pair must be even and either both minus-side
/// (scalars allowed) or both plus-side; the partition-function bound is
/// always included.
BoundsReport check_bounds(const HamiltonianSpec& spec,
                          const std::vector<std::pair<CliffordElement, CliffordElement>>& pairs);

struct SchwarzReport {
  std::size_t samples = 0;
  double min_schwarz_slack = 0.0;        // min ||A|| ||B|| - |<A,B>|
  double max_antiunitarity_residual = 0.0;  // max |<A,B> - <theta B, theta A>|
  double max_norm_residual = 0.0;        // max | ||theta A|| - ||A|| |
};

/// Schwarz inequality and anti-unitarity of theta for the RP inner product
/// on the supplied even pairs. Requires a mirror-symmetric H.
SchwarzReport schwarz_and_antiunitarity_check(
    const CliffordElement& h, const ReflectionGeometry& g,
    const std::vector<std::pair<CliffordElement, CliffordElement>>& pairs);

}  // namespace majorana_rp
