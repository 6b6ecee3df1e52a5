// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by tests. Nothing here calls into the
// library's sign bookkeeping: Majoranas are Kronecker products of 2x2 ladder
// operators, monomials are plain matrix products in the written order, and
// exponentials use Eigen's Pade-based matrix exponential.

#pragma once

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// 2N Majoranas on N modes. Mode 1 is the least significant tensor factor,
// a = |0><1| lowers the occupation, and modes below j carry the parity string.
inline std::vector<Mat> majoranas(int modes) {
  Mat a = Mat::Zero(2, 2);
  a(0, 1) = 1.0;
  const Mat ad = a.adjoint();
  const Mat id = Mat::Identity(2, 2);
  const Mat parity = id - 2.0 * ad * a;
  std::vector<Mat> out;
  for (int j = 1; j <= modes; ++j) {
    for (const Mat& local : {Mat(a + ad), Mat(C(0, 1) * (a - ad))}) {
      Mat m = Mat::Identity(1, 1);
      for (int k = modes; k >= 1; --k) {
        const Mat& f = k == j ? local : (k < j ? parity : id);
        m = kron(m, f);
      }
      out.push_back(m);
    }
  }
  return out;
}

// c_{i1} c_{i2} ... in the given order, no reordering.
inline Mat word(const std::vector<Mat>& c, const std::vector<int>& indices) {
  const Eigen::Index dim = c.front().rows();
  Mat m = Mat::Identity(dim, dim);
  for (int i : indices) {
    m = m * c[static_cast<std::size_t>(i - 1)];
  }
  return m;
}

struct Term {
  std::vector<int> indices;
  C coefficient;
};

inline Mat element(const std::vector<Mat>& c, const std::vector<Term>& terms) {
  const Eigen::Index dim = c.front().rows();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : terms) {
    m += t.coefficient * word(c, t.indices);
  }
  return m;
}

// Anti-linear reflection: theta(a c_{i1}..c_{ik}) = conj(a) c_{t(i1)}..c_{t(ik)}.
inline Mat reflected_element(const std::vector<Mat>& c, const std::vector<Term>& terms,
                             const std::function<int(int)>& theta) {
  std::vector<Term> image;
  for (const auto& t : terms) {
    Term r{{}, std::conj(t.coefficient)};
    for (int i : t.indices) {
      r.indices.push_back(theta(i));
    }
    image.push_back(std::move(r));
  }
  return element(c, image);
}

inline Mat expm(const Mat& m) { return m.exp(); }

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

inline double spectral_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

}  // namespace oracle
