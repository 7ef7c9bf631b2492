// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "clockshift/common.hpp"

namespace clockshift {

/// Dense complex matrix, row-major.  Small and dumb on purpose: every
/// operator in this library is at most ~1000 x 1000 and dense storage keeps
/// the eigensolver simple.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions disagree (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
  Matrix out(a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    cplx* oi = out.data() + i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a(i, p);
      if (aip == cplx(0.0, 0.0)) continue;
      const cplx* bp = b.data() + p * m;
      for (std::size_t j = 0; j < m; ++j) oi[j] += aip * bp[j];
    }
  }
  return out;
}

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline StateVector matvec(const Matrix& a, const StateVector& x) {
  require(a.cols() == x.size(), "matvec: dimension mismatch");
  StateVector y(a.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    const cplx* row = a.data() + i * a.cols();
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix add: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sub: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

inline Matrix operator*(cplx s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

inline cplx trace(const Matrix& a) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

/// tr(a*b) without forming the product.
inline cplx trace_of_product(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows() && b.cols() == a.rows(),
          "trace_of_product: shape mismatch");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s = std::max(s, std::abs(a(i, j)));
  return s;
}

/// max_{ij} |A_{ij} - conj(A_{ji})|; zero for an exactly Hermitian matrix.
inline double hermiticity_defect(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

/// True iff ||A^dag A - I||_max <= tol.
inline bool is_unitary(const Matrix& a, double tol) {
  require(a.rows() == a.cols(), "is_unitary: matrix not square");
  Matrix g = matmul(adjoint(a), a);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return max_abs(g) <= tol;
}

}  // namespace clockshift
