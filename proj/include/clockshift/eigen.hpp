// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

#include "clockshift/linalg.hpp"

namespace clockshift {

/// Eigenvalues ascending; eigenvector k is column k of `eigenvectors`.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

/// Two eigenvalues of a matrix with Frobenius norm `fnorm` are treated as
/// degenerate when they differ by less than this.
inline double degeneracy_threshold(double fnorm) {
  return 1e-9 * std::max(1.0, fnorm);
}

namespace detail {

// Implicit-shift QL iteration on a real symmetric tridiagonal matrix
// (diag, off), accumulating the rotations into the complex columns of z.
// Classic tql2-style sweep; off[i] couples rows i and i+1.
inline void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off,
                           Matrix& z) {
  const long n = static_cast<long>(diag.size());
  if (n <= 1) return;
  const double eps = std::numeric_limits<double>::epsilon();
  off.resize(n, 0.0);  // off[n-1] used as workspace

  for (long l = 0; l < n; ++l) {
    int iter = 0;
    long m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw CheckFailure("tridiagonal QL failed to converge");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        long i = m - 1;
        for (; i >= l; --i) {
          double f = s * off[i];
          double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {  // recover from vanishing rotation, retry sweep
            diag[i + 1] -= p;
            off[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          for (long k = 0; k < n; ++k) {
            cplx zf = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * zf;
            z(k, i) = c * z(k, i) - s * zf;
          }
        }
        if (r == 0.0 && i >= l) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Full eigendecomposition of a complex Hermitian matrix.
///
/// Householder reflections reduce M to complex tridiagonal form, subdiagonal
/// phases are absorbed into the accumulated basis so the tridiagonal matrix
/// becomes real symmetric, and implicit-shift QL finishes the job while the
/// rotations accumulate into the eigenvector matrix.  O(n^3), adequate for
/// the dimensions this library works at (n <= ~1000).
///
/// Rejects non-square or non-Hermitian input (defect beyond
/// `hermiticity_tol * max(1, max|M_ij|)`), naming the worst asymmetry.
inline EigenDecomposition hermitian_eigendecomposition(
    const Matrix& m, double hermiticity_tol = 1e-10) {
  require(m.rows() == m.cols(),
          "hermitian_eigendecomposition: matrix is " + std::to_string(m.rows()) +
              "x" + std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  require(n >= 1, "hermitian_eigendecomposition: empty matrix");

  double scale = max_abs(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      require(std::isfinite(m(i, j).real()) && std::isfinite(m(i, j).imag()),
              "hermitian_eigendecomposition: matrix has non-finite entries");
  double defect = hermiticity_defect(m);
  require(defect <= hermiticity_tol * std::max(1.0, scale),
          "hermitian_eigendecomposition: matrix not Hermitian, max asymmetry " +
              std::to_string(defect));

  Matrix a = m;
  Matrix z = Matrix::identity(n);
  std::vector<double> diag(n, 0.0), off(n, 0.0);

  if (n > 2) {
    std::vector<cplx> v(n), w(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
      // Householder vector from the part of column k below the diagonal.
      double xnorm2 = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
      double xnorm = std::sqrt(xnorm2);
      if (xnorm == 0.0) continue;

      cplx x0 = a(k + 1, k);
      cplx phase = (x0 == cplx(0.0, 0.0)) ? cplx(1.0, 0.0) : x0 / std::abs(x0);
      cplx alpha = -phase * xnorm;  // reflected subdiagonal entry

      for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
      v[k + 1] -= alpha;  // no cancellation: |v[k+1]| = |x0| + xnorm
      double vnorm2 = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
      if (vnorm2 == 0.0) continue;
      double beta = 2.0 / vnorm2;

      // Two-sided update of the trailing block B = A[k+1.., k+1..]:
      // with H = I - beta v v^dag,  HBH = B - v u^dag - u v^dag,
      // u = beta w - (beta^2/2)(v^dag w) v,  w = B v.
      cplx vw = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) {
        cplx s = 0.0;
        const cplx* row = a.data() + i * n;
        for (std::size_t j = k + 1; j < n; ++j) s += row[j] * v[j];
        w[i] = s;
      }
      for (std::size_t i = k + 1; i < n; ++i) vw += std::conj(v[i]) * w[i];
      for (std::size_t i = k + 1; i < n; ++i)
        w[i] = beta * w[i] - (0.5 * beta * beta * vw) * v[i];
      for (std::size_t i = k + 1; i < n; ++i) {
        cplx* row = a.data() + i * n;
        const cplx vi = v[i], ui = w[i];
        for (std::size_t j = k + 1; j < n; ++j)
          row[j] -= vi * std::conj(w[j]) + ui * std::conj(v[j]);
      }

      a(k + 1, k) = alpha;
      a(k, k + 1) = std::conj(alpha);
      for (std::size_t i = k + 2; i < n; ++i) {
        a(i, k) = 0.0;
        a(k, i) = 0.0;
      }

      // Accumulate the reflector: Z <- Z (I - beta v v^dag).
      for (std::size_t r = 0; r < n; ++r) {
        cplx* row = z.data() + r * n;
        cplx t = 0.0;
        for (std::size_t c = k + 1; c < n; ++c) t += row[c] * v[c];
        t *= beta;
        if (t != cplx(0.0, 0.0))
          for (std::size_t c = k + 1; c < n; ++c) row[c] -= t * std::conj(v[c]);
      }
    }
  }

  // Absorb subdiagonal phases: column j of Z picks up the running phase that
  // makes the tridiagonal matrix real with nonnegative off-diagonal.
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  cplx running = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    cplx ek = a(k + 1, k);
    double ab = std::abs(ek);
    off[k] = ab;
    if (ab > 0.0) running *= ek / ab;
    if (running != cplx(1.0, 0.0))
      for (std::size_t r = 0; r < n; ++r) z(r, k + 1) *= running;
  }

  detail::tridiagonal_ql(diag, off, z);

  // Sort ascending, permuting eigenvector columns along.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = diag[order[c]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = z(r, order[c]);
  }
  return out;
}

}  // namespace clockshift
