// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "clockshift/linalg.hpp"

namespace clockshift {

/// Centered index range j = -floor(d/2) .. floor((d-1)/2).
/// Even d runs -d/2 .. d/2-1, odd d is symmetric about 0.  All vectors and
/// matrices in this library are stored with ascending j, so array position
/// p corresponds to j = p - floor(d/2).
struct IndexRange {
  std::size_t dim;

  explicit IndexRange(std::size_t d) : dim(d) { require(d >= 1, "IndexRange: d >= 1"); }

  long j_min() const { return -static_cast<long>(dim / 2); }
  long j_max() const { return static_cast<long>((dim - 1) / 2); }
  long j_of(std::size_t pos) const {
    return static_cast<long>(pos) - static_cast<long>(dim / 2);
  }
  std::size_t pos_of(long j) const {
    require(j >= j_min() && j <= j_max(), "index outside centered range");
    return static_cast<std::size_t>(j - j_min());
  }
  /// Cyclic: any integer j is reduced mod d into the centered range.
  std::size_t pos_wrapped(long j) const {
    long d = static_cast<long>(dim);
    long p = (j + static_cast<long>(dim / 2)) % d;
    if (p < 0) p += d;
    return static_cast<std::size_t>(p);
  }
  bool contains(long j) const { return j >= j_min() && j <= j_max(); }
};

/// All the operators attached to one (clock, shift) pair in dimension d.
///   clock (U):  diagonal phases e^{+2 pi i j / d}
///   shift (V):  cyclic |j> -> |j+1>
///   gen_u, gen_v: Hermitian generators with eigenvalues sqrt(2 pi / d) * j,
///                 gen_u diagonal in the j basis, gen_v = F gen_u F^dag
///   clock_cos etc.: C_W = (W + W^dag)/2, S_W = (W - W^dag)/2i
///   parity (P): |j> -> |-j> (cyclically; -d/2 is its own image for even d)
/// phi is the commutation phase: clock * shift = e^{i phi} shift * clock.
struct OperatorSet {
  std::size_t dim = 0;
  double phi = 0.0;
  Matrix dft;
  Matrix clock, shift;
  Matrix clock_cos, clock_sin, shift_cos, shift_sin;
  Matrix parity;
  Matrix gen_u, gen_v;
};

/// DFT matrix F[j,k] = e^{+2 pi i j k / d} / sqrt(d) over the centered range.
/// Column k is the j-basis representation of the dual basis vector.
inline Matrix dft_matrix(std::size_t d) {
  require(d >= 1, "dft_matrix: d >= 1");
  IndexRange r(d);
  Matrix f(d, d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      f(a, b) = std::polar(s, w * static_cast<double>(r.j_of(a)) *
                                  static_cast<double>(r.j_of(b)));
  return f;
}

inline Matrix clock_matrix(std::size_t d) {
  IndexRange r(d);
  Matrix u(d, d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (std::size_t p = 0; p < d; ++p)
    u(p, p) = std::polar(1.0, w * static_cast<double>(r.j_of(p)));
  return u;
}

/// Cyclic shift by `steps` (V^steps as an exact 0/1 matrix).
inline Matrix shift_matrix(std::size_t d, long steps = 1) {
  IndexRange r(d);
  Matrix v(d, d);
  for (std::size_t p = 0; p < d; ++p)
    v(r.pos_wrapped(r.j_of(p) + steps), p) = 1.0;
  return v;
}

inline Matrix build_parity(std::size_t d) {
  require(d >= 2, "build_parity: d >= 2");
  IndexRange r(d);
  Matrix p(d, d);
  for (std::size_t a = 0; a < d; ++a) p(r.pos_wrapped(-r.j_of(a)), a) = 1.0;
  return p;
}

/// Hermitian generators (u, v): u diagonal with nu_j = sqrt(2 pi / d) j
/// (branch k_j = 0 for every j), v = F u F^dag.
inline std::pair<Matrix, Matrix> build_generators(std::size_t d) {
  require(d >= 2, "build_generators: d >= 2");
  IndexRange r(d);
  const double s = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(d));
  Matrix u(d, d);
  for (std::size_t p = 0; p < d; ++p) u(p, p) = s * static_cast<double>(r.j_of(p));
  Matrix f = dft_matrix(d);
  Matrix v = matmul(matmul(f, u), adjoint(f));
  // clean the rounding skew so v is Hermitian to working precision
  for (std::size_t i = 0; i < d; ++i) {
    v(i, i) = v(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) {
      cplx m = 0.5 * (v(i, j) + std::conj(v(j, i)));
      v(i, j) = m;
      v(j, i) = std::conj(m);
    }
  }
  return {std::move(u), std::move(v)};
}

namespace detail {

inline void fill_cos_sin(const Matrix& w, Matrix& c, Matrix& s) {
  Matrix wd = adjoint(w);
  const std::size_t n = w.rows();
  c = Matrix(n, n);
  s = Matrix(n, n);
  const cplx half(0.5, 0.0), half_i(0.0, -0.5);  // 1/(2i) = -i/2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      c(i, j) = half * (w(i, j) + wd(i, j));
      s(i, j) = half_i * (w(i, j) - wd(i, j));
    }
}

}  // namespace detail

/// Standard pair for dimension d: U = clock, V = shift, phi = 2 pi / d.
/// Both constructions of V (direct shift vs F diag(e^{-2 pi i k/d}) F^dag)
/// are formed and must agree to 1e-12; the exact 0/1 shift form is kept.
inline OperatorSet build_operator_set(std::size_t d) {
  require(d >= 2, "build_operator_set: d >= 2");
  OperatorSet ops;
  ops.dim = d;
  ops.phi = 2.0 * std::numbers::pi / static_cast<double>(d);
  ops.dft = dft_matrix(d);
  ops.clock = clock_matrix(d);
  ops.shift = shift_matrix(d);

  // dual-route cross-check of the shift operator
  IndexRange r(d);
  Matrix vdiag(d, d);
  for (std::size_t p = 0; p < d; ++p)
    vdiag(p, p) = std::polar(1.0, -ops.phi * static_cast<double>(r.j_of(p)));
  Matrix v_dual = matmul(matmul(ops.dft, vdiag), adjoint(ops.dft));
  check(max_abs(v_dual - ops.shift) <= 1e-12,
        "build_operator_set: the two shift-operator constructions disagree");

  detail::fill_cos_sin(ops.clock, ops.clock_cos, ops.clock_sin);
  detail::fill_cos_sin(ops.shift, ops.shift_cos, ops.shift_sin);
  ops.parity = build_parity(d);
  auto uv = build_generators(d);
  ops.gen_u = std::move(uv.first);
  ops.gen_v = std::move(uv.second);
  return ops;
}

/// Closed form for <j|[u,v]|j'> off the diagonal:
///   i (-1)^{j-j'+1} [pi(j-j')/d] / sin[pi(j-j')/d], times e^{-i pi (j-j')/d}
/// for even d.  The diagonal of [u,v] is exactly zero (u is diagonal) and is
/// handled by callers, not here.
inline cplx analytic_uv_commutator_entry(long j, long jp, std::size_t d) {
  IndexRange r(d);
  require(r.contains(j) && r.contains(jp),
          "analytic_uv_commutator_entry: index outside centered range");
  require(j != jp,
          "analytic_uv_commutator_entry: diagonal entries are identically zero "
          "and not covered by the closed form");
  const long m = j - jp;
  const double x = std::numbers::pi * static_cast<double>(m) / static_cast<double>(d);
  const double sign = ((m + 1) % 2 == 0) ? 1.0 : -1.0;
  cplx val = cplx(0.0, 1.0) * sign * (x / std::sin(x));
  if (d % 2 == 0) val *= std::polar(1.0, -x);
  return val;
}

/// Harper Hamiltonian H = -cos(theta) C_U - sin(theta) C_V.  Real symmetric:
/// diagonal -cos(theta) cos(2 pi j / d), off-diagonal (cyclic) -sin(theta)/2.
struct HarperHamiltonian {
  double theta = 0.0;
  std::size_t dim = 0;
  Matrix h;
};

inline HarperHamiltonian build_harper(double theta, std::size_t d) {
  require(d >= 2, "build_harper: d >= 2");
  require(theta >= 0.0 && theta <= std::numbers::pi / 2.0 + 1e-15,
          "build_harper: theta must lie in [0, pi/2]");
  IndexRange r(d);
  Matrix h(d, d);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (std::size_t p = 0; p < d; ++p) {
    h(p, p) = -ct * std::cos(w * static_cast<double>(r.j_of(p)));
    std::size_t up = r.pos_wrapped(r.j_of(p) + 1);
    h(up, p) += -0.5 * st;
    h(p, up) += -0.5 * st;
  }
  return {theta, d, std::move(h)};
}

/// Phase-space translation.  Applies the shift b times and the inverse clock
/// a times, so that <U> -> e^{+2 pi i b/d} <U> and <V> -> e^{+2 pi i a/d} <V>;
/// |<U>|, |<V>| and both dispersions are unchanged.  O(d), exact (a
/// permutation and unit phases).
inline StateVector translate(const StateVector& psi, long a, long b,
                             const OperatorSet& ops) {
  require(psi.size() == ops.dim, "translate: state dimension mismatch");
  require_normalized(psi, "translate");
  IndexRange r(ops.dim);
  const std::size_t d = ops.dim;
  StateVector out(d);
  for (std::size_t p = 0; p < d; ++p)
    out[r.pos_wrapped(r.j_of(p) + b)] = psi[p];
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (std::size_t p = 0; p < d; ++p)
    out[p] *= std::polar(1.0, -w * static_cast<double>(a) *
                                  static_cast<double>(r.j_of(p)));
  return out;
}

/// Pair (U, V^m) with commutation phase reduced into (0, pi]: when
/// 2 pi m / d > pi the clock operator is replaced by its adjoint, flipping
/// the phase sign, and phi becomes 2 pi - 2 pi m / d.  Dispersions are
/// unaffected by the replacement since |<U^dag>| = |<U>|.
inline OperatorSet clock_shift_pair(std::size_t d, std::size_t m) {
  require(d >= 2, "clock_shift_pair: d >= 2");
  require(m >= 1 && m <= d - 1,
          "clock_shift_pair: need 1 <= m <= d-1 (m = 0 gives the degenerate "
          "commuting pair)");
  OperatorSet ops;
  ops.dim = d;
  ops.dft = dft_matrix(d);
  ops.parity = build_parity(d);
  auto uv = build_generators(d);
  ops.gen_u = std::move(uv.first);
  ops.gen_v = std::move(uv.second);

  double raw = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d);
  if (raw <= std::numbers::pi + 1e-15) {
    ops.clock = clock_matrix(d);
    ops.phi = raw;
  } else {
    ops.clock = adjoint(clock_matrix(d));
    ops.phi = 2.0 * std::numbers::pi - raw;
  }
  ops.shift = shift_matrix(d, static_cast<long>(m));
  detail::fill_cos_sin(ops.clock, ops.clock_cos, ops.clock_sin);
  detail::fill_cos_sin(ops.shift, ops.shift_cos, ops.shift_sin);
  return ops;
}

/// <psi|W|psi> by one matvec.
inline cplx expectation(const StateVector& psi, const Matrix& w) {
  return inner(psi, matvec(w, psi));
}

}  // namespace clockshift
