// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include "clockshift/format.hpp"
#include "clockshift/operators.hpp"
#include "clockshift/rng.hpp"

namespace clockshift {

/// Dispersion of a unitary W in state psi: 1 - |<psi|W|psi>|^2, in [0, 1].
/// Translation- and phase-invariant, which is the point of using it.
inline double dispersion(const StateVector& psi, const Matrix& w,
                         double unitary_tol = 1e-10) {
  require_normalized(psi, "dispersion");
  require(w.rows() == w.cols() && w.rows() == psi.size(),
          "dispersion: operator/state dimension mismatch");
  require(is_unitary(w, unitary_tol), "dispersion: operator is not unitary");
  double mag2 = std::norm(expectation(psi, w));
  return std::clamp(1.0 - mag2, 0.0, 1.0);
}

/// The commutation angle Phi held as (sin(Phi/2), cos(Phi/2)) so that the
/// Pauli endpoint Phi = pi carries A = tan(Phi/2) = infinity exactly.
struct BoundParams {
  double phi = 0.0;
  double sin_half = 0.0;
  double cos_half = 1.0;

  static BoundParams from_phi(double phi) {
    require(phi > 0.0 && phi <= std::numbers::pi + 1e-15,
            "bound requires 0 < phi <= pi (commuting operators carry no "
            "uncertainty constraint)");
    BoundParams p;
    p.phi = phi;
    if (std::abs(phi - std::numbers::pi) <= 1e-15) {
      p.sin_half = 1.0;
      p.cos_half = 0.0;
    } else {
      p.sin_half = std::sin(phi / 2.0);
      p.cos_half = std::cos(phi / 2.0);
    }
    return p;
  }

  bool a_is_infinite() const { return cos_half == 0.0; }
  double a() const { return sin_half / cos_half; }
};

/// Normalized slack of the unitary-pair uncertainty bound:
///   m = ((1+2A)/A^2) dU2 dV2 + dU2 + dV2 - 1,   A = tan(phi/2),
/// which at phi = pi degenerates cleanly to dU2 + dV2 - 1 (the Pauli form).
/// The bound holds iff m >= 0.
inline double uncertainty_margin(double du2, double dv2, double phi) {
  require(du2 >= -1e-12 && du2 <= 1.0 + 1e-12 && dv2 >= -1e-12 &&
              dv2 <= 1.0 + 1e-12,
          "uncertainty_margin: dispersions must lie in [0, 1]");
  BoundParams p = BoundParams::from_phi(phi);
  const double s = p.sin_half, c = p.cos_half;
  const double coeff = (c * c + 2.0 * s * c) / (s * s);  // (1+2A)/A^2
  return coeff * du2 * dv2 + du2 + dv2 - 1.0;
}

/// Symmetric saturation point of the bound: the dU2 = dV2 value with zero
/// margin, A/(1+2A) = s/(c+2s).  Exactly 1/2 at phi = pi; ~ pi/d when
/// phi = 2 pi / d with large d.
inline double symmetric_bound(double phi) {
  BoundParams p = BoundParams::from_phi(phi);
  return p.sin_half / (p.cos_half + 2.0 * p.sin_half);
}

/// Haar-random audit of the bound for the standard pair in dimension d.
struct MarginAudit {
  std::size_t dim = 0;
  double phi = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double min_margin = 0.0;
  StateVector argmin_state;
  // saturation probes evaluated through the same pipeline:
  double probe_margin_localized = 0.0;  // |j=0>, (dU2, dV2) = (0, 1)
  double probe_margin_dual = 0.0;       // uniform state, (dU2, dV2) = (1, 0)
};

namespace detail {

// O(d) expectations for the standard pair: clock is diagonal, shift is the
// cyclic permutation.
inline cplx clock_expectation(const StateVector& psi) {
  const std::size_t d = psi.size();
  IndexRange r(d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  cplx s = 0.0;
  for (std::size_t p = 0; p < d; ++p)
    s += std::norm(psi[p]) * std::polar(1.0, w * static_cast<double>(r.j_of(p)));
  return s;
}

inline cplx shift_expectation(const StateVector& psi) {
  const std::size_t d = psi.size();
  cplx s = 0.0;
  for (std::size_t p = 0; p < d; ++p)
    s += std::conj(psi[(p + 1) % d]) * psi[p];
  return s;
}

inline double margin_of_state(const StateVector& psi, double phi) {
  double du2 = std::clamp(1.0 - std::norm(clock_expectation(psi)), 0.0, 1.0);
  double dv2 = std::clamp(1.0 - std::norm(shift_expectation(psi)), 0.0, 1.0);
  return uncertainty_margin(du2, dv2, phi);
}

}  // namespace detail

inline MarginAudit verify_random_states(std::size_t d, std::size_t count,
                                        std::uint64_t seed) {
  require(d >= 2, "verify_random_states: d >= 2");
  require(count >= 1, "verify_random_states: count >= 1");
  MarginAudit audit;
  audit.dim = d;
  audit.phi = 2.0 * std::numbers::pi / static_cast<double>(d);
  audit.count = count;
  audit.seed = seed;

  IndexRange r(d);
  StateVector localized(d, cplx(0.0, 0.0));
  localized[r.pos_of(0)] = 1.0;
  audit.probe_margin_localized = detail::margin_of_state(localized, audit.phi);
  StateVector dual(d, cplx(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
  audit.probe_margin_dual = detail::margin_of_state(dual, audit.phi);

  SeededRng rng(seed);
  audit.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    StateVector psi = haar_state(d, rng);
    double margin = detail::margin_of_state(psi, audit.phi);
    if (margin < audit.min_margin) {
      audit.min_margin = margin;
      audit.argmin_state = std::move(psi);
    }
  }
  return audit;
}

inline std::string margin_audit_json(const MarginAudit& a) {
  JsonObjectBuilder b;
  b.field("d", a.dim)
      .field("phi", a.phi)
      .field("count", a.count)
      .field("seed", a.seed)
      .field("min_margin", a.min_margin)
      .raw("argmin_state", json_complex_array(a.argmin_state))
      .field("probe_margin_localized", a.probe_margin_localized)
      .field("probe_margin_dual", a.probe_margin_dual);
  return b.str();
}

/// Rotate the operator phases (U -> e^{i mu} U, V -> e^{i mu'} V) so that
/// <U> and <V> are real nonnegative for `psi`; an expectation that is zero
/// leaves its operator untouched (the phase is undefined, and nothing
/// downstream depends on it).  The commutation phase is unchanged.
inline OperatorSet rephase_for_state(const StateVector& psi, const OperatorSet& ops) {
  require(psi.size() == ops.dim, "rephase_for_state: dimension mismatch");
  OperatorSet out = ops;
  cplx eu = expectation(psi, ops.clock);
  cplx ev = expectation(psi, ops.shift);
  if (std::abs(eu) > 0.0) {
    out.clock = std::polar(1.0, -std::arg(eu)) * ops.clock;
    detail::fill_cos_sin(out.clock, out.clock_cos, out.clock_sin);
  }
  if (std::abs(ev) > 0.0) {
    out.shift = std::polar(1.0, -std::arg(ev)) * ops.shift;
    detail::fill_cos_sin(out.shift, out.shift_cos, out.shift_sin);
  }
  return out;
}

namespace detail {

inline void require_real_nonneg_phases(const StateVector& psi,
                                       const OperatorSet& ops,
                                       const std::string& who) {
  cplx eu = expectation(psi, ops.clock);
  cplx ev = expectation(psi, ops.shift);
  require(std::abs(eu.imag()) <= 1e-10 && eu.real() >= -1e-10 &&
              std::abs(ev.imag()) <= 1e-10 && ev.real() >= -1e-10,
          who + ": operator phases not fixed (<U>, <V> must be real "
                "nonnegative; apply rephase_for_state first)");
}

}  // namespace detail

/// The two-step chain behind the bound:
///   dU dV >= dS_U dS_V >= |<[S_U, S_V]>| / 2.
struct RobertsonChain {
  double du_dv = 0.0;
  double dsu_dsv = 0.0;
  double half_commutator = 0.0;
  bool holds = false;
};

inline RobertsonChain robertson_chain_check(const StateVector& psi,
                                            const OperatorSet& ops) {
  require_normalized(psi, "robertson_chain_check");
  require(psi.size() == ops.dim, "robertson_chain_check: dimension mismatch");
  detail::require_real_nonneg_phases(psi, ops, "robertson_chain_check");

  double du2 = std::clamp(1.0 - std::norm(expectation(psi, ops.clock)), 0.0, 1.0);
  double dv2 = std::clamp(1.0 - std::norm(expectation(psi, ops.shift)), 0.0, 1.0);

  StateVector su_psi = matvec(ops.clock_sin, psi);
  StateVector sv_psi = matvec(ops.shift_sin, psi);
  double dsu2 = state_norm2(su_psi) - std::norm(inner(psi, su_psi));
  double dsv2 = state_norm2(sv_psi) - std::norm(inner(psi, sv_psi));
  // <[S_U, S_V]> = <S_U psi | S_V psi> - <S_V psi | S_U psi> = 2i Im(...)
  cplx cross = inner(su_psi, sv_psi);

  RobertsonChain chain;
  chain.du_dv = std::sqrt(std::max(0.0, du2 * dv2));
  chain.dsu_dsv = std::sqrt(std::max(0.0, dsu2) * std::max(0.0, dsv2));
  chain.half_commutator = std::abs(cross.imag());
  chain.holds = chain.du_dv >= chain.dsu_dsv - 1e-12 &&
                chain.dsu_dsv >= chain.half_commutator - 1e-12;
  return chain;
}

/// Residual of the exact operator identity
///   [S_U, S_V] = -i tan(phi/2) (C_U C_V + C_V C_U),
/// which holds for any unitary pair with UV = e^{i phi} V U.  Undefined at
/// phi = pi where tan diverges (there the anticommutator itself vanishes;
/// that is checked separately as a property).
inline double sine_commutator_identity_residual(const OperatorSet& ops) {
  require(std::abs(ops.phi - std::numbers::pi) > 1e-12,
          "sine_commutator_identity_residual: identity is singular at phi = pi");
  double t = std::tan(ops.phi / 2.0);
  Matrix comm = matmul(ops.clock_sin, ops.shift_sin) -
                matmul(ops.shift_sin, ops.clock_sin);
  Matrix anti = matmul(ops.clock_cos, ops.shift_cos) +
                matmul(ops.shift_cos, ops.clock_cos);
  return max_abs(comm + cplx(0.0, t) * anti);
}

/// Phase-fixed cross-term lower bound:
///   |<C_U C_V>| >= sqrt(1-dU2) sqrt(1-dV2) - dU dV.
struct CrossTermBoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

inline CrossTermBoundReport cross_term_bound_check(const StateVector& psi, const OperatorSet& ops) {
  require_normalized(psi, "cross_term_bound_check");
  require(psi.size() == ops.dim, "cross_term_bound_check: dimension mismatch");
  detail::require_real_nonneg_phases(psi, ops, "cross_term_bound_check");

  double du2 = std::clamp(1.0 - std::norm(expectation(psi, ops.clock)), 0.0, 1.0);
  double dv2 = std::clamp(1.0 - std::norm(expectation(psi, ops.shift)), 0.0, 1.0);
  StateVector cu_psi = matvec(ops.clock_cos, psi);
  StateVector cv_psi = matvec(ops.shift_cos, psi);

  CrossTermBoundReport rep;
  rep.lhs = std::abs(inner(cu_psi, cv_psi));
  rep.rhs = std::sqrt(1.0 - du2) * std::sqrt(1.0 - dv2) - std::sqrt(du2 * dv2);
  rep.holds = rep.lhs >= rep.rhs - 1e-12;
  return rep;
}

}  // namespace clockshift
