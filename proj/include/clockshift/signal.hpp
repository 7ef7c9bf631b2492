// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include "clockshift/uncertainty.hpp"

namespace clockshift {

/// A period-d discrete signal, samples over the centered index range in
/// ascending-j order and normalized to unit power.  Raw signals come in
/// unnormalized; make_signal handles that once so every statistic below can
/// assume sum |c_j|^2 = 1.
struct PeriodicSignal {
  std::vector<cplx> samples;

  std::size_t period() const { return samples.size(); }
};

inline PeriodicSignal make_signal(std::vector<cplx> raw) {
  require(raw.size() >= 2, "make_signal: need period >= 2");
  return {normalized(std::move(raw))};
}

/// Cyclic autocorrelation R(m) = sum_j c*_{j+m} c_j.  Index arithmetic wraps
/// inside the centered range, exactly matching the shift operator, so
/// R(m) = <V^m> for the state with the same amplitudes.  R(0) = 1.
inline cplx autocorrelation(const PeriodicSignal& sig, long m) {
  const std::size_t d = sig.period();
  IndexRange r(d);
  cplx acc = 0.0;
  for (std::size_t p = 0; p < d; ++p)
    acc += std::conj(sig.samples[r.pos_wrapped(r.j_of(p) + m)]) * sig.samples[p];
  return acc;
}

/// Fourier transform of the intensity, T(n) = sum_j |c_j|^2 e^{2 pi i j n/d}
/// = <U^n>.  T(0) = 1.
inline cplx intensity_ft(const PeriodicSignal& sig, long n) {
  const std::size_t d = sig.period();
  IndexRange r(d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  cplx acc = 0.0;
  for (std::size_t p = 0; p < d; ++p)
    acc += std::norm(sig.samples[p]) *
           std::polar(1.0, w * static_cast<double>(r.j_of(p)) * static_cast<double>(n));
  return acc;
}

/// R(m) and T(n) for every centered lag/shift.
struct SignalStats {
  std::vector<cplx> correlation;   // R(m), m ascending over the centered range
  std::vector<cplx> intensity_ft;  // T(n), n ascending
};

inline SignalStats signal_stats(const PeriodicSignal& sig) {
  IndexRange r(sig.period());
  SignalStats st;
  for (long m = r.j_min(); m <= r.j_max(); ++m) {
    st.correlation.push_back(autocorrelation(sig, m));
    st.intensity_ft.push_back(intensity_ft(sig, m));
  }
  return st;
}

namespace detail {

inline std::vector<cplx> dual_samples(const PeriodicSignal& sig) {
  // c~_k = (1/sqrt d) sum_j e^{-2 pi i j k/d} c_j = (F^dag c)_k
  return matvec(adjoint(dft_matrix(sig.period())), sig.samples);
}

}  // namespace detail

/// Both routes to the correlation function, Wiener-Khinchin style:
/// sum_j c*_{j+m} c_j vs sum_k e^{-2 pi i k m/d} |c~_k|^2 for every m.
/// Returns the largest deviation (identically zero up to rounding).
inline double spectral_identity_check(const PeriodicSignal& sig) {
  const std::size_t d = sig.period();
  IndexRange r(d);
  std::vector<cplx> dual = detail::dual_samples(sig);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  double worst = 0.0;
  for (long m = r.j_min(); m <= r.j_max(); ++m) {
    cplx lhs = autocorrelation(sig, m);
    cplx rhs = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      rhs += std::norm(dual[p]) *
             std::polar(1.0, -w * static_cast<double>(r.j_of(p)) * static_cast<double>(m));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// The mirror identity: sum_j |c_j|^2 e^{2 pi i j n/d} vs
/// sum_k c~*_{k+n} c~_k for every n; both equal <U^n>.
inline double intensity_ft_check(const PeriodicSignal& sig) {
  const std::size_t d = sig.period();
  IndexRange r(d);
  std::vector<cplx> dual = detail::dual_samples(sig);
  PeriodicSignal dual_sig{dual};
  double worst = 0.0;
  for (long n = r.j_min(); n <= r.j_max(); ++n) {
    cplx lhs = intensity_ft(sig, n);
    cplx rhs = autocorrelation(dual_sig, n);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

/// Verdict vocabulary is deliberately two-valued: the bound is a necessary
/// condition only, so nothing is ever declared feasible.
enum class Feasibility { kInfeasible, kOtherwiseUndecided };

inline const char* to_string(Feasibility f) {
  return f == Feasibility::kInfeasible ? "INFEASIBLE" : "OTHERWISE-UNDECIDED";
}

/// Can any period-d signal have |R(1)| = r1_mag and |T(1)| = t1_mag?
/// Maps the claim to dispersions (dU2 = 1 - t1^2, dV2 = 1 - r1^2) and
/// evaluates the uncertainty margin at phi = 2 pi/d.
inline Feasibility feasibility_audit(double r1_mag, double t1_mag, std::size_t d) {
  require(d >= 2, "feasibility_audit: d >= 2");
  require(r1_mag >= 0.0 && r1_mag <= 1.0 && t1_mag >= 0.0 && t1_mag <= 1.0,
          "feasibility_audit: claimed magnitudes must lie in [0, 1]");
  double du2 = 1.0 - t1_mag * t1_mag;
  double dv2 = 1.0 - r1_mag * r1_mag;
  double margin = uncertainty_margin(du2, dv2, 2.0 * std::numbers::pi / static_cast<double>(d));
  return margin < -1e-10 ? Feasibility::kInfeasible : Feasibility::kOtherwiseUndecided;
}

}  // namespace clockshift
