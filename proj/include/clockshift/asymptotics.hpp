// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include "clockshift/eigen.hpp"
#include "clockshift/uncertainty.hpp"

namespace clockshift {

namespace detail {

inline void require_delta(double delta) {
  require(delta > 0.0 && delta <= std::numbers::pi / 2.0 + 1e-15,
          "localization window requires 0 < delta <= pi/2");
}

/// |j| <= (2/pi) floor(d/2) delta, boundary included.
inline bool in_window(long j, std::size_t d, double delta) {
  double r = (2.0 / std::numbers::pi) * static_cast<double>(d / 2) * delta;
  return std::abs(static_cast<double>(j)) <= r;
}

}  // namespace detail

/// Diagonal 0/1 projector onto the index window |j| <= (2/pi) floor(d/2) delta.
/// Idempotent and exactly commuting with the clock operator.
inline Matrix localization_projector(std::size_t d, double delta) {
  require(d >= 1, "localization_projector: d >= 1");
  detail::require_delta(delta);
  IndexRange r(d);
  Matrix p(d, d);
  for (std::size_t a = 0; a < d; ++a)
    if (detail::in_window(r.j_of(a), d, delta)) p(a, a) = 1.0;
  return p;
}

/// Localization defect: epsilon = 1 - <psi|P_delta|psi>.  psi belongs to the
/// delta-localized set at exactly this epsilon and anything larger.
inline double membership_epsilon(const StateVector& psi, double delta) {
  require_normalized(psi, "membership_epsilon");
  detail::require_delta(delta);
  IndexRange r(psi.size());
  double inside = 0.0;
  for (std::size_t p = 0; p < psi.size(); ++p)
    if (detail::in_window(r.j_of(p), psi.size(), delta)) inside += std::norm(psi[p]);
  return std::clamp(1.0 - inside, 0.0, 1.0);
}

/// Same defect in the dual basis (projector conjugated by the DFT).
inline double membership_epsilon_dual(const StateVector& psi, double delta) {
  require_normalized(psi, "membership_epsilon_dual");
  StateVector dual = matvec(adjoint(dft_matrix(psi.size())), psi);
  return membership_epsilon(dual, delta);
}

/// Localization controls dispersion:  dU2 <= delta^2/2 + 2 epsilon.
struct LocalizationBoundReport {
  double du2 = 0.0;
  double epsilon = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool holds = false;
};

inline LocalizationBoundReport localization_bound_check(const StateVector& psi, double delta) {
  LocalizationBoundReport rep;
  rep.epsilon = membership_epsilon(psi, delta);
  rep.du2 = std::clamp(1.0 - std::norm(detail::clock_expectation(psi)), 0.0, 1.0);
  rep.bound = delta * delta / 2.0 + 2.0 * rep.epsilon;
  rep.slack = rep.bound - rep.du2;
  rep.holds = rep.slack >= -1e-12;
  return rep;
}

/// Recentering translation: detects the index offset k at which the state
/// sits (from the phase of <U>) and shifts it back, leaving the residual
/// phase |alpha| <= pi/d.
struct RecenterResult {
  long k = 0;                 // detected center offset, centered representative
  StateVector recentered;     // V^{-k} psi
  double alpha_after = 0.0;   // phase of <U> after recentering
};

inline RecenterResult recenter_state(const StateVector& psi) {
  require_normalized(psi, "recenter_state");
  const std::size_t d = psi.size();
  cplx eu = detail::clock_expectation(psi);
  require(std::abs(eu) > 1e-14,
          "recenter_state: <U> vanishes, the recentering phase is undefined");

  IndexRange r(d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  long best_k = 0;
  double best_res = std::numeric_limits<double>::infinity();
  for (long k = r.j_min(); k <= r.j_max(); ++k) {
    double res = std::abs(std::arg(eu * std::polar(1.0, -w * static_cast<double>(k))));
    if (res < best_res - 1e-15) {
      best_res = res;
      best_k = k;
    }
  }

  RecenterResult out;
  out.k = best_k;
  out.recentered.resize(d);
  for (std::size_t p = 0; p < d; ++p)
    out.recentered[r.pos_wrapped(r.j_of(p) - best_k)] = psi[p];
  out.alpha_after = std::arg(detail::clock_expectation(out.recentered));
  check(std::abs(out.alpha_after) <= std::numbers::pi / static_cast<double>(d) + 1e-12,
        "recenter_state: residual phase exceeds pi/d");
  return out;
}

/// Residual of the second-order expansion of the clock operator,
///   || U psi - (1 + i sqrt(2 pi/d) u - (pi/d) u^2) psi ||^2,
/// against the bound 4 delta^2 + 4 delta^4 + (4 + pi^2 + pi^4/4) epsilon.
struct ExpansionResidual {
  double residual = 0.0;
  double bound = 0.0;
  double epsilon = 0.0;
  bool holds = false;
};

inline ExpansionResidual expansion_residual(const StateVector& psi, double delta) {
  require_normalized(psi, "expansion_residual");
  detail::require_delta(delta);
  const std::size_t d = psi.size();
  IndexRange r(d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);

  ExpansionResidual rep;
  rep.epsilon = membership_epsilon(psi, delta);
  double acc = 0.0;
  for (std::size_t p = 0; p < d; ++p) {
    // per-component error of e^{i phi} vs 1 + i phi - phi^2/2, phi = 2 pi j/d
    double phi = w * static_cast<double>(r.j_of(p));
    cplx err = std::polar(1.0, phi) - cplx(1.0 - 0.5 * phi * phi, phi);
    acc += std::norm(err) * std::norm(psi[p]);
  }
  rep.residual = acc;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  rep.bound = 4.0 * delta * delta + 4.0 * std::pow(delta, 4) +
              (4.0 + pi2 + pi2 * pi2 / 4.0) * rep.epsilon;
  rep.holds = rep.residual <= rep.bound + 1e-12;
  return rep;
}

/// dU2 against its small-dispersion proxy (2 pi/d)(<u^2> - <u>^2).  No
/// assertion: the relation is only asymptotic, the gap is reported.
struct DispersionVsVariance {
  double du2 = 0.0;
  double proxy = 0.0;
  double rel_gap = 0.0;
};

inline DispersionVsVariance dispersion_vs_variance(const StateVector& psi) {
  require_normalized(psi, "dispersion_vs_variance");
  const std::size_t d = psi.size();
  IndexRange r(d);
  const double s = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(d));
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t p = 0; p < d; ++p) {
    double nu = s * static_cast<double>(r.j_of(p));
    double wgt = std::norm(psi[p]);
    m1 += nu * wgt;
    m2 += nu * nu * wgt;
  }
  DispersionVsVariance rep;
  rep.du2 = std::clamp(1.0 - std::norm(detail::clock_expectation(psi)), 0.0, 1.0);
  rep.proxy = (2.0 * std::numbers::pi / static_cast<double>(d)) * (m2 - m1 * m1);
  double denom = std::max(rep.du2, rep.proxy);
  rep.rel_gap = denom == 0.0 ? 0.0 : std::abs(rep.du2 - rep.proxy) / denom;
  return rep;
}

/// Spectrum of the Hermitian form of the generator commutator.  [u, v] is
/// anti-Hermitian; we diagonalize K = [u, v] / i, whose eigenvalues cluster
/// near +1 on a large subspace (the commutator acts like i there).
struct CommutatorSpectrumReport {
  std::size_t dim = 0;
  double tolerance = 0.0;
  std::vector<double> eigenvalues;  // ascending
  double near_one_fraction = 0.0;   // |lambda - 1| <= tolerance
  double trace_residual = 0.0;      // |sum of eigenvalues|
};

inline CommutatorSpectrumReport commutator_spectrum(std::size_t d, double tolerance) {
  require(d >= 2, "commutator_spectrum: d >= 2");
  require(tolerance > 0.0, "commutator_spectrum: tolerance > 0");
  auto [u, v] = build_generators(d);
  Matrix comm = matmul(u, v) - matmul(v, u);
  Matrix k = cplx(0.0, -1.0) * comm;  // [u,v]/i
  // hermitize away matmul skew
  for (std::size_t i = 0; i < d; ++i) {
    k(i, i) = k(i, i).real();
    for (std::size_t j = i + 1; j < d; ++j) {
      cplx m = 0.5 * (k(i, j) + std::conj(k(j, i)));
      k(i, j) = m;
      k(j, i) = std::conj(m);
    }
  }
  EigenDecomposition ed = hermitian_eigendecomposition(k);

  CommutatorSpectrumReport rep;
  rep.dim = d;
  rep.tolerance = tolerance;
  rep.eigenvalues = std::move(ed.eigenvalues);
  std::size_t near = 0;
  double sum = 0.0;
  for (double lambda : rep.eigenvalues) {
    if (std::abs(lambda - 1.0) <= tolerance) ++near;
    sum += lambda;
  }
  rep.near_one_fraction = static_cast<double>(near) / static_cast<double>(d);
  rep.trace_residual = std::abs(sum);
  return rep;
}

inline std::string commutator_spectrum_json(const CommutatorSpectrumReport& rep) {
  // fixed 64-bin histogram over [min, max]
  const std::size_t bins = 64;
  double lo = rep.eigenvalues.front(), hi = rep.eigenvalues.back();
  std::vector<std::size_t> counts(bins, 0);
  double width = hi - lo;
  for (double lambda : rep.eigenvalues) {
    std::size_t b = width == 0.0
                        ? 0
                        : std::min(bins - 1, static_cast<std::size_t>(
                                                 (lambda - lo) / width * bins));
    ++counts[b];
  }
  JsonObjectBuilder hist;
  hist.field("bin_count", bins)
      .field("min", lo)
      .field("max", hi)
      .raw("counts", json_int_array(counts));
  JsonObjectBuilder b;
  b.field("d", rep.dim)
      .field("tolerance", rep.tolerance)
      .field("near_one_fraction", rep.near_one_fraction)
      .field("trace_residual", rep.trace_residual)
      .raw("eigenvalue_histogram", hist.str());
  return b.str();
}

/// Shifting by V^n costs at most pi n / d of window width:
/// membership at delta before implies membership at delta + pi n / d after,
/// with epsilon not increasing.
struct TranslationSetReport {
  double delta_before = 0.0, delta_after = 0.0;
  double eps_before = 0.0, eps_after = 0.0;
  bool holds = false;
};

inline TranslationSetReport shift_window_property(const StateVector& psi,
                                                       long n, double delta) {
  require_normalized(psi, "shift_window_property");
  require(n >= 0, "shift_window_property: n >= 0");
  const std::size_t d = psi.size();
  double shifted_delta =
      delta + std::numbers::pi * static_cast<double>(n) / static_cast<double>(d);
  require(shifted_delta <= std::numbers::pi / 2.0 + 1e-15,
          "shift_window_property: shifted delta exceeds pi/2");

  TranslationSetReport rep;
  rep.delta_before = delta;
  rep.delta_after = shifted_delta;
  rep.eps_before = membership_epsilon(psi, delta);

  IndexRange r(d);
  StateVector shifted(d);
  for (std::size_t p = 0; p < d; ++p)
    shifted[r.pos_wrapped(r.j_of(p) + n)] = psi[p];
  rep.eps_after = membership_epsilon(shifted, shifted_delta);
  rep.holds = rep.eps_after <= rep.eps_before + 1e-12;
  return rep;
}

/// Discretized gaussian c_j ~ e^{-nu_j^2 / (2 sigma^2)} with
/// nu_j = sqrt(2 pi/d) j; the sigma = 1 member is DFT-self-dual.  The
/// normalization constant approaches sigma sqrt(d/2) (squared) for large d.
struct GaussianState {
  std::size_t dim = 0;
  double sigma = 0.0;
  StateVector state;
  double norm_constant = 0.0;            // N with N^2 = sum of |amplitudes|^2
  double predicted_norm_constant = 0.0;  // sqrt(sigma sqrt(d/2))
};

inline GaussianState make_gaussian(std::size_t d, double sigma) {
  require(d >= 2, "make_gaussian: d >= 2");
  require(sigma > 0.0, "make_gaussian: sigma > 0");
  IndexRange r(d);
  GaussianState g;
  g.dim = d;
  g.sigma = sigma;
  g.state.resize(d);
  double norm2 = 0.0;
  for (std::size_t p = 0; p < d; ++p) {
    double nu2 = (2.0 * std::numbers::pi / static_cast<double>(d)) *
                 static_cast<double>(r.j_of(p)) * static_cast<double>(r.j_of(p));
    double amp = std::exp(-nu2 / (2.0 * sigma * sigma));
    g.state[p] = amp;
    norm2 += amp * amp;
  }
  g.norm_constant = std::sqrt(norm2);
  g.predicted_norm_constant =
      std::sqrt(sigma * std::sqrt(static_cast<double>(d) / 2.0));
  for (cplx& c : g.state) c /= g.norm_constant;
  return g;
}

}  // namespace clockshift
