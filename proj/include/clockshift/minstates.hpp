// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

#include "clockshift/eigen.hpp"
#include "clockshift/uncertainty.hpp"

namespace clockshift {

/// Ground data of the Harper Hamiltonian H(theta) = -cos C_U - sin C_V.
/// max_value = -h_min is the attained maximum of
/// cos(theta) |<U>| + sin(theta) |<V>| over all states; the ground states
/// are the minimum-uncertainty states realizing it.
struct HarperResult {
  double theta = 0.0;
  std::size_t dim = 0;
  double h_min = 0.0;
  double max_value = 0.0;
  std::vector<StateVector> ground_states;
  bool degenerate = false;
  std::vector<int> parity_labels;  // +1 / -1, aligned with ground_states
};

namespace detail {

/// Global-phase canonicalization: the largest-magnitude amplitude is made
/// real positive (ties break to the lowest index).  Makes eigenvector output
/// reproducible and makes real-up-to-phase states literally real.
inline StateVector canonical_phase(StateVector psi) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    double m = std::abs(psi[i]);
    if (m > best_mag + 1e-12) {
      best_mag = m;
      best = i;
    }
  }
  if (best_mag > 0.0) {
    cplx rot = std::conj(psi[best]) / std::abs(psi[best]);
    for (cplx& c : psi) c *= rot;
    psi[best] = psi[best].real();  // scrub the residual imaginary dust
  }
  return psi;
}

}  // namespace detail

/// Joint diagonalization of the parity operator on a (small) degenerate
/// eigenspace: given orthonormal columns spanning the space, returns parity
/// eigenstates and their +-1 labels, labels ascending (-1 block first).
inline std::pair<std::vector<StateVector>, std::vector<int>> resolve_parity(
    const std::vector<StateVector>& basis, const Matrix& parity) {
  const std::size_t g = basis.size();
  const std::size_t d = parity.rows();
  Matrix small(g, g);
  std::vector<StateVector> p_basis(g);
  for (std::size_t c = 0; c < g; ++c) p_basis[c] = matvec(parity, basis[c]);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = 0; c < g; ++c) small(r, c) = inner(basis[r], p_basis[c]);
  EigenDecomposition ed = hermitian_eigendecomposition(small, 1e-8);

  std::vector<StateVector> states(g, StateVector(d, cplx(0.0, 0.0)));
  std::vector<int> labels(g);
  for (std::size_t c = 0; c < g; ++c) {
    for (std::size_t b = 0; b < g; ++b)
      for (std::size_t r = 0; r < d; ++r)
        states[c][r] += ed.eigenvectors(b, c) * basis[b][r];
    states[c] = detail::canonical_phase(normalized(std::move(states[c])));
    double lambda = ed.eigenvalues[c];
    check(std::abs(std::abs(lambda) - 1.0) <= 1e-8,
          "resolve_parity: subspace is not parity invariant (eigenvalue " +
              std::to_string(lambda) + ")");
    labels[c] = lambda < 0.0 ? -1 : +1;
  }
  return {std::move(states), std::move(labels)};
}

namespace detail {

inline HarperResult extract_ground(const Matrix& h, const Matrix& parity,
                                   double theta, std::size_t d) {
  EigenDecomposition ed = hermitian_eigendecomposition(h);
  const double thresh = degeneracy_threshold(frobenius_norm(h));

  HarperResult res;
  res.theta = theta;
  res.dim = d;
  res.h_min = ed.eigenvalues[0];
  res.max_value = -res.h_min;

  std::vector<StateVector> cluster;
  for (std::size_t c = 0; c < d && ed.eigenvalues[c] <= res.h_min + thresh; ++c) {
    StateVector psi(d);
    for (std::size_t r = 0; r < d; ++r) psi[r] = ed.eigenvectors(r, c);
    cluster.push_back(std::move(psi));
  }
  res.degenerate = cluster.size() > 1;

  if (!res.degenerate) {
    StateVector psi = canonical_phase(normalized(std::move(cluster[0])));
    cplx p_exp = inner(psi, matvec(parity, psi));
    check(std::abs(std::abs(p_exp) - 1.0) <= 1e-8,
          "harper_ground: nondegenerate ground state is not a parity "
          "eigenstate, <P> = " + std::to_string(p_exp.real()));
    res.parity_labels.push_back(p_exp.real() < 0.0 ? -1 : +1);
    res.ground_states.push_back(std::move(psi));
  } else {
    auto resolved = resolve_parity(cluster, parity);
    res.ground_states = std::move(resolved.first);
    res.parity_labels = std::move(resolved.second);
  }
  return res;
}

}  // namespace detail

/// Ground eigenspace of H(theta) in dimension d.  When the smallest
/// eigenvalue is degenerate (threshold per degeneracy_threshold), parity is
/// diagonalized on the eigenspace and the joint eigenstates are returned
/// with their labels; nondegenerate ground states are parity eigenstates
/// automatically and simply get labeled.
inline HarperResult harper_ground(double theta, std::size_t d) {
  HarperHamiltonian hh = build_harper(theta, d);
  return detail::extract_ground(hh.h, build_parity(d), theta, d);
}

/// Residual non-realness of a state, minimized over a global phase:
/// min_gamma max_j |Im(e^{i gamma} c_j)|.  Zero (to rounding) for any state
/// that is real up to a global phase.
inline double realness_check(const StateVector& psi) {
  require(!psi.empty(), "realness_check: empty state");
  auto worst_imag = [&](double gamma) {
    cplx rot = std::polar(1.0, gamma);
    double worst = 0.0;
    for (const cplx& c : psi) worst = std::max(worst, std::abs((rot * c).imag()));
    return worst;
  };
  // coarse scan over half a period (gamma and gamma+pi give the same value)
  const int grid = 1024;
  double best_g = 0.0, best = worst_imag(0.0);
  for (int i = 1; i < grid; ++i) {
    double g = std::numbers::pi * i / grid;
    double val = worst_imag(g);
    if (val < best) {
      best = val;
      best_g = g;
    }
  }
  // golden-section refinement around the best grid point
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_g - std::numbers::pi / grid, hi = best_g + std::numbers::pi / grid;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = worst_imag(x1), f2 = worst_imag(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = worst_imag(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = worst_imag(x2);
    }
  }
  return std::min({best, f1, f2});
}

/// Result of phase_fix: the translated and phase-canonicalized state, the
/// translation that was applied, and what is left of the expectation phases.
/// When an expectation vanishes its rotation is skipped (phase undefined)
/// and the corresponding flag is set.
struct PhaseFixResult {
  StateVector state;
  long a = 0, b = 0;
  bool u_skipped = false, v_skipped = false;
  double residual_u = 0.0, residual_v = 0.0;  // |Im| plus any negative real part
};

namespace detail {

/// Best integer t in [0, d) making e^{2 pi i t / d} z closest to the
/// positive real axis.
inline long best_rotation_steps(cplx z, std::size_t d) {
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  long best_t = 0;
  double best_res = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < d; ++t) {
    double res = std::abs(std::arg(z * std::polar(1.0, w * static_cast<double>(t))));
    if (res < best_res - 1e-15) {
      best_res = res;
      best_t = static_cast<long>(t);
    }
  }
  return best_t;
}

}  // namespace detail

/// Translate psi (and fix its global phase) so that <U> and <V> become real
/// nonnegative.  Exact whenever the expectation phases are multiples of
/// 2 pi / d — which Harper ground states and their translates satisfy; for
/// anything else the closest achievable rotation is applied and the leftover
/// is reported.  |<U>| and |<V>| are unchanged.
inline PhaseFixResult phase_fix(const StateVector& psi, const OperatorSet& ops) {
  require_normalized(psi, "phase_fix");
  require(psi.size() == ops.dim, "phase_fix: dimension mismatch");

  cplx eu = detail::clock_expectation(psi);
  cplx ev = detail::shift_expectation(psi);

  PhaseFixResult out;
  if (std::abs(eu) <= 1e-14)
    out.u_skipped = true;
  else
    out.b = detail::best_rotation_steps(eu, ops.dim);  // <U> *= e^{2 pi i b/d}
  if (std::abs(ev) <= 1e-14)
    out.v_skipped = true;
  else
    out.a = detail::best_rotation_steps(ev, ops.dim);  // <V> *= e^{2 pi i a/d}

  out.state = detail::canonical_phase(translate(psi, out.a, out.b, ops));

  cplx eu2 = detail::clock_expectation(out.state);
  cplx ev2 = detail::shift_expectation(out.state);
  out.residual_u = std::abs(eu2.imag()) + std::max(0.0, -eu2.real());
  out.residual_v = std::abs(ev2.imag()) + std::max(0.0, -ev2.real());
  return out;
}

/// One row of the uncertainty frontier.
struct FrontierSample {
  double theta = 0.0;
  double abs_u = 0.0, abs_v = 0.0;
  double du2 = 0.0, dv2 = 0.0;
  bool degenerate = false;
};

struct FrontierCurve {
  std::size_t dim = 0;
  std::vector<FrontierSample> samples;
};

/// Boundary of the accessible (|<U>|, |<V>|) region (its convex hull): one
/// Harper ground state per grid angle.  Each sample is verified against the
/// supporting-line identity cos(theta)|<U>| + sin(theta)|<V>| = -h_min, and
/// |<U>| must trade off monotonically along the grid.
inline FrontierCurve frontier(std::size_t d, const std::vector<double>& theta_grid) {
  FrontierCurve curve;
  curve.dim = d;
  double prev_abs_u = std::numeric_limits<double>::infinity();
  for (double theta : theta_grid) {
    require(theta >= 0.0 && theta <= std::numbers::pi / 2.0 + 1e-15,
            "frontier: grid angle outside [0, pi/2]");
    HarperResult hr = harper_ground(theta, d);
    const StateVector& psi = hr.ground_states.front();
    FrontierSample s;
    s.theta = theta;
    s.abs_u = std::abs(detail::clock_expectation(psi));
    s.abs_v = std::abs(detail::shift_expectation(psi));
    s.du2 = std::clamp(1.0 - s.abs_u * s.abs_u, 0.0, 1.0);
    s.dv2 = std::clamp(1.0 - s.abs_v * s.abs_v, 0.0, 1.0);
    s.degenerate = hr.degenerate;
    check(std::abs(std::cos(theta) * s.abs_u + std::sin(theta) * s.abs_v -
                   hr.max_value) <= 1e-9,
          "frontier: supporting-line identity violated at theta = " +
              std::to_string(theta));
    check(s.abs_u <= prev_abs_u + 1e-9,
          "frontier: |<U>| failed to decrease monotonically at theta = " +
              std::to_string(theta));
    prev_abs_u = s.abs_u;
    curve.samples.push_back(s);
  }
  return curve;
}

inline std::vector<double> uniform_theta_grid(std::size_t points) {
  require(points >= 2, "uniform_theta_grid: need at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = (std::numbers::pi / 2.0) * static_cast<double>(i) /
              static_cast<double>(points - 1);
  return grid;
}

/// One row of the bound-vs-dimension table.
struct Figure1Row {
  std::size_t d = 0;
  double exact_bound = 0.0;     // dU2 of the theta = pi/4 Harper ground state
  double theorem1_bound = 0.0;  // A/(1+2A) with A = tan(pi/d)
};

/// Exact symmetric bound vs the closed-form relaxation, for each dimension.
/// The exact value reads dU2 off the ground state directly; the theta = pi/4
/// swap symmetry (|dU2 - dV2| <= 1e-8) and exact >= relaxed are enforced.
inline std::vector<Figure1Row> figure1_data(std::size_t d_min, std::size_t d_max) {
  require(2 <= d_min && d_min <= d_max, "figure1_data: need 2 <= d_min <= d_max");
  std::vector<Figure1Row> rows;
  for (std::size_t d = d_min; d <= d_max; ++d) {
    HarperResult hr = harper_ground(std::numbers::pi / 4.0, d);
    const StateVector& psi = hr.ground_states.front();
    double du2 = std::clamp(1.0 - std::norm(detail::clock_expectation(psi)), 0.0, 1.0);
    double dv2 = std::clamp(1.0 - std::norm(detail::shift_expectation(psi)), 0.0, 1.0);
    check(std::abs(du2 - dv2) <= 1e-8,
          "figure1_data: dU2 != dV2 for the theta = pi/4 ground state, d = " +
              std::to_string(d));
    Figure1Row row;
    row.d = d;
    row.exact_bound = du2;
    row.theorem1_bound = symmetric_bound(2.0 * std::numbers::pi / static_cast<double>(d));
    check(row.exact_bound >= row.theorem1_bound - 1e-12,
          "figure1_data: exact bound fell below the closed-form bound, d = " +
              std::to_string(d));
    rows.push_back(row);
  }
  return rows;
}

inline std::string figure1_csv(const std::vector<Figure1Row>& rows) {
  std::string out = "d,exact_bound,theorem1_bound\n";
  for (const Figure1Row& r : rows)
    out += std::to_string(r.d) + "," + fmt17(r.exact_bound) + "," +
           fmt17(r.theorem1_bound) + "\n";
  return out;
}

inline std::string frontier_csv(const FrontierCurve& curve) {
  std::string out = "theta,absU,absV,dU2,dV2\n";
  for (const FrontierSample& s : curve.samples)
    out += fmt17(s.theta) + "," + fmt17(s.abs_u) + "," + fmt17(s.abs_v) + "," +
           fmt17(s.du2) + "," + fmt17(s.dv2) + "\n";
  return out;
}

}  // namespace clockshift
