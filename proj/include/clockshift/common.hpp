// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace clockshift {

using cplx = std::complex<double>;
using StateVector = std::vector<cplx>;

/// Thrown when a computed quantity violates a documented invariant or bound.
/// Distinct from std::invalid_argument (caller passed bad inputs): the CLI
/// maps CheckFailure to exit status 1 and bad usage to exit status 2.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline void check(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

inline double state_norm2(const StateVector& psi) {
  double s = 0.0;
  for (const cplx& c : psi) s += std::norm(c);
  return s;
}

inline void require_normalized(const StateVector& psi, const std::string& who,
                               double tol = 1e-12) {
  require(!psi.empty(), who + ": empty state");
  double s = state_norm2(psi);
  require(std::abs(s - 1.0) <= tol,
          who + ": state not normalized, |sum - 1| = " +
              std::to_string(std::abs(s - 1.0)));
}

inline StateVector normalized(StateVector psi) {
  double s = std::sqrt(state_norm2(psi));
  require(s > 0.0, "cannot normalize the zero vector");
  for (cplx& c : psi) c /= s;
  return psi;
}

/// <a|b> with the first argument conjugated.
inline cplx inner(const StateVector& a, const StateVector& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace clockshift
