#include "test_helpers.hpp"

using namespace cstest;
using Catch::Matchers::WithinAbs;

TEST_CASE("dispersion at the saturation states", "[uncertainty]") {
  OperatorSet ops = build_operator_set(6);
  IndexRange r(6);
  StateVector basis(6, cplx(0.0, 0.0));
  basis[r.pos_of(1)] = 1.0;
  REQUIRE_THAT(dispersion(basis, ops.clock), WithinAbs(0.0, 1e-14));
  REQUIRE_THAT(dispersion(basis, ops.shift), WithinAbs(1.0, 1e-14));

  // dual basis state = one DFT column
  StateVector dual(6);
  for (std::size_t i = 0; i < 6; ++i) dual[i] = ops.dft(i, r.pos_of(2));
  REQUIRE_THAT(dispersion(dual, ops.clock), WithinAbs(1.0, 1e-13));
  REQUIRE_THAT(dispersion(dual, ops.shift), WithinAbs(0.0, 1e-13));
}

TEST_CASE("dispersion d=2 uniform and rejection", "[uncertainty]") {
  OperatorSet ops = build_operator_set(2);
  StateVector uniform(2, cplx(1.0 / std::sqrt(2.0), 0.0));
  REQUIRE_THAT(dispersion(uniform, ops.clock), WithinAbs(1.0, 1e-14));

  Matrix not_unitary = cplx(2.0, 0.0) * Matrix::identity(2);
  REQUIRE_THROWS_AS(dispersion(uniform, not_unitary), std::invalid_argument);
}

TEST_CASE("dispersion invariances", "[uncertainty]") {
  OperatorSet ops = build_operator_set(8);
  SeededRng rng(66);
  StateVector psi = haar_state(8, rng);
  double du = dispersion(psi, ops.clock), dv = dispersion(psi, ops.shift);

  // translations
  StateVector t = translate(psi, 2, 7, ops);
  REQUIRE_THAT(dispersion(t, ops.clock), WithinAbs(du, 1e-12));
  REQUIRE_THAT(dispersion(t, ops.shift), WithinAbs(dv, 1e-12));

  // operator rephasing U -> e^{i mu} U
  Matrix rotated = std::polar(1.0, 0.897) * ops.clock;
  REQUIRE_THAT(dispersion(psi, rotated), WithinAbs(du, 1e-12));
}

TEST_CASE("bound parameters", "[uncertainty]") {
  BoundParams p = BoundParams::from_phi(1.0);
  REQUIRE_THAT(p.a(), WithinAbs(std::tan(0.5), 1e-14));
  REQUIRE_FALSE(p.a_is_infinite());
  BoundParams pauli = BoundParams::from_phi(std::numbers::pi);
  REQUIRE(pauli.a_is_infinite());
  REQUIRE_THROWS_AS(BoundParams::from_phi(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(BoundParams::from_phi(3.3), std::invalid_argument);
}

TEST_CASE("margin formula", "[uncertainty]") {
  // saturation corners
  REQUIRE_THAT(uncertainty_margin(0.0, 1.0, 1.2), WithinAbs(0.0, 1e-14));
  REQUIRE_THAT(uncertainty_margin(1.0, 0.0, 0.3), WithinAbs(0.0, 1e-14));
  // Pauli midpoint
  REQUIRE_THAT(uncertainty_margin(0.5, 0.5, std::numbers::pi), WithinAbs(0.0, 1e-14));
  // symmetric positive root for phi = 2 pi / 7
  double phi = 2.0 * std::numbers::pi / 7.0;
  double s = symmetric_bound(phi);
  REQUIRE_THAT(uncertainty_margin(s, s, phi), WithinAbs(0.0, 1e-12));

  REQUIRE_THROWS_AS(uncertainty_margin(0.5, 0.5, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(uncertainty_margin(1.5, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("symmetric bound", "[uncertainty]") {
  REQUIRE_THAT(symmetric_bound(std::numbers::pi), WithinAbs(0.5, 1e-15));

  // large-d asymptote: value * d / pi -> 1
  for (std::size_t d : {1000u, 10000u}) {
    double phi = 2.0 * std::numbers::pi / static_cast<double>(d);
    double scaled = symmetric_bound(phi) * static_cast<double>(d) / std::numbers::pi;
    REQUIRE(std::abs(scaled - 1.0) <= 10.0 / static_cast<double>(d));
  }

  // monotone increasing in phi
  double prev = 0.0;
  for (int i = 1; i <= 64; ++i) {
    double phi = std::numbers::pi * i / 64.0;
    double val = symmetric_bound(phi);
    REQUIRE(val > prev);
    prev = val;
  }

  REQUIRE_THROWS_AS(symmetric_bound(0.0), std::invalid_argument);
}

TEST_CASE("random-state audits", "[uncertainty]") {
  MarginAudit a2 = verify_random_states(2, 1000, 91);
  REQUIRE(a2.min_margin >= -1e-10);
  REQUIRE(std::abs(a2.probe_margin_localized) <= 1e-12);
  REQUIRE(std::abs(a2.probe_margin_dual) <= 1e-12);

  MarginAudit a16 = verify_random_states(16, 10000, 91);
  REQUIRE(a16.min_margin >= -1e-10);
  REQUIRE(a16.min_margin > 0.0);  // bound is not tight beyond d=2

  // determinism: same seed, same audit
  MarginAudit again = verify_random_states(16, 10000, 91);
  REQUIRE(again.min_margin == a16.min_margin);
  REQUIRE(again.argmin_state == a16.argmin_state);

  // JSON report carries the required fields
  std::string json = margin_audit_json(a2);
  REQUIRE(json.find("\"min_margin\"") != std::string::npos);
  REQUIRE(json.find("\"argmin_state\"") != std::string::npos);
  REQUIRE(json.find("\"seed\":91") != std::string::npos);
}

TEST_CASE("margin holds for reduced general pairs", "[uncertainty]") {
  SeededRng rng(17);
  for (auto [d, m] : std::vector<std::pair<std::size_t, std::size_t>>{
           {5, 2}, {6, 5}, {8, 3}, {12, 7}}) {
    OperatorSet ops = clock_shift_pair(d, m);
    for (int rep = 0; rep < 200; ++rep) {
      StateVector psi = haar_state(d, rng);
      double du2 = dispersion(psi, ops.clock);
      double dv2 = dispersion(psi, ops.shift);
      REQUIRE(uncertainty_margin(du2, dv2, ops.phi) >= -1e-10);
    }
  }
}

TEST_CASE("pauli limit identity", "[uncertainty]") {
  // at phi = pi the margin is dU2 + dV2 - 1 >= 0 for every pure qubit state
  SeededRng rng(5150);
  OperatorSet ops = build_operator_set(2);
  for (int rep = 0; rep < 10000; ++rep) {
    StateVector psi = haar_state(2, rng);
    double du2 = dispersion(psi, ops.clock);
    double dv2 = dispersion(psi, ops.shift);
    REQUIRE(du2 + dv2 - 1.0 >= -1e-10);
    REQUIRE_THAT(uncertainty_margin(du2, dv2, std::numbers::pi),
                 WithinAbs(du2 + dv2 - 1.0, 1e-15));
  }
}

TEST_CASE("robertson chain", "[uncertainty]") {
  SECTION("localized basis state: everything collapses to zero") {
    OperatorSet ops = build_operator_set(6);
    IndexRange r(6);
    StateVector basis(6, cplx(0.0, 0.0));
    basis[r.pos_of(0)] = 1.0;
    RobertsonChain chain = robertson_chain_check(basis, ops);
    REQUIRE(chain.holds);
    REQUIRE_THAT(chain.dsu_dsv, WithinAbs(0.0, 1e-14));
    REQUIRE_THAT(chain.half_commutator, WithinAbs(0.0, 1e-14));
  }

  SECTION("harper ground state d=8") {
    OperatorSet ops = build_operator_set(8);
    HarperResult hr = harper_ground(std::numbers::pi / 4.0, 8);
    RobertsonChain chain = robertson_chain_check(hr.ground_states[0], ops);
    REQUIRE(chain.holds);
    REQUIRE(chain.du_dv > chain.half_commutator);  // finite slack
  }

  SECTION("random states after operator rephasing") {
    SeededRng rng(23);
    OperatorSet ops = build_operator_set(5);
    for (int rep = 0; rep < 50; ++rep) {
      StateVector psi = haar_state(5, rng);
      OperatorSet fixed = rephase_for_state(psi, ops);
      RobertsonChain chain = robertson_chain_check(psi, fixed);
      REQUIRE(chain.du_dv >= chain.dsu_dsv - 1e-12);
      REQUIRE(chain.dsu_dsv >= chain.half_commutator - 1e-12);
    }
  }

  SECTION("unfixed phases are rejected") {
    SeededRng rng(24);
    OperatorSet ops = build_operator_set(5);
    StateVector psi;
    // draw until the raw phase is clearly off the real axis
    do {
      psi = haar_state(5, rng);
    } while (std::abs(std::arg(expectation(psi, ops.clock))) < 0.3);
    REQUIRE_THROWS_AS(robertson_chain_check(psi, ops), std::invalid_argument);
  }
}

TEST_CASE("sine-cosine operator identity", "[uncertainty]") {
  for (std::size_t d : {3u, 16u}) {
    OperatorSet ops = build_operator_set(d);
    REQUIRE(sine_commutator_identity_residual(ops) <= (d == 3 ? 1e-13 : 1e-12));
    Matrix cu2su2 = matmul(ops.clock_cos, ops.clock_cos) +
                    matmul(ops.clock_sin, ops.clock_sin);
    REQUIRE(max_abs(cu2su2 - Matrix::identity(d)) <= 1e-12);
  }

  // phi = pi is rejected (tan diverges) ...
  OperatorSet pauli = build_operator_set(2);
  REQUIRE_THROWS_AS(sine_commutator_identity_residual(pauli), std::invalid_argument);
  // ... and there the cosine anticommutator vanishes identically instead
  Matrix anti = matmul(pauli.clock_cos, pauli.shift_cos) +
                matmul(pauli.shift_cos, pauli.clock_cos);
  REQUIRE(max_abs(anti) <= 1e-15);
}

TEST_CASE("cross-term lower bound", "[uncertainty]") {
  SECTION("localized basis state") {
    OperatorSet ops = build_operator_set(7);
    IndexRange r(7);
    StateVector basis(7, cplx(0.0, 0.0));
    basis[r.pos_of(0)] = 1.0;
    CrossTermBoundReport rep = cross_term_bound_check(basis, ops);
    REQUIRE(rep.holds);
    REQUIRE_THAT(rep.rhs, WithinAbs(0.0, 1e-14));
  }

  SECTION("random rephased states across dimensions") {
    SeededRng rng(37);
    for (std::size_t d = 3; d <= 12; ++d) {
      OperatorSet ops = build_operator_set(d);
      for (int rep = 0; rep < 1000; ++rep) {
        StateVector psi = haar_state(d, rng);
        OperatorSet fixed = rephase_for_state(psi, ops);
        REQUIRE(cross_term_bound_check(psi, fixed).holds);
      }
    }
  }

  SECTION("harper ground state d=10") {
    OperatorSet ops = build_operator_set(10);
    HarperResult hr = harper_ground(std::numbers::pi / 4.0, 10);
    REQUIRE(cross_term_bound_check(hr.ground_states[0], ops).holds);
  }
}
