// SPDX-License-Identifier: Apache-2.0
//
// clockshift CLI: verification suites, frontier/figure data, spectral
// statistics and signal audits for the clock/shift operator pair.
// Exit status: 0 success, 1 a verified bound or invariant failed,
// 2 usage error.  Identical flags (and seed) give byte-identical artifacts.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "clockshift/asymptotics.hpp"
#include "clockshift/minstates.hpp"
#include "clockshift/signal_io.hpp"

namespace cs = clockshift;

namespace {

void write_artifact(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::string csv_config_header(const std::string& command,
                              const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string line = "# command=" + command;
  for (const auto& [k, v] : kv) line += " " + k + "=" + v;
  return line + "\n";
}

int run_verify(std::size_t d, std::size_t count, std::uint64_t seed,
               const std::string& output) {
  cs::MarginAudit audit = cs::verify_random_states(d, count, seed);

  std::string failed;
  if (!(audit.min_margin >= -1e-10))
    failed = "min_margin >= -1e-10";
  else if (!(std::abs(audit.probe_margin_localized) <= 1e-12 &&
             std::abs(audit.probe_margin_dual) <= 1e-12))
    failed = "saturation probes give zero margin within 1e-12";

  cs::JsonObjectBuilder config;
  config.field("command", "verify").field("d", d).field("count", count).field("seed", seed);
  cs::JsonObjectBuilder b;
  b.raw("config", config.str())
      .field("d", audit.dim)
      .field("phi", audit.phi)
      .field("count", audit.count)
      .field("seed", audit.seed)
      .field("min_margin", audit.min_margin)
      .raw("argmin_state", cs::json_complex_array(audit.argmin_state))
      .field("probe_margin_localized", audit.probe_margin_localized)
      .field("probe_margin_dual", audit.probe_margin_dual);
  if (failed.empty())
    b.raw("failed_assertion", "null");
  else
    b.field("failed_assertion", failed);
  write_artifact(output, b.str() + "\n");
  return failed.empty() ? 0 : 1;
}

int run_bound(std::optional<double> phi_flag, std::optional<std::size_t> d,
              std::size_t m, std::optional<double> du2, std::optional<double> dv2,
              const std::string& output) {
  double phi;
  if (phi_flag) {
    phi = *phi_flag;
  } else if (d) {
    double raw = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(*d);
    cs::require(m >= 1 && m <= *d - 1, "bound: need 1 <= m <= d-1");
    phi = raw <= std::numbers::pi ? raw : 2.0 * std::numbers::pi - raw;
  } else {
    throw std::invalid_argument("bound: give either --phi or --d (with optional --m)");
  }
  cs::BoundParams params = cs::BoundParams::from_phi(phi);

  cs::JsonObjectBuilder config;
  config.field("command", "bound");
  if (phi_flag) config.field("phi", *phi_flag);
  if (d) config.field("d", *d).field("m", m);
  cs::JsonObjectBuilder b;
  b.raw("config", config.str()).field("phi", phi);
  if (params.a_is_infinite())
    b.field("a_tan_half", "inf");
  else
    b.field("a_tan_half", params.a());
  b.field("symmetric_bound", cs::symmetric_bound(phi));
  if (du2 && dv2)
    b.field("margin", cs::uncertainty_margin(*du2, *dv2, phi));
  else if (du2 || dv2)
    throw std::invalid_argument("bound: --du2 and --dv2 must be given together");
  write_artifact(output, b.str() + "\n");
  return 0;
}

int run_minstate(std::size_t d, double theta, const std::string& output) {
  cs::HarperResult hr = cs::harper_ground(theta, d);
  const cs::StateVector& psi = hr.ground_states.front();
  double abs_u = std::abs(cs::detail::clock_expectation(psi));
  double abs_v = std::abs(cs::detail::shift_expectation(psi));

  cs::JsonObjectBuilder config;
  config.field("command", "minstate").field("d", d).field("theta", theta);
  std::string states = "[";
  for (std::size_t i = 0; i < hr.ground_states.size(); ++i) {
    if (i) states += ",";
    states += cs::json_complex_array(hr.ground_states[i]);
  }
  states += "]";
  std::string labels = "[";
  for (std::size_t i = 0; i < hr.parity_labels.size(); ++i) {
    if (i) labels += ",";
    labels += std::to_string(hr.parity_labels[i]);
  }
  labels += "]";

  cs::JsonObjectBuilder b;
  b.raw("config", config.str())
      .field("d", hr.dim)
      .field("theta", hr.theta)
      .field("h_min", hr.h_min)
      .field("max_value", hr.max_value)
      .field("degenerate", hr.degenerate)
      .raw("parity_labels", labels)
      .raw("ground_states", states)
      .field("abs_u", abs_u)
      .field("abs_v", abs_v)
      .field("du2", 1.0 - abs_u * abs_u)
      .field("dv2", 1.0 - abs_v * abs_v)
      .field("realness", cs::realness_check(psi));
  write_artifact(output, b.str() + "\n");
  return 0;
}

int run_figure1(std::size_t d_min, std::size_t d_max, const std::string& output) {
  auto rows = cs::figure1_data(d_min, d_max);
  std::string csv = csv_config_header(
      "figure1", {{"d_min", std::to_string(d_min)}, {"d_max", std::to_string(d_max)}});
  csv += cs::figure1_csv(rows);
  write_artifact(output, csv);
  return 0;
}

int run_frontier(std::size_t d, std::size_t points, const std::string& output) {
  cs::FrontierCurve curve = cs::frontier(d, cs::uniform_theta_grid(points));
  std::string csv = csv_config_header(
      "frontier", {{"d", std::to_string(d)}, {"points", std::to_string(points)}});
  csv += cs::frontier_csv(curve);
  write_artifact(output, csv);
  return 0;
}

int run_commutator_stats(std::size_t d, double tolerance, const std::string& output) {
  cs::CommutatorSpectrumReport rep = cs::commutator_spectrum(d, tolerance);
  cs::check(rep.trace_residual <= 1e-6 * static_cast<double>(d),
            "commutator-stats: trace residual " + cs::fmt17(rep.trace_residual) +
                " exceeds 1e-6 * d");
  cs::JsonObjectBuilder config;
  config.field("command", "commutator-stats").field("d", d).field("tolerance", tolerance);
  // splice the config into the report emitted by the library
  std::string body = cs::commutator_spectrum_json(rep);
  std::string with_config = "{\"config\":" + config.str() + "," + body.substr(1);
  write_artifact(output, with_config + "\n");
  return 0;
}

int run_signal_check(const std::string& input, std::string format,
                     std::optional<double> r1, std::optional<double> t1,
                     std::optional<std::size_t> d_claim, const std::string& output) {
  cs::JsonObjectBuilder config;
  config.field("command", "signal-check");

  if (!input.empty()) {
    if (format.empty())
      format = input.size() >= 5 && input.substr(input.size() - 5) == ".json" ? "json" : "csv";
    config.field("input", input).field("input_format", format);
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open signal input: " + input);
    cs::PeriodicSignal sig =
        format == "json" ? cs::parse_signal_json(in) : cs::parse_signal_csv(in);
    const std::size_t d = sig.period();

    cs::SignalStats stats = cs::signal_stats(sig);
    double dev_x = cs::spectral_identity_check(sig);
    double dev_y = cs::intensity_ft_check(sig);
    cs::IndexRange r(d);
    double r1_mag = std::abs(stats.correlation[r.pos_of(1 <= r.j_max() ? 1 : r.j_min())]);
    double t1_mag = std::abs(stats.intensity_ft[r.pos_of(1 <= r.j_max() ? 1 : r.j_min())]);
    cs::Feasibility verdict = cs::feasibility_audit(r1_mag, t1_mag, d);

    std::string failed;
    if (!(dev_x <= 1e-12)) failed = "correlation identity deviation <= 1e-12";
    else if (!(dev_y <= 1e-12)) failed = "intensity identity deviation <= 1e-12";

    cs::JsonObjectBuilder b;
    b.raw("config", config.str())
        .field("d", d)
        .raw("R", cs::json_complex_array(stats.correlation))
        .raw("T", cs::json_complex_array(stats.intensity_ft))
        .field("max_dev_correlation_identity", dev_x)
        .field("max_dev_intensity_identity", dev_y)
        .field("r1_mag", r1_mag)
        .field("t1_mag", t1_mag)
        .field("verdict", cs::to_string(verdict));
    if (failed.empty())
      b.raw("failed_assertion", "null");
    else
      b.field("failed_assertion", failed);
    write_artifact(output, b.str() + "\n");
    return failed.empty() ? 0 : 1;
  }

  if (!(r1 && t1 && d_claim))
    throw std::invalid_argument(
        "signal-check: give --input FILE, or all of --r1 --t1 --d for a "
        "claimed-magnitude audit");
  config.field("r1", *r1).field("t1", *t1).field("d", *d_claim);
  cs::Feasibility verdict = cs::feasibility_audit(*r1, *t1, *d_claim);
  double margin = cs::uncertainty_margin(
      1.0 - *t1 * *t1, 1.0 - *r1 * *r1,
      2.0 * std::numbers::pi / static_cast<double>(*d_claim));
  cs::JsonObjectBuilder b;
  b.raw("config", config.str())
      .field("d", *d_claim)
      .field("margin", margin)
      .field("verdict", cs::to_string(verdict));
  write_artifact(output, b.str() + "\n");
  return 0;
}

int run_gaussian(std::size_t d, double sigma, double delta, const std::string& output) {
  cs::GaussianState g = cs::make_gaussian(d, sigma);
  double eps_u = cs::membership_epsilon(g.state, delta);
  double eps_v = cs::membership_epsilon_dual(g.state, delta);
  cs::StateVector dual = cs::matvec(cs::adjoint(cs::dft_matrix(d)), g.state);
  double self_fidelity = std::abs(cs::inner(dual, g.state));
  cs::DispersionVsVariance dv = cs::dispersion_vs_variance(g.state);

  cs::JsonObjectBuilder config;
  config.field("command", "gaussian").field("d", d).field("sigma", sigma).field("delta", delta);
  cs::JsonObjectBuilder b;
  b.raw("config", config.str())
      .field("d", d)
      .field("sigma", sigma)
      .field("norm_constant", g.norm_constant)
      .field("predicted_norm_constant", g.predicted_norm_constant)
      .field("delta", delta)
      .field("membership_epsilon", eps_u)
      .field("membership_epsilon_dual", eps_v)
      .field("self_dual_fidelity", self_fidelity)
      .field("du2", dv.du2)
      .field("variance_proxy", dv.proxy)
      .field("rel_gap", dv.rel_gap);
  write_artifact(output, b.str() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clock/shift operator toolkit: uncertainty bounds, Harper "
               "minimum-uncertainty states, spectral statistics"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --output appear after the subcommand too

  std::string output;
  app.add_option("--output", output, "write the artifact to this file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Haar-random audit of the uncertainty bound");
  std::size_t v_d = 8, v_count = 1000;
  std::uint64_t v_seed = 1;
  verify->add_option("--d", v_d, "dimension")->required();
  verify->add_option("--count", v_count, "number of random states");
  verify->add_option("--seed", v_seed, "rng seed");

  auto* bound = app.add_subcommand("bound", "closed-form bound values for a commutation phase");
  std::optional<double> b_phi, b_du2, b_dv2;
  std::optional<std::size_t> b_d;
  std::size_t b_m = 1;
  bound->add_option("--phi", b_phi, "commutation phase in (0, pi]");
  bound->add_option("--d", b_d, "dimension (phi = 2 pi m / d, reduced into (0, pi])");
  bound->add_option("--m", b_m, "shift power for --d mode");
  bound->add_option("--du2", b_du2, "evaluate the margin at this dU^2");
  bound->add_option("--dv2", b_dv2, "evaluate the margin at this dV^2");

  auto* minstate = app.add_subcommand("minstate", "Harper ground state(s) for one angle");
  std::size_t m_d = 8;
  double m_theta = std::numbers::pi / 4.0;
  minstate->add_option("--d", m_d, "dimension")->required();
  minstate->add_option("--theta", m_theta, "mixing angle in [0, pi/2]");

  auto* figure1 = app.add_subcommand("figure1", "exact vs closed-form symmetric bound per dimension (CSV)");
  std::size_t f_dmin = 2, f_dmax = 64;
  figure1->add_option("--d-min", f_dmin, "first dimension");
  figure1->add_option("--d-max", f_dmax, "last dimension");

  auto* frontier = app.add_subcommand("frontier", "uncertainty frontier over a theta grid (CSV)");
  std::size_t fr_d = 8, fr_points = 65;
  frontier->add_option("--d", fr_d, "dimension")->required();
  frontier->add_option("--points", fr_points, "grid points on [0, pi/2]");

  auto* cstats = app.add_subcommand("commutator-stats", "spectrum statistics of the generator commutator");
  std::size_t c_d = 801;
  double c_tol = 1e-10;
  cstats->add_option("--d", c_d, "dimension");
  cstats->add_option("--tolerance", c_tol, "near-one window half-width");

  auto* sigcheck = app.add_subcommand("signal-check", "signal statistics, identities, feasibility audit");
  std::string s_input, s_format;
  std::optional<double> s_r1, s_t1;
  std::optional<std::size_t> s_d;
  sigcheck->add_option("--input", s_input, "signal file (CSV j,re,im or JSON [re,im] array)");
  sigcheck->add_option("--input-format", s_format, "csv or json (default: by extension)");
  sigcheck->add_option("--r1", s_r1, "claimed |R(1)|");
  sigcheck->add_option("--t1", s_t1, "claimed |T(1)|");
  sigcheck->add_option("--d", s_d, "claimed period");

  auto* gauss = app.add_subcommand("gaussian", "discretized gaussian state report");
  std::size_t g_d = 256;
  double g_sigma = 1.0, g_delta = 0.5;
  gauss->add_option("--d", g_d, "dimension");
  gauss->add_option("--sigma", g_sigma, "width");
  gauss->add_option("--delta", g_delta, "localization window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(v_d, v_count, v_seed, output);
    if (bound->parsed()) return run_bound(b_phi, b_d, b_m, b_du2, b_dv2, output);
    if (minstate->parsed()) return run_minstate(m_d, m_theta, output);
    if (figure1->parsed()) return run_figure1(f_dmin, f_dmax, output);
    if (frontier->parsed()) return run_frontier(fr_d, fr_points, output);
    if (cstats->parsed()) return run_commutator_stats(c_d, c_tol, output);
    if (sigcheck->parsed())
      return run_signal_check(s_input, s_format, s_r1, s_t1, s_d, output);
    if (gauss->parsed()) return run_gaussian(g_d, g_sigma, g_delta, output);
  } catch (const cs::CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
