// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Tolerances are fixed here and not configurable.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "visclab/characteristic.hpp"
#include "visclab/config.hpp"
#include "visclab/decay_fit.hpp"
#include "visclab/lemma_checks.hpp"
#include "visclab/norms.hpp"
#include "visclab/solver.hpp"
#include "visclab/theorems.hpp"

#ifndef VISCLAB_CONFIG_DIR
#error "VISCLAB_CONFIG_DIR must point at configs/"
#endif
#ifndef VISCLAB_UNIT_TESTS
#error "VISCLAB_UNIT_TESTS must name the unit test executable"
#endif

using namespace visclab;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kOracleRatioLo = 3.2;
constexpr double kOracleRatioHi = 4.8;
constexpr double kOracleErrorPerJump = 1e-3;
constexpr double kOracleSeconds = 30.0;
constexpr double kEnvelopeBand = 0.07;
constexpr double kEnvelopeSeconds = 10.0;
constexpr double kRoundTrip = 1e-10;
constexpr double kConservation = 1e-10;
constexpr double kOvershoot = 1e-10;

int failures = 0;

void report(bool pass, const std::string& label, const std::string& detail) {
  fmt::print("{:<4}  {:<52} {}\n", pass ? "PASS" : "FAIL", label, detail);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Run {
  std::string name;
  ExperimentConfig config;
  SolveResult result;
  double seconds = 0.0;
};

Run run_config(const std::string& name) {
  Run r;
  r.name = name;
  r.config = load_config(std::string(VISCLAB_CONFIG_DIR) + "/" + name + ".toml");
  const auto t0 = Clock::now();
  r.result = solve(r.config.solver);
  r.seconds = seconds_since(t0);
  return r;
}

DecayReport line(const Run& run, const char* text) {
  return theorem_check(TheoremCheck::parse(text), run.result.snapshots, run.config.setup);
}

std::string exponent_detail(const DecayReport& r, double bound) {
  return fmt::format("fitted {:+.4f} <= {:+.4f} over t in [{:g}, {:g}]", r.fitted_exponent, bound, r.fit_window.t_lo,
                     r.fit_window.t_hi);
}

void check_exponent(const std::string& label, const Run& run, const char* text, double bound) {
  try {
    const auto r = line(run, text);
    report(r.fitted_exponent <= bound, label, exponent_detail(r, bound));
  } catch (const std::exception& e) {
    report(false, label, e.what());
  }
}

// Heat-kernel oracle: zero flux, linear viscosity, contact wave from t = 1 to 2.
std::vector<Run> heat_oracle() {
  const auto t0 = Clock::now();
  std::vector<Run> runs;
  std::vector<double> errors;
  const WaveProfile contact = WaveProfile::contact(-1.0, 1.0, 1.0);
  for (std::size_t cells : {2000u, 4000u, 8000u}) {
    Run r;
    r.name = fmt::format("heat oracle ({} cells)", cells);
    SolverConfig& c = r.config.solver;
    c.flux = ConvexFlux::zero();
    c.law = ViscosityLaw::linear(1.0);
    c.initial = InitialData::profile_plus_bump(contact);
    c.grid.cells = cells;
    c.grid.margin = 200.0;
    c.t_start = 1.0;
    c.t_end = 2.0;
    c.snapshot_times = {2.0};
    const auto s0 = Clock::now();
    r.result = solve(c);
    r.seconds = seconds_since(s0);
    const auto& s = r.result.snapshots.back();
    double err = 0.0;
    for (std::size_t j = 0; j < s.n_cells; ++j) err = std::max(err, std::abs(s.values[j] - contact.value(s.t, s.x(j))));
    errors.push_back(err);
    runs.push_back(std::move(r));
  }
  const double r1 = errors[0] / errors[1], r2 = errors[1] / errors[2];
  const double limit = kOracleErrorPerJump * 2.0;
  const double secs = seconds_since(t0);
  const bool ok = r1 >= kOracleRatioLo && r1 <= kOracleRatioHi && r2 >= kOracleRatioLo && r2 <= kOracleRatioHi &&
                  errors[2] <= limit && secs <= kOracleSeconds;
  report(ok, "heat oracle: second-order convergence",
         fmt::format("errors {:.3e} {:.3e} {:.3e}, ratios {:.3f} {:.3f} in [{}, {}], finest <= {:.0e}, {:.1f} s",
                     errors[0], errors[1], errors[2], r1, r2, kOracleRatioLo, kOracleRatioHi, limit, secs));
  return runs;
}

void envelopes() {
  const auto t0 = Clock::now();
  const auto times = log_spaced(10.0, 1000.0, 24);
  const auto rows = verify_profile_envelopes(ConvexFlux::burgers(), 1.0, -1.0, 1.0, times, 2.0);
  const auto find = [&](const std::string& label) {
    return std::find_if(rows.begin(), rows.end(), [&](const EnvelopeRow& r) { return r.label == label; });
  };
  const auto dx = find("dU:L2"), dxx = find("dxxU:L2");
  const double secs = seconds_since(t0);
  if (dx == rows.end() || dxx == rows.end()) {
    report(false, "profile envelopes: first and second derivative", "rows missing");
    return;
  }
  const bool ok = std::abs(dx->fitted_exponent + 0.5) <= kEnvelopeBand &&
                  std::abs(dxx->fitted_exponent + 1.25) <= kEnvelopeBand && secs <= kEnvelopeSeconds;
  report(ok, "profile envelopes: first and second derivative",
         fmt::format("dx {:+.4f} (-0.5 +- {}), dxx {:+.4f} (-1.25 +- {}), {:.2f} s", dx->fitted_exponent,
                     kEnvelopeBand, dxx->fitted_exponent, kEnvelopeBand, secs));
}

void runtime(const Run& run, double limit) {
  report(run.seconds <= limit, fmt::format("runtime: {}", run.name),
         fmt::format("{:.1f} s <= {:.0f} s ({} cells, {} steps)", run.seconds, limit, run.config.solver.grid.cells,
                     run.result.stats.steps));
}

void round_trip() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> qd(0.6, 10.0), td(0.0, 1000.0), ud(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double q = qd(rng), t = td(rng);
    const CharacteristicMap m(q, -1.0, 1.0);
    const double x = ud(rng) * (t + 50.0);
    const double x0 = m.foot(t, x);
    worst = std::max(worst, std::abs(x0 + m.initial(x0) * t - x) / (1.0 + std::abs(x)));
  }
  report(worst <= kRoundTrip, "structure: characteristic round trip",
         fmt::format("max relative residual {:.2e} <= {:.0e} over 10000 samples, {:.2f} s", worst, kRoundTrip,
                     seconds_since(t0)));
}

void interpolation(const std::vector<const Run*>& runs) {
  std::size_t fields = 0, bad = 0;
  for (const Run* run : runs) {
    for (const auto& check : run->config.checks) {
      if (check.quantity != Quantity::Value) continue;
      const double dx = run->result.snapshots.front().dx;
      for (const auto& phi : deviation_fields(check, run->result.snapshots, run->config.setup)) {
        ++fields;
        bad += !interpolation_check(phi, dx).holds();
      }
    }
  }
  report(fields > 0 && bad == 0, "structure: interpolation inequality on deviations",
         fmt::format("{} of {} deviation fields satisfy it", fields - bad, fields));
}

void property_suites() {
  const std::string cmd = std::string("'") + VISCLAB_UNIT_TESTS +
                          "' -ts=flux_laws,wave_profiles,kernels,decay_analysis* -nv > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  report(rc == 0, "structure: property suites", rc == 0 ? "all cases pass" : fmt::format("exit status {}", rc));
}

void invariants(const std::vector<const Run*>& runs) {
  double worst_c = 0.0, worst_o = 0.0;
  bool ok = true;
  for (const Run* run : runs) {
    const auto& st = run->result.stats;
    const double scale = 1.0 + std::abs(st.mass_initial);
    worst_c = std::max(worst_c, st.conservation_error / scale);
    worst_o = std::max(worst_o, st.max_overshoot);
    ok &= st.conservation_error <= kConservation * scale && st.max_overshoot <= kOvershoot;
  }
  report(ok, "invariants: conservation and maximum principle",
         fmt::format("{} runs, relative mass defect {:.2e} <= {:.0e}, overshoot {:.2e} <= {:.0e}", runs.size(),
                     worst_c, kConservation, worst_o, kOvershoot));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  try {
    const auto heat = heat_oracle();
    envelopes();

    const Run fan = run_config("rarefaction_p05");
    check_exponent("rarefaction: value deviation (log-corrected L2)", fan, "fan-l1:u:L2", -0.25 + 0.1);
    check_exponent("rarefaction: gradient deviation (L2)", fan, "fan-deriv:dx:L2", -0.5 + 0.1);
    check_exponent("rarefaction: curvature deviation (L2)", fan, "fan-deriv:dxx:L2", -0.75 + 0.15);
    runtime(fan, 300.0);

    const Run constant = run_config("constant_state");
    check_exponent("constant state: L2 decay", constant, "constant-l1:u:L2", -0.25 + 0.1);
    check_exponent("constant state: Linf decay", constant, "constant-l1:u:Linf", -0.5 + 0.15);
    try {
      const auto series = norm_series(TheoremCheck::parse("constant-l1:u:L1"), constant.result.snapshots,
                                       constant.config.setup);
      const auto fit = fit_decay(series, true);
      report(std::isfinite(fit.log_bound_constant) && fit.log_bound_constant > 0.0,
             "constant state: L1 bounded by C max{1, ln(1+t)}",
             fmt::format("C = {:.4f}, corrected exponent {:+.4f}", fit.log_bound_constant,
                         fit.corrected_exponent.value_or(std::nan(""))));
    } catch (const std::exception& e) {
      report(false, "constant state: L1 bounded by C max{1, ln(1+t)}", e.what());
    }
    runtime(constant, 180.0);

    const Run diffusive = run_config("nonconvective");
    check_exponent("no convection: gradient decay (L2)", diffusive, "diffusive-deriv:dx:L2", -0.75 + 0.1);
    check_exponent("no convection: time-derivative decay (L2)", diffusive, "diffusive-deriv:dt:L2", -0.75 + 0.1);
    runtime(diffusive, 180.0);

    round_trip();
    interpolation({&fan, &constant, &diffusive});
    property_suites();

    std::vector<const Run*> all{&fan, &constant, &diffusive};
    for (const auto& r : heat) all.push_back(&r);
    invariants(all);
  } catch (const std::exception& e) {
    report(false, "suite aborted", e.what());
  }
  fmt::print("{} failure(s), total {:.1f} s\n", failures, seconds_since(t0));
  return failures ? 1 : 0;
}
