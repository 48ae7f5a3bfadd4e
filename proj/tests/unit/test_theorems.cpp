#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "visclab/errors.hpp"
#include "visclab/lemma_checks.hpp"
#include "visclab/solver.hpp"
#include "visclab/theorems.hpp"

using namespace visclab;

namespace {

TheoremTarget target_of(const char* line) {
  const auto c = TheoremCheck::parse(line);
  return theoretical_target(c.id, c.quantity, c.norm_order);
}

Series power_series(double a, double lo, double hi, std::size_t n = 30) {
  Series s;
  for (double t : log_spaced(lo, hi, n)) s.push_back({t, std::pow(1.0 + t, a)});
  return s;
}

}  // namespace

TEST_SUITE("decay_analysis.theorems") {
  TEST_CASE("parse and label round trip") {
    const auto c = TheoremCheck::parse("fan-l1:u:L2");
    CHECK(c.id == TheoremId::FanL1);
    CHECK(c.quantity == Quantity::Value);
    CHECK(c.norm_order == 2.0);
    CHECK_FALSE(c.tolerance);
    CHECK(c.label() == "fan-l1:u:L2");
    const auto d = TheoremCheck::parse("diffusive-deriv:dx:Linf:0.2");
    CHECK(std::isinf(d.norm_order));
    CHECK(*d.tolerance == 0.2);
    CHECK(d.label() == "diffusive-deriv:dx:Linf");
    CHECK(TheoremCheck::parse("constant:u:L2.5").label() == "constant:u:L2.5");
  }

  TEST_CASE("malformed or unstated lines are rejected") {
    for (const char* bad : {"fan", "fan:u", "nope:u:L2", "fan:q:L2", "fan:u:X2", "fan:u:L0.5", "fan:u:L2:-1",
                            "fan:u:L2:abc", "fan:u:L1", "fan:dx:L2", "fan-deriv:dt:L4", "constant-deriv:dx:L1",
                            "fan:u:L2:0.1:9"}) {
      INFO(bad);
      CHECK_THROWS_AS(TheoremCheck::parse(bad), std::invalid_argument);
    }
  }

  TEST_CASE("stated exponents") {
    CHECK(target_of("constant:u:L2").exponent == 0.0);
    CHECK(target_of("constant:u:L4").exponent == doctest::Approx(-0.125));
    CHECK(target_of("fan-deriv:dx:L2").exponent == -0.5);
    CHECK_FALSE(target_of("fan-deriv:dx:L2").epsilon);
    CHECK(target_of("diffusive-deriv:dt:L2").exponent == -0.75);
    CHECK(target_of("diffusive-deriv:dx:L2").exponent == -0.75);
    CHECK(target_of("constant-l1:u:L2").exponent == -0.25);
    CHECK(target_of("constant-l1:u:L2").log_factor_allowed);
    CHECK_FALSE(target_of("diffusive-l1:u:L2").log_factor_allowed);
    CHECK(target_of("constant-l1:u:Linf").exponent == -0.5);
    CHECK(target_of("constant-l1:u:Linf").epsilon);
    CHECK(target_of("constant-l1:u:Linf").tolerance == kEpsilonTolerance);
    CHECK(target_of("fan-l1:u:L1").report_only);
    CHECK(target_of("fan-deriv:dxx:L2").exponent == -0.75);
    CHECK(target_of("fan-deriv:dxx:L2").epsilon);
    CHECK(target_of("smooth2-deriv:dx:L4").exponent == doctest::Approx(-7.0 / 8.0));
    CHECK(target_of("fan-deriv:dx:L4").exponent == doctest::Approx(-0.75));
  }

  TEST_CASE("verdicts on synthetic series") {
    const auto line = TheoremCheck::parse("fan-deriv:dx:L2");
    CHECK(*theorem_check(line, power_series(-0.55, 1.0, 500.0)).pass);
    CHECK(*theorem_check(line, power_series(-0.41, 1.0, 500.0)).pass);
    CHECK_FALSE(*theorem_check(line, power_series(-0.39, 1.0, 500.0)).pass);
    const auto tight = TheoremCheck::parse("fan-deriv:dx:L2:0.01");
    CHECK_FALSE(*theorem_check(tight, power_series(-0.45, 1.0, 500.0)).pass);
    const auto report = theorem_check(TheoremCheck::parse("fan-l1:u:L1"), power_series(0.1, 1.0, 500.0));
    CHECK_FALSE(report.pass.has_value());
  }

  TEST_CASE("log-factor lines use the corrected exponent") {
    Series s;
    for (double t : log_spaced(1.0, 500.0, 30)) s.push_back({t, std::pow(1.0 + t, -0.25) * std::log(1.0 + t)});
    const auto r = theorem_check(TheoremCheck::parse("constant-l1:u:L2"), s);
    CHECK(r.log_factor_allowed);
    CHECK(r.fitted_exponent == doctest::Approx(-0.25).epsilon(0.05));
    CHECK(*r.pass);
  }

  TEST_CASE("short series raise DataError") {
    const auto line = TheoremCheck::parse("fan-deriv:dx:L2");
    CHECK_THROWS_AS(theorem_check(line, power_series(-0.5, 1.0, 30.0)), DataError);
  }

  TEST_CASE("report JSON layout") {
    const auto r = theorem_check(TheoremCheck::parse("fan-deriv:dx:L2"), power_series(-0.5, 1.0, 500.0));
    const auto j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"norm_label", "series", "fitted_exponent", "fit_window",
                                           "theoretical_exponent", "log_factor_allowed", "pass"});
    CHECK(j["series"].size() == 30);
    CHECK(j["series"][0].size() == 2);
    CHECK(j["fit_window"][0].get<double>() >= 1.0);
    CHECK(j["fit_window"][1].get<double>() <= 500.0);
    CHECK(j["theoretical_exponent"].get<double>() == -0.5);
    const auto rep = theorem_check(TheoremCheck::parse("fan-l1:u:L1"), power_series(0.0, 1.0, 500.0));
    CHECK(rep.to_json()["pass"].is_null());
  }

  TEST_CASE("norm series on snapshots") {
    ProblemSetup setup;
    setup.u_minus = setup.u_plus = 0.5;
    GridSolution s = GridSolution::uniform(-10.0, 10.0, 100);
    s.values.assign(100, 0.5);
    s.values[50] = 1.5;
    s.t = 2.0;
    s.u_minus = s.u_plus = 0.5;
    const std::vector<GridSolution> snaps{s};
    const auto series = norm_series(TheoremCheck::parse("constant:u:Linf"), snaps, setup);
    REQUIRE(series.size() == 1);
    CHECK(series[0].value == 1.0);
    setup.u_plus = 1.0;
    CHECK_THROWS_AS(norm_series(TheoremCheck::parse("constant:u:Linf"), snaps, setup), std::invalid_argument);
  }

  TEST_CASE("fan lines skip t = 0 snapshots") {
    ProblemSetup setup;
    setup.flux = ConvexFlux::burgers();
    setup.u_minus = -1.0;
    setup.u_plus = 1.0;
    SolverConfig c;
    c.initial = InitialData::mollified_riemann(-1.0, 1.0, 1.0);
    c.grid.cells = 200;
    c.grid.margin = 20.0;
    c.t_end = 2.0;
    c.snapshot_times = {0.0, 1.0, 2.0};
    const auto r = solve(c);
    CHECK(norm_series(TheoremCheck::parse("fan:u:L2"), r.snapshots, setup).size() == 2);
    CHECK(norm_series(TheoremCheck::parse("fan-deriv:dx:L2"), r.snapshots, setup).size() == 3);
    CHECK(deviation_fields(TheoremCheck::parse("fan:u:L2"), r.snapshots, setup).size() == 2);
  }
}
