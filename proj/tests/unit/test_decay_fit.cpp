#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "visclab/decay_fit.hpp"
#include "visclab/errors.hpp"
#include "visclab/lemma_checks.hpp"

using namespace visclab;
using visclab::testing::for_all;
using visclab::testing::Gen;

namespace {

Series make(double lo, double hi, std::size_t n, auto&& f) {
  Series s;
  for (double t : log_spaced(lo, hi, n)) s.push_back({t, f(t)});
  return s;
}

}  // namespace

TEST_SUITE("decay_analysis.fit") {
  TEST_CASE("synthetic fits") {
    const auto half = make(1.0, 1000.0, 40, [](double t) { return std::pow(1.0 + t, -0.5); });
    CHECK(std::abs(fit_decay(half, false).exponent + 0.5) <= 1e-6);
    const auto flat = make(1.0, 1000.0, 40, [](double) { return 3.0; });
    CHECK(std::abs(fit_decay(flat, false).exponent) <= 1e-9);
    const auto logged = make(20.0, 2000.0, 40, [](double t) { return std::pow(1.0 + t, -0.25) * std::log(1.0 + t); });
    const auto fit = fit_decay(logged, FitWindow{20.0, 2000.0}, true);
    REQUIRE(fit.corrected_exponent);
    CHECK(std::abs(*fit.corrected_exponent + 0.25) <= 0.02);
    CHECK(fit.exponent > *fit.corrected_exponent);
  }

  TEST_CASE("default window is the last 70% in log(1+t)") {
    const auto s = make(1.0, 1000.0, 40, [](double t) { return 1.0 / (1.0 + t); });
    const auto w = default_window(s);
    const double lo = std::log1p(1.0), hi = std::log1p(1000.0);
    CHECK(w.t_hi == doctest::Approx(1000.0));
    CHECK(std::log1p(w.t_lo) == doctest::Approx(hi - 0.7 * (hi - lo)));
    const auto fit = fit_decay(s, false);
    CHECK(fit.window.t_lo >= s.front().t);
    CHECK(fit.window.t_hi <= s.back().t);
    CHECK(fit.samples < s.size());
    CHECK(series_decades(s) == doctest::Approx(std::log10(1001.0 / 2.0)));
  }

  TEST_CASE("log bound constant") {
    const auto s = make(1.0, 1000.0, 40, [](double t) { return 2.0 * std::max(1.0, std::log1p(t)); });
    const auto fit = fit_decay(s, true);
    CHECK(fit.log_bound_constant == doctest::Approx(2.0));
    CHECK(std::abs(*fit.corrected_exponent) <= 1e-9);
  }

  TEST_CASE("unusable series raise DataError") {
    const auto few = make(1.0, 1000.0, 7, [](double t) { return 1.0 / t; });
    CHECK_THROWS_AS(fit_decay(few, FitWindow{1.0, 1000.0}, false), DataError);
    auto zero = make(1.0, 1000.0, 20, [](double t) { return 1.0 / t; });
    zero[15].value = 0.0;
    CHECK_THROWS_AS(fit_decay(zero, false), DataError);
    CHECK_THROWS_AS(fit_decay(Series{}, false), DataError);
  }

  TEST_CASE("property: planted exponents are recovered") {
    for_all(300, 61, [](Gen& g, std::size_t i) {
      const double a = g.uniform(-2.0, 1.0), c = g.log_uniform(1e-3, 1e3);
      const double lo = g.log_uniform(0.5, 10.0), hi = lo * g.log_uniform(100.0, 1e4);
      const auto s = make(lo, hi, 10 + g.index(50), [&](double t) { return c * std::pow(1.0 + t, a); });
      const auto fit = fit_decay(s, FitWindow{lo, hi}, false);
      INFO("case " << i << " a = " << a);
      REQUIRE(std::abs(fit.exponent - a) <= 1e-8);
      REQUIRE(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
      REQUIRE(std::isfinite(fit.exponent));
    });
  }

  TEST_CASE("property: fit is invariant under scaling") {
    for_all(200, 62, [](Gen& g, std::size_t) {
      auto s = make(1.0, 1000.0, 30, [&](double t) { return std::pow(1.0 + t, -0.3) * (1.0 + 0.2 * std::sin(t)); });
      const double before = fit_decay(s, false).exponent;
      const double k = g.log_uniform(1e-6, 1e6);
      for (auto& p : s) p.value *= k;
      REQUIRE(fit_decay(s, false).exponent == doctest::Approx(before).epsilon(1e-9));
    });
  }
}
