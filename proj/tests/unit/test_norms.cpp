#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "support/generators.hpp"
#include "visclab/norms.hpp"

using namespace visclab;
using visclab::testing::for_all;
using visclab::testing::Gen;

namespace {

GridSolution grid_from(double x_left, double x_right, std::size_t n, auto&& f) {
  auto g = GridSolution::uniform(x_left, x_right, n);
  g.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) g.values[j] = f(g.x(j));
  return g;
}

}  // namespace

TEST_SUITE("decay_analysis.norms") {
  TEST_CASE("lq_norm examples") {
    const std::vector<double> two(100, 2.0);
    CHECK(lq_norm(two, 0.5, 1.0) == doctest::Approx(100.0));
    CHECK(lq_norm(two, 0.5, 2.0) == doctest::Approx(2.0 * std::sqrt(50.0)));
    std::vector<double> spike(10, 0.0);
    spike[4] = -3.0;
    CHECK(linf_norm(spike) == 3.0);
    CHECK(norm(spike, 1.0, kInfinityNorm) == 3.0);
    CHECK(lq_norm(std::vector<double>(5, 0.0), 1.0, 3.0) == 0.0);
    CHECK_THROWS_AS(lq_norm(two, 1.0, 0.5), std::domain_error);
  }

  TEST_CASE("derivative field examples") {
    const auto ramp = grid_from(0.0, 10.0, 50, [](double x) { return x; });
    const auto d1 = dx_field(ramp), d2 = dxx_field(ramp);
    for (std::size_t j = 1; j + 1 < 50; ++j) {
      CHECK(d1[j] == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(d2[j]) <= 1e-9);
    }
    CHECK(d1.front() == 0.0);
    const auto flat = grid_from(0.0, 10.0, 50, [](double) { return 0.4; });
    for (double v : dt_field(flat, ConvexFlux::burgers(), ViscosityLaw::regularized_power(0.5))) CHECK(v == 0.0);
    const auto tiny = grid_from(0.0, 1.0, 4, [](double x) { return x; });
    CHECK_THROWS_AS(dx_field(tiny), std::domain_error);
    CHECK_THROWS_AS(derivative_norms(ramp, 3, 2.0), std::domain_error);
  }

  TEST_CASE("contact wave gradient norm matches the Gaussian integral") {
    // d_x U = (u+ - u-) / sqrt(4 pi mu t) exp(-x^2 / (4 mu t)); its squared L2 norm
    // is (u+ - u-)^2 / (4 pi mu t) * sqrt(2 pi mu t).
    const double mu = 1.0, t = 1.0, jump = 2.0;
    const auto p = WaveProfile::contact(-1.0, 1.0, mu);
    const auto g = grid_from(-30.0, 30.0, 6000, [&](double x) { return p.value(t, x); });
    const double exact = std::sqrt(jump * jump / (4.0 * std::numbers::pi * mu * t) * std::sqrt(2.0 * std::numbers::pi * mu * t));
    CHECK(std::abs(derivative_norms(g, 1, 2.0) - exact) <= 1e-3);
  }

  TEST_CASE("weighted dissipation examples") {
    CHECK(weighted_dissipation(std::vector<double>(10, 0.0), 0.1, 0.5) == 0.0);
    const std::vector<double> grad{0.0, 1.0, -2.0, 3.0, 0.0};
    CHECK(weighted_dissipation(grad, 0.5, 1.0) == doctest::Approx((1.0 + 4.0 + 9.0) * 0.5));
    // slope 2 on unit length: 5^{-1/4} * 4
    std::vector<double> twos(101, 2.0);
    CHECK(weighted_dissipation(twos, 0.01, 0.5) == doctest::Approx(4.0 * std::pow(5.0, -0.25)).epsilon(1e-12));
  }

  TEST_CASE("deviation against a reference") {
    const auto p = WaveProfile::smoothed(ConvexFlux::burgers(), 1.0, -1.0, 1.0);
    auto g = grid_from(-50.0, 50.0, 400, [&](double x) { return p.value(3.0, x); });
    g.t = 3.0;
    const auto d = deviation(g, p);
    for (double v : d.values) CHECK(v == 0.0);
    const auto dx = quantity_field(g, Quantity::Dx, &p, 0.0, ConvexFlux::burgers(), ViscosityLaw::linear());
    CHECK(linf_norm(dx) <= 5e-4);
  }

  TEST_CASE("property: L^64 lies between dx^(1/64) and (n dx)^(1/64) times L^inf") {
    for_all(500, 51, [](Gen& g, std::size_t i) {
      const std::size_t n = 20 + g.index(200);
      const auto v = g.field(n, -1.0, 1.0);
      const double dx = g.log_uniform(1e-3, 1.0);
      const double ratio = lq_norm(v, dx, 64.0) / linf_norm(v);
      INFO("case " << i);
      REQUIRE(ratio >= std::pow(dx, 1.0 / 64.0) * (1.0 - 1e-12));
      REQUIRE(ratio <= std::pow(static_cast<double>(n) * dx, 1.0 / 64.0) * (1.0 + 1e-12));
    });
  }

  TEST_CASE("L^64 is within 5% of L^inf for a resolved bump") {
    const std::size_t n = 4001;
    const double dx = 20.0 / static_cast<double>(n - 1);
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = std::exp(-std::pow(-10.0 + dx * static_cast<double>(j), 2));
    CHECK(std::abs(lq_norm(v, dx, 64.0) / linf_norm(v) - 1.0) <= 0.05);
  }

  TEST_CASE("property: Hölder inequality on random fields") {
    for_all(2000, 52, [](Gen& g, std::size_t i) {
      const auto v = g.field(5 + g.index(500), -3.0, 3.0);
      INFO("case " << i);
      REQUIRE(holder_check(v, g.log_uniform(1e-3, 1.0)).holds());
    });
  }

  TEST_CASE("property: interpolation inequality on smooth fields") {
    for_all(500, 53, [](Gen& g, std::size_t i) {
      const std::size_t n = 400 + g.index(1600);
      const double dx = g.log_uniform(0.01, 0.5);
      const auto v = g.smooth_field(n, dx, 1 + static_cast<int>(g.index(4)));
      const auto c = interpolation_check(v, dx);
      INFO("case " << i << " lhs " << c.lhs << " rhs " << c.rhs);
      REQUIRE(c.holds());
    });
  }

  TEST_CASE("property: norms scale homogeneously") {
    for_all(500, 54, [](Gen& g, std::size_t) {
      auto v = g.field(50, -1.0, 1.0);
      const double q = g.uniform(1.0, 8.0), s = g.log_uniform(0.1, 10.0);
      const double before = lq_norm(v, 0.1, q);
      for (auto& x : v) x *= s;
      REQUIRE(lq_norm(v, 0.1, q) == doctest::Approx(s * before).epsilon(1e-12));
    });
  }
}
