#include <doctest.h>

#include <cmath>
#include <vector>

#include "support/generators.hpp"
#include "visclab/kernels.hpp"

using namespace visclab;
using namespace visclab::kernels;
using visclab::testing::for_all;
using visclab::testing::Gen;

namespace {

struct Restore {
  ~Restore() { force_scalar(false); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("quarter powers") {
    int k = 0;
    CHECK(detail::quarter_power(-0.25, k));
    CHECK(k == -1);
    CHECK(detail::quarter_power(0.5, k));
    CHECK(k == 2);
    CHECK_FALSE(detail::quarter_power(0.3, k));
    CHECK_FALSE(detail::quarter_power(9.0, k));
  }

  TEST_CASE("scalar kernel on constant data gives equal fluxes") {
    const auto f = ConvexFlux::burgers();
    const auto law = ViscosityLaw::regularized_power(0.5);
    const FluxKernelSpec spec{&f, &law, 10.0, Reconstruction::Minmod};
    std::vector<double> u(17, 0.75), F(16);
    interface_fluxes_scalar(u, F, spec);
    for (double v : F) CHECK(v == doctest::Approx(0.5 * 0.75 * 0.75).epsilon(1e-15));
  }

  TEST_CASE("scalar kernel matches a hand-computed interface flux") {
    const auto f = ConvexFlux::burgers();
    const auto law = ViscosityLaw::linear(2.0);
    const FluxKernelSpec spec{&f, &law, 1.0, Reconstruction::PiecewiseConstant};
    std::vector<double> u{1.0, -1.0, 0.5}, F(2);
    interface_fluxes_scalar(u, F, spec);
    CHECK(F[0] == doctest::Approx(0.5 - 2.0 * (-2.0)));  // transonic shock: max f(1), f(-1)
    CHECK(F[1] == doctest::Approx(0.0 - 2.0 * 1.5));     // sonic point inside [-1, 0.5]
  }

  TEST_CASE("property: AVX2 kernel matches the scalar reference") {
    if (!avx2_compiled() || !__builtin_cpu_supports("avx2")) return;
    const std::vector<ConvexFlux> fluxes{ConvexFlux::burgers(), ConvexFlux::zero()};
    const std::vector<ViscosityLaw> laws{ViscosityLaw::regularized_power(0.5, 1.0), ViscosityLaw::regularized_power(2.0, 2.0),
                                         ViscosityLaw::regularized_power(1.5, 0.5), ViscosityLaw::regularized_power(3.0, 1.0),
                                         ViscosityLaw::linear(1.7), ViscosityLaw::ostwald_de_waele(2.0, 1.0)};
    for_all(400, 31, [&](Gen& g, std::size_t i) {
      const auto& f = g.pick(fluxes);
      const auto& law = g.pick(laws);
      const FluxKernelSpec spec{&f, &law, g.log_uniform(0.5, 50.0),
                                g.uniform(0.0, 1.0) < 0.5 ? Reconstruction::Minmod : Reconstruction::PiecewiseConstant};
      REQUIRE(avx2_supported(spec));
      const std::size_t n = 3 + g.index(300);
      const auto u = g.field(n, -3.0, 3.0);
      std::vector<double> a(n - 1), b(n - 1);
      interface_fluxes_scalar(u, a, spec);
      interface_fluxes_avx2(u, b, spec);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        INFO("case " << i << " j = " << j << " n = " << n);
        REQUIRE(std::abs(a[j] - b[j]) <= 1e-12 * (1.0 + std::abs(a[j])));
      }
    });
  }

  TEST_CASE("unsupported combinations fall back to scalar") {
    const auto e = ConvexFlux::exponential();
    const auto law = ViscosityLaw::regularized_power(0.5);
    const FluxKernelSpec spec{&e, &law, 1.0, Reconstruction::Minmod};
    CHECK_FALSE(avx2_supported(spec));
    std::vector<double> u{0.0, 0.5, 1.0, 0.2}, F(3), R(3);
    CHECK(interface_fluxes(u, F, spec) == Isa::Scalar);
    interface_fluxes_scalar(u, R, spec);
    CHECK(F == R);
    const auto odd = ViscosityLaw::regularized_power(0.3);
    const auto b = ConvexFlux::burgers();
    CHECK_FALSE(avx2_supported(FluxKernelSpec{&b, &odd, 1.0, Reconstruction::Minmod}));
  }

  TEST_CASE("force_scalar pins the dispatch") {
    Restore restore;
    const auto b = ConvexFlux::burgers();
    const auto law = ViscosityLaw::regularized_power(0.5);
    const FluxKernelSpec spec{&b, &law, 1.0, Reconstruction::Minmod};
    std::vector<double> u{0.0, 0.5, 1.0, 0.2, 0.1}, F(4);
    force_scalar(true);
    CHECK(active_isa() == Isa::Scalar);
    CHECK(interface_fluxes(u, F, spec) == Isa::Scalar);
    CHECK(isa_name(Isa::Scalar) == "scalar");
  }
}
