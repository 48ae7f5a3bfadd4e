#include <cmath>
#include <stdexcept>

#include "visclab/kernels.hpp"

namespace visclab::kernels {
namespace {

inline double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

inline double burgers_godunov(double ul, double ur) {
  const double fl = 0.5 * ul * ul;
  const double fr = 0.5 * ur * ur;
  if (ul <= ur) {
    if (ul > 0.0) return fl;
    if (ur < 0.0) return fr;
    return 0.0;
  }
  return fl > fr ? fl : fr;
}

template <class Advective, class Viscous>
void fluxes_impl(std::span<const double> u, std::span<double> F, double inv_dx, Reconstruction rec,
                 Advective&& advective, Viscous&& viscous) {
  const std::size_t n = u.size();
  if (rec == Reconstruction::PiecewiseConstant) {
    for (std::size_t j = 0; j + 1 < n; ++j)
      F[j] = advective(u[j], u[j + 1]) - viscous((u[j + 1] - u[j]) * inv_dx);
    return;
  }
  auto slope = [&](std::size_t j) {
    if (j == 0 || j + 1 >= n) return 0.0;
    return minmod(u[j] - u[j - 1], u[j + 1] - u[j]);
  };
  double s_here = slope(0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double s_next = slope(j + 1);
    const double ul = u[j] + 0.5 * s_here;
    const double ur = u[j + 1] - 0.5 * s_next;
    F[j] = advective(ul, ur) - viscous((u[j + 1] - u[j]) * inv_dx);
    s_here = s_next;
  }
}

template <class Advective>
void with_viscous(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec,
                  Advective&& advective) {
  const ViscosityLaw& law = *spec.law;
  const double mu = law.mu();
  switch (law.kind()) {
    case ViscosityKind::Linear:
      fluxes_impl(u, F, spec.inv_dx, spec.reconstruction, advective, [mu](double v) { return mu * v; });
      return;
    case ViscosityKind::RegularizedPower: {
      const double e = 0.5 * (law.p() - 1.0);
      fluxes_impl(u, F, spec.inv_dx, spec.reconstruction, advective,
                  [mu, e](double v) { return mu * std::pow(1.0 + v * v, e) * v; });
      return;
    }
    case ViscosityKind::OstwaldDeWaele: {
      const double e = law.p() - 1.0;
      fluxes_impl(u, F, spec.inv_dx, spec.reconstruction, advective,
                  [mu, e](double v) { return mu * std::pow(std::abs(v), e) * v; });
      return;
    }
  }
}

}  // namespace

void interface_fluxes_scalar(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec) {
  if (u.size() < 2 || F.size() + 1 != u.size())
    throw std::invalid_argument("interface_fluxes: need n >= 2 cells and n-1 interfaces");
  const ConvexFlux& flux = *spec.flux;
  switch (flux.kind()) {
    case FluxKind::Zero:
      with_viscous(u, F, spec, [](double, double) { return 0.0; });
      return;
    case FluxKind::Burgers:
      with_viscous(u, F, spec, burgers_godunov);
      return;
    default:
      with_viscous(u, F, spec, [&flux](double ul, double ur) { return godunov_flux(flux, ul, ur); });
      return;
  }
}

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

namespace detail {
bool quarter_power(double e, int& k) noexcept {
  const double scaled = 4.0 * e;
  const double r = std::nearbyint(scaled);
  if (r != scaled || std::abs(r) > 32.0) return false;
  k = static_cast<int>(r);
  return true;
}
}  // namespace detail

}  // namespace visclab::kernels
