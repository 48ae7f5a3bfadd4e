#include "visclab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace visclab {
namespace {

void require_stencil(const GridSolution& state) {
  if (state.values.size() < 5) throw std::domain_error("derivative fields need at least 5 cells");
}

}  // namespace

double lq_norm(std::span<const double> values, double dx, double q) {
  if (!(q >= 1.0)) throw std::domain_error("lq_norm needs q >= 1");
  if (std::isinf(q)) return linf_norm(values);
  // Scale by the maximum so large q cannot overflow.
  const double m = linf_norm(values);
  if (m == 0.0) return 0.0;
  double sum = 0.0;
  if (q == 1.0) {
    for (double v : values) sum += std::abs(v);
    return sum * dx;
  }
  if (q == 2.0) {
    for (double v : values) sum += (v / m) * (v / m);
    return m * std::sqrt(sum * dx);
  }
  for (double v : values) sum += std::pow(std::abs(v) / m, q);
  return m * std::pow(sum * dx, 1.0 / q);
}

double linf_norm(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double norm(std::span<const double> values, double dx, double q) {
  return std::isinf(q) ? linf_norm(values) : lq_norm(values, dx, q);
}

std::vector<double> dx_field(const GridSolution& state) {
  require_stencil(state);
  const auto& u = state.values;
  std::vector<double> d(u.size(), 0.0);
  const double s = 0.5 / state.dx;
  for (std::size_t j = 1; j + 1 < u.size(); ++j) d[j] = (u[j + 1] - u[j - 1]) * s;
  return d;
}

std::vector<double> dxx_field(const GridSolution& state) {
  require_stencil(state);
  const auto& u = state.values;
  std::vector<double> d(u.size(), 0.0);
  const double s = 1.0 / (state.dx * state.dx);
  for (std::size_t j = 1; j + 1 < u.size(); ++j) d[j] = (u[j + 1] - 2.0 * u[j] + u[j - 1]) * s;
  return d;
}

std::vector<double> dt_field(const GridSolution& state, const ConvexFlux& flux, const ViscosityLaw& law) {
  require_stencil(state);
  const auto& u = state.values;
  const double inv = 1.0 / state.dx;
  std::vector<double> d(u.size(), 0.0);
  for (std::size_t j = 1; j + 1 < u.size(); ++j) {
    const double conv = flux.is_convex() ? (flux.value(u[j + 1]) - flux.value(u[j - 1])) * 0.5 * inv : 0.0;
    const double visc = (law.sigma((u[j + 1] - u[j]) * inv) - law.sigma((u[j] - u[j - 1]) * inv)) * inv;
    d[j] = -conv + visc;
  }
  return d;
}

double derivative_norms(const GridSolution& state, int order, double q) {
  if (order == 1) return norm(dx_field(state), state.dx, q);
  if (order == 2) return norm(dxx_field(state), state.dx, q);
  throw std::domain_error("derivative order must be 1 or 2");
}

double weighted_dissipation(std::span<const double> gradient, double dx, double p) {
  const std::size_t n = gradient.size();
  if (n < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double g = gradient[j];
    const double g2 = g * g;
    const double w = p == 1.0 ? 1.0 : std::pow(1.0 + g2, 0.5 * (p - 1.0));
    sum += (j == 0 || j + 1 == n ? 0.5 : 1.0) * w * g2;
  }
  return sum * dx;
}

double weighted_dissipation(const GridSolution& state, const ViscosityLaw& law) {
  return weighted_dissipation(dx_field(state), state.dx, law.p());
}

Deviation deviation(const GridSolution& state, const WaveProfile& reference, double time_shift) {
  Deviation d{reference, time_shift, state.t, state.dx, std::vector<double>(state.values.size())};
  const double tr = state.t + time_shift;
  for (std::size_t j = 0; j < state.values.size(); ++j) d.values[j] = state.values[j] - reference.value(tr, state.x(j));
  return d;
}

std::vector<double> quantity_field(const GridSolution& state, Quantity quantity, const WaveProfile* reference,
                                   double time_shift, const ConvexFlux& flux, const ViscosityLaw& law) {
  if (quantity == Quantity::Value) {
    if (!reference) return state.values;
    return deviation(state, *reference, time_shift).values;
  }
  std::vector<double> field;
  switch (quantity) {
    case Quantity::Dx: field = dx_field(state); break;
    case Quantity::Dxx: field = dxx_field(state); break;
    case Quantity::Dt: field = dt_field(state, flux, law); break;
    case Quantity::Value: break;
  }
  if (!reference) return field;
  const double tr = state.t + time_shift;
  for (std::size_t j = 1; j + 1 < field.size(); ++j) {
    const auto jet = reference->jet(tr, state.x(j));
    field[j] -= quantity == Quantity::Dx ? jet.dx : quantity == Quantity::Dxx ? jet.dxx : jet.dt;
  }
  return field;
}

InequalityCheck holder_check(std::span<const double> phi, double dx) {
  const double l2 = lq_norm(phi, dx, 2.0);
  return {l2 * l2, lq_norm(phi, dx, 1.0) * linf_norm(phi)};
}

InequalityCheck interpolation_check(std::span<const double> phi, double dx, double q) {
  const std::size_t n = phi.size();
  const double linf = linf_norm(phi);
  const double l2 = lq_norm(phi, dx, 2.0);
  double integral = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double g = (phi[j + 1] - phi[j - 1]) / (2.0 * dx);
    integral += std::pow(std::abs(phi[j]), q - 2.0) * g * g;
  }
  integral *= dx;
  const double c = 0.5 * (q + 2.0);
  return {std::pow(linf, q + 2.0), c * c * l2 * l2 * integral};
}

}  // namespace visclab
