#include "visclab/flux_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace visclab {

ViscosityLaw ViscosityLaw::regularized_power(double p, double mu) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("viscosity exponent p must be > 0");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw std::invalid_argument("viscosity coefficient mu must be > 0");
  return ViscosityLaw(ViscosityKind::RegularizedPower, p, mu);
}

ViscosityLaw ViscosityLaw::ostwald_de_waele(double p, double mu) {
  // sigma' = mu p |v|^(p-1) is unbounded at v = 0 for p < 1
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Ostwald-de Waele law requires p >= 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw std::invalid_argument("viscosity coefficient mu must be > 0");
  return ViscosityLaw(ViscosityKind::OstwaldDeWaele, p, mu);
}

ViscosityLaw ViscosityLaw::linear(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw std::invalid_argument("viscosity coefficient mu must be > 0");
  return ViscosityLaw(ViscosityKind::Linear, 1.0, mu);
}

double ViscosityLaw::sigma(double v) const noexcept {
  switch (kind_) {
    case ViscosityKind::RegularizedPower:
      return mu_ * std::pow(1.0 + v * v, 0.5 * (p_ - 1.0)) * v;
    case ViscosityKind::OstwaldDeWaele:
      return mu_ * std::pow(std::abs(v), p_ - 1.0) * v;
    case ViscosityKind::Linear:
      break;
  }
  return mu_ * v;
}

double ViscosityLaw::sigma_prime(double v) const noexcept {
  switch (kind_) {
    case ViscosityKind::RegularizedPower: {
      // d/dv [(1+v^2)^e v] = (1+v^2)^(e-1) (1 + p v^2), 2e = p - 1
      const double s = 1.0 + v * v;
      return mu_ * std::pow(s, 0.5 * (p_ - 3.0)) * (1.0 + p_ * v * v);
    }
    case ViscosityKind::OstwaldDeWaele:
      return mu_ * p_ * std::pow(std::abs(v), p_ - 1.0);
    case ViscosityKind::Linear:
      break;
  }
  return mu_;
}

double ViscosityLaw::max_slope(double v_max) const noexcept {
  if (kind_ == ViscosityKind::Linear) return mu_;
  if (kind_ == ViscosityKind::RegularizedPower && p_ <= 1.0) return mu_;
  // slope is nondecreasing in |v| for the remaining cases
  return sigma_prime(std::abs(v_max));
}

ConvexFlux ConvexFlux::zero() { return ConvexFlux(FluxKind::Zero); }
ConvexFlux ConvexFlux::burgers() { return ConvexFlux(FluxKind::Burgers); }
ConvexFlux ConvexFlux::exponential() { return ConvexFlux(FluxKind::Exponential); }

ConvexFlux ConvexFlux::custom(FluxEvaluators evaluators, double lo, double hi) {
  if (!evaluators.f || !evaluators.df || !evaluators.d2f || !evaluators.d3f || !evaluators.df_inverse)
    throw std::invalid_argument("custom flux needs f, f', f'', f''' and (f')^-1");
  ConvexFlux flux(FluxKind::Custom);
  flux.custom_ = std::move(evaluators);
  return flux.with_operating_interval(lo, hi);
}

double ConvexFlux::value(double u) const {
  switch (kind_) {
    case FluxKind::Zero: return 0.0;
    case FluxKind::Burgers: return 0.5 * u * u;
    case FluxKind::Exponential: return std::exp(u);
    case FluxKind::Custom: break;
  }
  return custom_.f(u);
}

double ConvexFlux::prime(double u) const {
  switch (kind_) {
    case FluxKind::Zero: return 0.0;
    case FluxKind::Burgers: return u;
    case FluxKind::Exponential: return std::exp(u);
    case FluxKind::Custom: break;
  }
  return custom_.df(u);
}

double ConvexFlux::second(double u) const {
  switch (kind_) {
    case FluxKind::Zero: return 0.0;
    case FluxKind::Burgers: return 1.0;
    case FluxKind::Exponential: return std::exp(u);
    case FluxKind::Custom: break;
  }
  return custom_.d2f(u);
}

double ConvexFlux::third(double u) const {
  switch (kind_) {
    case FluxKind::Zero: return 0.0;
    case FluxKind::Burgers: return 0.0;
    case FluxKind::Exponential: return std::exp(u);
    case FluxKind::Custom: break;
  }
  return custom_.d3f(u);
}

double ConvexFlux::prime_inverse_unchecked(double s) const {
  switch (kind_) {
    case FluxKind::Zero: throw std::domain_error("zero flux: f' is not invertible");
    case FluxKind::Burgers: return s;
    case FluxKind::Exponential: return std::log(s);
    case FluxKind::Custom: break;
  }
  return custom_.df_inverse(s);
}

double ConvexFlux::prime_inverse(double s) const {
  if (kind_ == FluxKind::Zero) throw std::domain_error("zero flux: f' is not invertible");
  if (interval_) {
    const double lo = prime(interval_->first);
    const double hi = prime(interval_->second);
    const double slack = 1e-12 * (1.0 + std::abs(s));
    if (!(s >= lo - slack && s <= hi + slack))
      throw std::range_error("(f')^-1: argument " + std::to_string(s) + " outside [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    s = std::clamp(s, lo, hi);
  } else if (kind_ == FluxKind::Exponential && !(s > 0.0)) {
    throw std::range_error("(f')^-1 of exp: argument must be positive");
  }
  if (!std::isfinite(s)) throw std::range_error("(f')^-1: non-finite argument");
  return prime_inverse_unchecked(s);
}

ConvexFlux ConvexFlux::with_operating_interval(double lo, double hi) const {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("operating interval must satisfy lo < hi");
  ConvexFlux copy = *this;
  copy.interval_ = std::make_pair(lo, hi);
  copy.validate();
  return copy;
}

void ConvexFlux::validate() const {
  if (kind_ == FluxKind::Zero || !interval_) return;
  const auto [lo, hi] = *interval_;
  constexpr int samples = 256;
  for (int i = 0; i <= samples; ++i) {
    const double u = lo + (hi - lo) * i / samples;
    if (!(second(u) > 0.0))
      throw std::invalid_argument("flux is not strictly convex at u = " + std::to_string(u));
    const double back = prime_inverse_unchecked(prime(u));
    if (!(std::abs(back - u) <= 1e-12 * (1.0 + std::abs(u))))
      throw std::invalid_argument("(f')^-1 does not invert f' at u = " + std::to_string(u));
  }
}

double godunov_flux(const ConvexFlux& f, double u_left, double u_right) {
  if (f.kind() == FluxKind::Zero) return 0.0;
  if (u_left <= u_right) {
    if (f.prime(u_left) >= 0.0) return f.value(u_left);
    if (f.prime(u_right) <= 0.0) return f.value(u_right);
    // sonic point inside the fan
    return f.value(f.prime_inverse_unchecked(0.0));
  }
  return std::max(f.value(u_left), f.value(u_right));
}

}  // namespace visclab
