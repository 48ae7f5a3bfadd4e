#include "visclab/characteristic.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace visclab {
namespace {

void require_q(double q) {
  if (!(q > 0.5) || !std::isfinite(q))
    throw std::domain_error("smoothing exponent q must exceed 1/2");
}

double integrand(double q, double y) { return std::pow(1.0 + y * y, -q); }

// K_q int_0^x (1+y^2)^{-q} dy for x >= 0. With u = y^2/(1+y^2) the integral is
// B(u; 1/2, q - 1/2) / 2, so the normalized value is a regularized incomplete beta.
double normalized_half_line(double q, double x) {
  if (q == 1.0) return std::atan(x) * (2.0 / boost::math::constants::pi<double>());
  const double x2 = x * x;
  if (x2 <= 1.0) return boost::math::ibeta(0.5, q - 0.5, x2 / (1.0 + x2));
  return boost::math::ibetac(q - 0.5, 0.5, 1.0 / (1.0 + x2));
}

}  // namespace

double kq_constant(double q) {
  require_q(q);
  if (q == 1.0) return 2.0 / boost::math::constants::pi<double>();
  return 2.0 / boost::math::beta(0.5, q - 0.5);
}

double smoothing_integral(double q, double x) {
  require_q(q);
  const double v = normalized_half_line(q, std::abs(x)) / kq_constant(q);
  return x < 0.0 ? -v : v;
}

CharacteristicMap::CharacteristicMap(double q, double w_minus, double w_plus)
    : q_(q), w_minus_(w_minus), w_plus_(w_plus), kq_(kq_constant(q)),
      half_jump_(0.5 * (w_plus - w_minus) * kq_) {
  if (!(w_minus <= w_plus)) throw std::invalid_argument("characteristic map needs w- <= w+");
}

double CharacteristicMap::initial(double x) const {
  const double mid = 0.5 * (w_minus_ + w_plus_);
  if (half_jump_ == 0.0) return mid;
  const double v = normalized_half_line(q_, std::abs(x));
  return mid + 0.5 * (w_plus_ - w_minus_) * (x < 0.0 ? -v : v);
}

double CharacteristicMap::initial_slope(double x) const { return half_jump_ * integrand(q_, x); }

double CharacteristicMap::initial_curvature(double x) const {
  return half_jump_ * (-2.0 * q_ * x) * std::pow(1.0 + x * x, -q_ - 1.0);
}

double CharacteristicMap::foot(double t, double x) const {
  if (t < 0.0) throw std::domain_error("characteristic foot requires t >= 0");
  if (t == 0.0) return x;
  if (half_jump_ == 0.0) return x - w_minus_ * t;

  double lo = x - w_plus_ * t;
  double hi = x - w_minus_ * t;
  // speed the fan would assign at this point
  const double guess_speed = std::clamp(x / t, w_minus_, w_plus_);
  double x0 = std::clamp(x - guess_speed * t, lo, hi);

  const double g_tol = 1e-13 * (1.0 + std::abs(x));
  for (int it = 0; it < 200; ++it) {
    const double g = x0 + initial(x0) * t - x;
    if (std::abs(g) <= g_tol) break;
    if (g < 0.0) lo = x0; else hi = x0;
    double next = x0 - g / (1.0 + initial_slope(x0) * t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x0) <= 1e-16 * (1.0 + std::abs(x0))) {
      x0 = next;
      break;
    }
    x0 = next;
  }
  return x0;
}

CharacteristicMap::Sample CharacteristicMap::sample(double t, double x) const {
  const double x0 = foot(t, x);
  Sample s{};
  s.x0 = x0;
  s.w = initial(x0);
  if (half_jump_ == 0.0) return s;
  const double slope = initial_slope(x0);
  const double stretch = 1.0 + slope * t;
  s.w_dx = slope / stretch;
  s.w_dt = -s.w * s.w_dx;
  s.w_dxx = initial_curvature(x0) / (stretch * stretch * stretch);
  return s;
}

}  // namespace visclab
