#include "visclab/wave_profiles.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <stdexcept>

namespace visclab {

WaveProfile::WaveProfile(ProfileKind kind, ConvexFlux flux, double u_minus, double u_plus)
    : kind_(kind), flux_(std::move(flux)), u_minus_(u_minus), u_plus_(u_plus) {}

WaveProfile WaveProfile::rarefaction(ConvexFlux flux, double u_minus, double u_plus) {
  if (!flux.is_convex()) throw std::invalid_argument("rarefaction wave needs a convex flux");
  if (!(u_minus <= u_plus)) throw std::invalid_argument("rarefaction wave needs u- <= u+");
  WaveProfile p(ProfileKind::Rarefaction, std::move(flux), u_minus, u_plus);
  p.lambda_minus_ = p.flux_.prime(u_minus);
  p.lambda_plus_ = p.flux_.prime(u_plus);
  return p;
}

WaveProfile WaveProfile::smoothed(ConvexFlux flux, double q, double u_minus, double u_plus) {
  if (!flux.is_convex()) throw std::invalid_argument("smoothed rarefaction needs a convex flux");
  if (!(u_minus <= u_plus)) throw std::invalid_argument("smoothed rarefaction needs u- <= u+");
  WaveProfile p(ProfileKind::SmoothedRarefaction, std::move(flux), u_minus, u_plus);
  p.lambda_minus_ = p.flux_.prime(u_minus);
  p.lambda_plus_ = p.flux_.prime(u_plus);
  p.map_.emplace(q, p.lambda_minus_, p.lambda_plus_);
  return p;
}

WaveProfile WaveProfile::contact(double u_minus, double u_plus, double mu, double speed) {
  if (!(mu > 0.0)) throw std::invalid_argument("contact wave needs mu > 0");
  WaveProfile p(ProfileKind::ContactWave, ConvexFlux::zero(), u_minus, u_plus);
  p.mu_ = mu;
  p.speed_ = speed;
  p.lambda_minus_ = p.lambda_plus_ = speed;
  return p;
}

double WaveProfile::value(double t, double x) const {
  if (kind_ == ProfileKind::ContactWave && t == 0.0) return riemann_data(u_minus_, u_plus_, x - speed_ * t);
  return jet(t, x).value;
}

WaveProfile::Jet WaveProfile::jet(double t, double x) const {
  switch (kind_) {
    case ProfileKind::Rarefaction: return rarefaction_jet(t, x);
    case ProfileKind::SmoothedRarefaction: return smoothed_jet(t, x);
    case ProfileKind::ContactWave: break;
  }
  return contact_jet(t, x);
}

WaveProfile::Jet WaveProfile::rarefaction_jet(double t, double x) const {
  if (!(t > 0.0)) throw std::domain_error("rarefaction wave is undefined at t <= 0; use Riemann data");
  if (x <= lambda_minus_ * t) return {u_minus_, 0.0, 0.0, 0.0};
  if (x >= lambda_plus_ * t) return {u_plus_, 0.0, 0.0, 0.0};
  const double u = flux_.prime_inverse(x / t);
  const double curv = flux_.second(u);
  Jet j{};
  j.value = u;
  j.dx = 1.0 / (curv * t);
  j.dt = -x / (curv * t * t);
  j.dxx = -flux_.third(u) / (curv * curv * curv * t * t);
  return j;
}

WaveProfile::Jet WaveProfile::smoothed_jet(double t, double x) const {
  if (t < 0.0) throw std::domain_error("smoothed rarefaction requires t >= 0");
  const auto s = map_->sample(t, x);
  Jet j{};
  if (u_minus_ == u_plus_) {
    j.value = u_minus_;
    return j;
  }
  const double u = flux_.prime_inverse(s.w);
  const double curv = flux_.second(u);
  j.value = u;
  j.dx = s.w_dx / curv;
  j.dt = s.w_dt / curv;
  j.dxx = s.w_dxx / curv - flux_.third(u) * s.w_dx * s.w_dx / (curv * curv * curv);
  return j;
}

WaveProfile::Jet WaveProfile::contact_jet(double t, double x) const {
  if (!(t > 0.0)) throw std::domain_error("contact wave derivatives require t > 0");
  const double scale = std::sqrt(4.0 * mu_ * t);
  const double xi = (x - speed_ * t) / scale;
  const double jump = u_plus_ - u_minus_;
  Jet j{};
  j.value = u_minus_ + 0.5 * jump * std::erfc(-xi);
  j.dx = jump * std::exp(-xi * xi) / (boost::math::constants::root_pi<double>() * scale);
  j.dxx = -2.0 * xi / scale * j.dx;
  j.dt = mu_ * j.dxx - speed_ * j.dx;
  return j;
}

double riemann_data(double u_minus, double u_plus, double x) {
  if (x < 0.0) return u_minus;
  if (x > 0.0) return u_plus;
  return 0.5 * (u_minus + u_plus);
}

}  // namespace visclab
