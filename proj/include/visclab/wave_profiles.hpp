#pragma once

#include <optional>

#include "visclab/characteristic.hpp"
#include "visclab/flux_laws.hpp"

namespace visclab {

enum class ProfileKind { Rarefaction, SmoothedRarefaction, ContactWave };

/// Smoothing exponent used for the second smoothed rarefaction approximation.
inline constexpr double kSecondSmoothingExponent = 10.0;

/// Reference asymptotic state with closed-form derivatives.
///
/// - Rarefaction: the self-similar fan (f')^{-1}(x/t), clamped to u-/u+
///   outside [f'(u-) t, f'(u+) t]. Undefined at t = 0.
/// - SmoothedRarefaction(q): (f')^{-1}(w(t, x)) where w solves inviscid
///   Burgers from the smoothed speed profile between f'(u-) and f'(u+).
/// - ContactWave: u- + (u+ - u-) (1 + erf(xi)) / 2, xi = (x - speed t)/sqrt(4 mu t),
///   the heat-kernel solution of u_t + speed u_x = mu u_xx from Riemann data.
class WaveProfile {
 public:
  static WaveProfile rarefaction(ConvexFlux flux, double u_minus, double u_plus);
  static WaveProfile smoothed(ConvexFlux flux, double q, double u_minus, double u_plus);
  static WaveProfile contact(double u_minus, double u_plus, double mu, double speed = 0.0);

  ProfileKind kind() const noexcept { return kind_; }
  const ConvexFlux& flux() const noexcept { return flux_; }
  double u_minus() const noexcept { return u_minus_; }
  double u_plus() const noexcept { return u_plus_; }
  double lambda_minus() const noexcept { return lambda_minus_; }
  double lambda_plus() const noexcept { return lambda_plus_; }
  double q() const noexcept { return map_ ? map_->q() : 0.0; }
  double mu() const noexcept { return mu_; }
  double speed() const noexcept { return speed_; }
  const std::optional<CharacteristicMap>& map() const noexcept { return map_; }

  struct Jet {
    double value;
    double dx;
    double dt;
    double dxx;
  };
  /// Value and derivatives at (t, x). Throws std::domain_error when t is
  /// outside the kind's domain (t <= 0 for Rarefaction and ContactWave).
  Jet jet(double t, double x) const;

  double value(double t, double x) const;
  double dx(double t, double x) const { return jet(t, x).dx; }
  double dt(double t, double x) const { return jet(t, x).dt; }
  double dxx(double t, double x) const { return jet(t, x).dxx; }

 private:
  WaveProfile(ProfileKind kind, ConvexFlux flux, double u_minus, double u_plus);

  Jet rarefaction_jet(double t, double x) const;
  Jet smoothed_jet(double t, double x) const;
  Jet contact_jet(double t, double x) const;

  ProfileKind kind_;
  ConvexFlux flux_;
  double u_minus_;
  double u_plus_;
  double lambda_minus_ = 0.0;
  double lambda_plus_ = 0.0;
  double mu_ = 0.0;
  double speed_ = 0.0;
  std::optional<CharacteristicMap> map_;
};

inline double profile_value(const WaveProfile& p, double t, double x) { return p.value(t, x); }
inline double profile_dx(const WaveProfile& p, double t, double x) { return p.dx(t, x); }
inline double profile_dt(const WaveProfile& p, double t, double x) { return p.dt(t, x); }
inline double profile_dxx(const WaveProfile& p, double t, double x) { return p.dxx(t, x); }

/// Riemann initial datum: u- left of 0, u+ right of 0, midpoint at 0.
double riemann_data(double u_minus, double u_plus, double x);

}  // namespace visclab
