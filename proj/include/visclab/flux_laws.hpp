#pragma once

#include <functional>
#include <optional>
#include <utility>

namespace visclab {

enum class ViscosityKind { RegularizedPower, OstwaldDeWaele, Linear };

/// Viscous stress law sigma(v) with v = du/dx.
///
///   RegularizedPower  mu * (1 + v^2)^((p-1)/2) * v     (any p > 0)
///   OstwaldDeWaele    mu * |v|^(p-1) * v               (p >= 1 only)
///   Linear            mu * v
///
/// OstwaldDeWaele with 1 <= p < 2 is only C^1 at v = 0; it is admitted for
/// dilatant experiments but the smoothness the stability theory assumes does
/// not hold there.
class ViscosityLaw {
 public:
  static ViscosityLaw regularized_power(double p, double mu = 1.0);
  static ViscosityLaw ostwald_de_waele(double p, double mu = 1.0);
  static ViscosityLaw linear(double mu = 1.0);

  ViscosityKind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  double mu() const noexcept { return mu_; }

  double sigma(double v) const noexcept;
  double sigma_prime(double v) const noexcept;

  /// Largest sigma' over |v| <= v_max. For p <= 1 the slope peaks at v = 0.
  double max_slope(double v_max) const noexcept;

 private:
  ViscosityLaw(ViscosityKind kind, double p, double mu) : kind_(kind), p_(p), mu_(mu) {}

  ViscosityKind kind_;
  double p_;
  double mu_;
};

inline double sigma_eval(const ViscosityLaw& law, double v) noexcept { return law.sigma(v); }
inline double sigma_prime(const ViscosityLaw& law, double v) noexcept { return law.sigma_prime(v); }

enum class FluxKind { Zero, Burgers, Exponential, Custom };

/// Caller-supplied flux and its first three derivatives plus the inverse of f'.
struct FluxEvaluators {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
  std::function<double(double)> d3f;
  std::function<double(double)> df_inverse;
};

/// Convective flux f. Every kind except Zero is strictly convex on its
/// operating interval; Zero only serves the non-convective problem.
class ConvexFlux {
 public:
  static ConvexFlux zero();
  static ConvexFlux burgers();
  static ConvexFlux exponential();
  /// Validates f'' > 0 and the inverse round trip on [lo, hi].
  static ConvexFlux custom(FluxEvaluators evaluators, double lo, double hi);

  FluxKind kind() const noexcept { return kind_; }
  bool is_convex() const noexcept { return kind_ != FluxKind::Zero; }

  double value(double u) const;
  double prime(double u) const;
  double second(double u) const;
  double third(double u) const;

  /// (f')^{-1}(s). Throws std::range_error outside the operating range of f'
  /// and std::domain_error for the Zero flux.
  double prime_inverse(double s) const;

  /// Restricts the operating interval. Throws std::invalid_argument if f is
  /// not strictly convex there or the inverse fails to round trip.
  ConvexFlux with_operating_interval(double lo, double hi) const;
  std::optional<std::pair<double, double>> operating_interval() const { return interval_; }

 private:
  friend double godunov_flux(const ConvexFlux& f, double u_left, double u_right);

  explicit ConvexFlux(FluxKind kind) : kind_(kind) {}
  double prime_inverse_unchecked(double s) const;
  void validate() const;

  FluxKind kind_;
  FluxEvaluators custom_;
  std::optional<std::pair<double, double>> interval_;
};

inline double flux_eval(const ConvexFlux& f, double u) { return f.value(u); }
inline double flux_prime(const ConvexFlux& f, double u) { return f.prime(u); }
inline double flux_prime_inv(const ConvexFlux& f, double s) { return f.prime_inverse(s); }

/// Exact Riemann (Godunov) interface flux for a convex f: min of f over
/// [ul, ur] when ul <= ur, max of f(ul), f(ur) otherwise. Zero flux gives 0.
double godunov_flux(const ConvexFlux& f, double u_left, double u_right);

}  // namespace visclab
