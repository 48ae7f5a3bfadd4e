#pragma once

namespace visclab {

/// Normalization K_q with K_q * int_0^inf (1+y^2)^{-q} dy = 1.
/// Throws std::domain_error for q <= 1/2 (the integral diverges).
double kq_constant(double q);

/// int_0^x (1+y^2)^{-q} dy via the regularized incomplete beta function.
double smoothing_integral(double q, double x);

/// Smoothed Burgers rarefaction built by characteristics from the initial
/// speed profile
///
///   w0(x) = (w- + w+)/2 + (w+ - w-)/2 * K_q * int_0^x (1+y^2)^{-q} dy,
///
/// so that w(t, x) = w0(x0) where x = x0 + w0(x0) t.
class CharacteristicMap {
 public:
  CharacteristicMap(double q, double w_minus, double w_plus);

  double q() const noexcept { return q_; }
  double w_minus() const noexcept { return w_minus_; }
  double w_plus() const noexcept { return w_plus_; }
  double kq() const noexcept { return kq_; }

  double initial(double x) const;
  double initial_slope(double x) const;
  double initial_curvature(double x) const;

  /// Root x0 of x0 + w0(x0) t - x. Newton on the bracket [x - w+ t, x - w- t]
  /// with bisection fallback.
  double foot(double t, double x) const;

  struct Sample {
    double x0;
    double w;
    double w_dx;
    double w_dt;
    double w_dxx;
  };
  /// w and its derivatives from a single root solve.
  Sample sample(double t, double x) const;

 private:
  double q_;
  double w_minus_;
  double w_plus_;
  double kq_;
  double half_jump_;  // (w+ - w-)/2 * K_q
};

inline double characteristic_foot(const CharacteristicMap& map, double t, double x) { return map.foot(t, x); }
inline double smooth_w(const CharacteristicMap& map, double t, double x) { return map.sample(t, x).w; }
inline double smooth_w_dx(const CharacteristicMap& map, double t, double x) { return map.sample(t, x).w_dx; }
inline double smooth_w_dt(const CharacteristicMap& map, double t, double x) { return map.sample(t, x).w_dt; }

}  // namespace visclab
