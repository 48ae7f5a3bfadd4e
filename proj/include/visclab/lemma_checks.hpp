#pragma once

#include <string>
#include <vector>

#include "visclab/decay_fit.hpp"
#include "visclab/flux_laws.hpp"

namespace visclab {

/// One fitted envelope: the series of a norm of the smoothed profile, its
/// fitted exponent and the exponent of the upper bound it should respect.
struct EnvelopeRow {
  std::string label;
  double r = 2.0;
  Series series;
  double fitted_exponent = 0.0;
  double theoretical_exponent = 0.0;
  bool pass = false;
};

inline constexpr double kEnvelopeTolerance = 0.1;

/// Norms of the smoothed rarefaction U^r(q) between u- and u+ at each time,
/// on a uniform grid over [lambda- t - T, lambda+ t + T] with T = 10 (1+t) + 50
/// and spacing 0.02 sqrt(1+t):
///
///   dU       ||d_x U||_{L^r}                   -1 + 1/r
///   dtU      ||d_t U||_{L^r}                   -1 + 1/r
///   dxxU     ||d_x^2 U||_{L^r}                 -1 - (1/2q)(1 - 1/r)
///   U-ur     ||U - u^r(./(1+t))||_{L^r}        -1 + 1/r + 1/2q   (only for r >= 2q/(2q-1))
///   dU-dur   ||d_x U - d_x u^r(1+t)||_{L^r}    -1 + 1/r
///   dxxU-dxxur (r = 2 only)                    -1 - 1/4q
///
/// Each row passes when the fitted exponent is at most the bound's plus `tolerance`.
std::vector<EnvelopeRow> verify_profile_envelopes(const ConvexFlux& flux, double q, double u_minus, double u_plus,
                                          const std::vector<double>& times, double r,
                                          double tolerance = kEnvelopeTolerance);

/// `count` log-spaced times in [t_lo, t_hi].
std::vector<double> log_spaced(double t_lo, double t_hi, std::size_t count);

struct LemmaPart {
  std::string name;
  std::string detail;
  bool pass = false;
};

/// Numerical check of every part of the speed-profile lemma for w(t, x; q, w-, w+):
/// bounds and monotonicity, the L^r envelopes for r in {1, 2, 4, inf}, uniform
/// convergence to the fan, the two tail estimates and the interior estimate,
/// each fitted over `times`.
/// Throws std::domain_error for q <= 1/2 and std::invalid_argument unless w- < w+.
std::vector<LemmaPart> speed_profile_suite(double q, double w_minus, double w_plus, const std::vector<double>& times);

}  // namespace visclab
