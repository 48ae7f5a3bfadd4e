#include "visclab/decay_fit.hpp"

#include <algorithm>
#include <boost/math/statistics/linear_regression.hpp>
#include <cmath>
#include <string>
#include <utility>

#include "visclab/errors.hpp"

namespace visclab {
namespace {

double log_factor(double t) { return std::max(1.0, std::log1p(t)); }

std::pair<double, double> regress(const std::vector<double>& x, const std::vector<double>& y) {
  // returns (slope, intercept)
  auto [c0, c1] = boost::math::statistics::simple_ordinary_least_squares(x, y);
  return {c1, c0};
}

}  // namespace

FitWindow default_window(const Series& series, double fraction) {
  if (series.empty()) throw DataError("empty series");
  const double lo = std::log1p(series.front().t);
  const double hi = std::log1p(series.back().t);
  return {std::expm1(hi - fraction * (hi - lo)), series.back().t};
}

double series_decades(const Series& series) {
  if (series.size() < 2) return 0.0;
  return std::log10((1.0 + series.back().t) / (1.0 + series.front().t));
}

DecayFit fit_decay(const Series& series, FitWindow window, bool allow_log) {
  // Relative slack so window ends computed through log/exp still include their sample.
  const double lo = window.t_lo - 1e-12 * (1.0 + std::abs(window.t_lo));
  const double hi = window.t_hi + 1e-12 * (1.0 + std::abs(window.t_hi));
  std::vector<double> lx, ly, lyc;
  DecayFit fit;
  fit.window = window;
  for (const auto& s : series) {
    if (s.t < lo || s.t > hi) continue;
    if (!(s.value > 0.0) || !std::isfinite(s.value))
      throw DataError("nonpositive or non-finite value " + std::to_string(s.value) + " at t = " + std::to_string(s.t));
    lx.push_back(std::log1p(s.t));
    ly.push_back(std::log(s.value));
    lyc.push_back(std::log(s.value / log_factor(s.t)));
    fit.log_bound_constant = std::max(fit.log_bound_constant, s.value / log_factor(s.t));
  }
  fit.samples = lx.size();
  if (fit.samples < kMinimumFitSamples)
    throw DataError("fit window holds " + std::to_string(fit.samples) + " samples; need at least " +
                    std::to_string(kMinimumFitSamples));
  if (lx.front() == lx.back()) throw DataError("fit window has zero time extent");

  std::tie(fit.exponent, fit.intercept) = regress(lx, ly);
  if (allow_log) fit.corrected_exponent = regress(lx, lyc).first;

  double mean = 0.0;
  for (double v : ly) mean += v;
  mean /= static_cast<double>(ly.size());
  double ss_tot = 0.0, ss_res = 0.0;
  for (std::size_t i = 0; i < ly.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.exponent * lx[i]);
    ss_res += r * r;
    ss_tot += (ly[i] - mean) * (ly[i] - mean);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

DecayFit fit_decay(const Series& series, bool allow_log) {
  return fit_decay(series, default_window(series), allow_log);
}

}  // namespace visclab
