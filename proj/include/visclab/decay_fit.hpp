#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace visclab {

struct Sample {
  double t;
  double value;
};
using Series = std::vector<Sample>;

struct FitWindow {
  double t_lo;
  double t_hi;
};

/// Fraction of the series, measured in log(1+t) from the end, used by default.
inline constexpr double kDefaultWindowFraction = 0.7;
inline constexpr std::size_t kMinimumFitSamples = 8;
/// Required span of a series in decades of (1+t).
inline constexpr double kMinimumDecades = 1.5;

/// Last `fraction` of the series range in log(1+t).
FitWindow default_window(const Series& series, double fraction = kDefaultWindowFraction);

/// Decades of (1+t) covered by the series.
double series_decades(const Series& series);

struct DecayFit {
  /// Least-squares slope of log(value) against log(1+t).
  double exponent = 0.0;
  double intercept = 0.0;
  /// Slope after dividing values by max{1, ln(1+t)}; set when log correction is requested.
  std::optional<double> corrected_exponent;
  /// sup value / max{1, ln(1+t)} over the window.
  double log_bound_constant = 0.0;
  double r_squared = 0.0;
  std::size_t samples = 0;
  FitWindow window{0.0, 0.0};
};

/// Throws DataError with fewer than 8 samples in the window or a
/// nonpositive value inside it.
DecayFit fit_decay(const Series& series, FitWindow window, bool allow_log);
DecayFit fit_decay(const Series& series, bool allow_log);

}  // namespace visclab
