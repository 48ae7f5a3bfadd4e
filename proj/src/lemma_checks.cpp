#include "visclab/lemma_checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <stdexcept>

#include "visclab/characteristic.hpp"
#include "visclab/norms.hpp"
#include "visclab/wave_profiles.hpp"

namespace visclab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string norm_name(double r) { return std::isinf(r) ? "Linf" : fmt::format("L{}", r); }

struct SampleGrid {
  double x0;
  double h;
  std::size_t n;
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
};

SampleGrid envelope_grid(double lm, double lp, double t) {
  const double pad = 10.0 * (1.0 + t) + 50.0;
  const double h = 0.02 * std::sqrt(1.0 + t);
  const double lo = lm * t - pad;
  const double hi = lp * t + pad;
  return {lo, h, static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1};
}

EnvelopeRow finish_row(std::string label, double r, Series series, double theoretical, double tol) {
  EnvelopeRow row;
  row.label = std::move(label);
  row.r = r;
  const DecayFit fit = fit_decay(series, false);
  row.series = std::move(series);
  row.fitted_exponent = fit.exponent;
  row.theoretical_exponent = theoretical;
  row.pass = fit.exponent <= theoretical + tol;
  return row;
}

double slope(const Series& s) { return fit_decay(s, false).exponent; }

}  // namespace

std::vector<double> log_spaced(double t_lo, double t_hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {t_hi};
  if (!(t_lo > 0.0 && t_hi > t_lo)) throw std::invalid_argument("log_spaced needs 0 < t_lo < t_hi");
  std::vector<double> out(count);
  const double a = std::log(t_lo);
  const double b = std::log(t_hi);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  out.front() = t_lo;
  out.back() = t_hi;
  return out;
}

std::vector<EnvelopeRow> verify_profile_envelopes(const ConvexFlux& flux, double q, double u_minus, double u_plus,
                                          const std::vector<double>& times, double r, double tolerance) {
  if (!(r >= 1.0)) throw std::invalid_argument("norm order r must be >= 1");
  if (times.size() < kMinimumFitSamples) throw std::invalid_argument("need at least 8 times");
  for (std::size_t i = 0; i < times.size(); ++i)
    if (!(times[i] > 0.0) || (i && !(times[i] > times[i - 1])))
      throw std::invalid_argument("times must be positive and increasing");

  const WaveProfile U = WaveProfile::smoothed(flux, q, u_minus, u_plus);
  const WaveProfile ur = WaveProfile::rarefaction(flux, u_minus, u_plus);
  const bool with_value_gap = r >= 2.0 * q / (2.0 * q - 1.0);
  const bool with_second_gap = r == 2.0;

  Series s_dx, s_dt, s_dxx, s_gap, s_dgap, s_ddgap;
  std::vector<double> f_dx, f_dt, f_dxx, f_gap, f_dgap, f_ddgap;
  for (double t : times) {
    const SampleGrid g = envelope_grid(U.lambda_minus(), U.lambda_plus(), t);
    for (auto* f : {&f_dx, &f_dt, &f_dxx, &f_gap, &f_dgap, &f_ddgap}) f->resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      const double x = g.x(i);
      const auto J = U.jet(t, x);
      const auto R = ur.jet(1.0 + t, x);
      f_dx[i] = J.dx;
      f_dt[i] = J.dt;
      f_dxx[i] = J.dxx;
      f_gap[i] = J.value - R.value;
      f_dgap[i] = J.dx - R.dx;
      f_ddgap[i] = J.dxx - R.dxx;
    }
    s_dx.push_back({t, norm(f_dx, g.h, r)});
    s_dt.push_back({t, norm(f_dt, g.h, r)});
    s_dxx.push_back({t, norm(f_dxx, g.h, r)});
    s_gap.push_back({t, norm(f_gap, g.h, r)});
    s_dgap.push_back({t, norm(f_dgap, g.h, r)});
    s_ddgap.push_back({t, norm(f_ddgap, g.h, 2.0)});
  }

  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
  const std::string nm = norm_name(r);
  std::vector<EnvelopeRow> rows;
  rows.push_back(finish_row("dU:" + nm, r, std::move(s_dx), -1.0 + inv_r, tolerance));
  rows.push_back(finish_row("dtU:" + nm, r, std::move(s_dt), -1.0 + inv_r, tolerance));
  rows.push_back(finish_row("dxxU:" + nm, r, std::move(s_dxx), -1.0 - (1.0 - inv_r) / (2.0 * q), tolerance));
  if (with_value_gap)
    rows.push_back(finish_row("U-ur:" + nm, r, std::move(s_gap), -1.0 + inv_r + 1.0 / (2.0 * q), tolerance));
  rows.push_back(finish_row("dU-dur:" + nm, r, std::move(s_dgap), -1.0 + inv_r, tolerance));
  if (with_second_gap)
    rows.push_back(finish_row("dxxU-dxxur:L2", 2.0, std::move(s_ddgap), -1.0 - 1.0 / (4.0 * q), tolerance));
  return rows;
}

std::vector<LemmaPart> speed_profile_suite(double q, double w_minus, double w_plus, const std::vector<double>& times) {
  if (!(q > 0.5)) throw std::domain_error(fmt::format("q = {} violates q > 1/2", q));
  if (!(w_minus < w_plus)) throw std::invalid_argument("lemma suite needs w- < w+");
  const CharacteristicMap map(q, w_minus, w_plus);
  if (times.size() < kMinimumFitSamples) throw std::invalid_argument("lemma suite needs at least 8 times");
  std::vector<LemmaPart> parts;

  // Strict bounds near the fan and positive slope everywhere
  {
    bool ok = true;
    std::size_t checked = 0;
    for (double t : {0.0, 0.5, 1.0, 10.0, 100.0, 1000.0}) {
      const SampleGrid g = envelope_grid(w_minus, w_plus, t);
      for (std::size_t i = 0; i < g.n; i += 7) {
        const double x = g.x(i);
        const auto s = map.sample(t, x);
        const bool near = x >= w_minus * t - 10.0 && x <= w_plus * t + 10.0;
        ok &= s.w_dx > 0.0 && (near ? (s.w > w_minus && s.w < w_plus) : (s.w >= w_minus && s.w <= w_plus));
        ++checked;
      }
    }
    parts.push_back({"bounds and monotonicity", fmt::format("{} samples", checked), ok});
  }

  // L^r envelopes for r in {1, 2, 4, inf}
  {
    const std::array<double, 4> orders{1.0, 2.0, 4.0, kInf};
    std::array<Series, 4> sx, st, sxx;
    std::vector<double> fx, ft, fxx;
    for (double t : times) {
      const SampleGrid g = envelope_grid(w_minus, w_plus, t);
      fx.resize(g.n), ft.resize(g.n), fxx.resize(g.n);
      for (std::size_t i = 0; i < g.n; ++i) {
        const auto s = map.sample(t, g.x(i));
        fx[i] = s.w_dx, ft[i] = s.w_dt, fxx[i] = s.w_dxx;
      }
      for (std::size_t k = 0; k < orders.size(); ++k) {
        sx[k].push_back({t, norm(fx, g.h, orders[k])});
        st[k].push_back({t, norm(ft, g.h, orders[k])});
        sxx[k].push_back({t, norm(fxx, g.h, orders[k])});
      }
    }
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const double r = orders[k];
      const double ir = std::isinf(r) ? 0.0 : 1.0 / r;
      const double ex = -1.0 + ir;
      const double exx = -1.0 - (1.0 - ir) / (2.0 * q);
      const double a = slope(sx[k]), b = slope(st[k]), c = slope(sxx[k]);
      const bool ok =
          a <= ex + kEnvelopeTolerance && b <= ex + kEnvelopeTolerance && c <= exx + kEnvelopeTolerance;
      parts.push_back({"L^r envelopes " + norm_name(r),
                       fmt::format("dx {:.3f} (bound {:.3f}), dt {:.3f} (bound {:.3f}), dxx {:.3f} (bound {:.3f})",
                                   a, ex, b, ex, c, exx),
                       ok});
    }
  }

  // Uniform convergence to the fan w^r(x/t)
  {
    Series sup;
    for (double t : times) {
      const SampleGrid g = envelope_grid(w_minus, w_plus, t);
      double m = 0.0;
      for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        m = std::max(m, std::abs(map.sample(t, x).w - std::clamp(x / t, w_minus, w_plus)));
      }
      sup.push_back({t, m});
    }
    const double e = slope(sup);
    parts.push_back({"uniform convergence to the fan",
                     fmt::format("sup {:.3e} -> {:.3e}, exponent {:.3f}", sup.front().value, sup.back().value, e),
                     e < 0.0 && sup.back().value < sup.front().value});
  }

  // Tails beyond the fan edges; the constants must not grow with t
  const double tail_decay = (2.0 * q - 1.0) / (2.0 * q);
  const double s_max = std::min(1e4, std::pow(1e10, 1.0 / (2.0 * q - 1.0)) - 1.0);
  for (int side = 0; side < 2; ++side) {
    const double edge_speed = side == 0 ? w_minus : w_plus;
    Series c_val, c_der;
    for (double t : times) {
      double mv = 0.0, md = 0.0;
      for (int k = 0; k <= 200; ++k) {
        const double s = std::expm1(std::log1p(s_max) * k / 200.0);
        const double x = side == 0 ? edge_speed * t - s : edge_speed * t + s;
        const auto smp = map.sample(t, x);
        const double bound_v = std::min(std::pow(1.0 + s, -2.0 * q + 1.0), std::pow(1.0 + t, -tail_decay));
        const double bound_d = 1.0 / (1.0 + std::pow(s, 2.0 * q) + t);
        mv = std::max(mv, std::abs(smp.w - edge_speed) / bound_v);
        md = std::max(md, std::max(std::abs(smp.w_dx), std::abs(smp.w_dt)) / bound_d);
      }
      c_val.push_back({t, mv});
      c_der.push_back({t, md});
    }
    const double ev = slope(c_val), ed = slope(c_der);
    parts.push_back({side == 0 ? "left tail" : "right tail",
                     fmt::format("C_value {:.3g} (trend {:.3f}), C_slope {:.3g} (trend {:.3f})", c_val.back().value,
                                 ev, c_der.back().value, ed),
                     std::isfinite(c_val.back().value) && std::isfinite(c_der.back().value) &&
                         ev <= kEnvelopeTolerance && ed <= kEnvelopeTolerance});
  }

  // Interior of the fan
  {
    Series c_val, c_der;
    for (double t : times) {
      double mv = 0.0, md = 0.0;
      for (int k = 0; k <= 400; ++k) {
        const double x = w_minus * t + (w_plus - w_minus) * t * k / 400.0;
        const auto smp = map.sample(t, x);
        mv = std::max(mv, std::abs(smp.w - x / (1.0 + t)));
        md = std::max(md, std::abs(smp.w_dx - 1.0 / (1.0 + t)));
      }
      c_val.push_back({t, mv * std::pow(1.0 + t, tail_decay)});
      c_der.push_back({t, md * (1.0 + t)});
    }
    const double ev = slope(c_val), ed = slope(c_der);
    parts.push_back({"fan interior",
                     fmt::format("C_value {:.3g} (trend {:.3f}), C_slope {:.3g} (trend {:.3f})", c_val.back().value,
                                 ev, c_der.back().value, ed),
                     std::isfinite(c_val.back().value) && ev <= kEnvelopeTolerance && ed <= kEnvelopeTolerance});
  }
  return parts;
}

}  // namespace visclab
