#include "visclab/theorems.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>
#include <utility>

#include "visclab/errors.hpp"
#include "visclab/wave_profiles.hpp"

namespace visclab {
namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 11> kNames{{
    {TheoremId::ConstantState, "constant"},
    {TheoremId::ConstantStateL1, "constant-l1"},
    {TheoremId::ConstantStateDerivatives, "constant-deriv"},
    {TheoremId::Fan, "fan"},
    {TheoremId::FanL1, "fan-l1"},
    {TheoremId::FanDerivatives, "fan-deriv"},
    {TheoremId::SmoothedQ1Derivatives, "smooth1-deriv"},
    {TheoremId::SmoothedQ2Derivatives, "smooth2-deriv"},
    {TheoremId::Diffusive, "diffusive"},
    {TheoremId::DiffusiveL1, "diffusive-l1"},
    {TheoremId::DiffusiveDerivatives, "diffusive-deriv"},
}};

constexpr std::array<std::pair<Quantity, std::string_view>, 4> kQuantities{{
    {Quantity::Value, "u"},
    {Quantity::Dx, "dx"},
    {Quantity::Dt, "dt"},
    {Quantity::Dxx, "dxx"},
}};

std::string_view quantity_name(Quantity q) {
  for (const auto& [k, n] : kQuantities)
    if (k == q) return n;
  return "?";
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw std::invalid_argument(fmt::format("bad {} '{}'", what, s));
  return v;
}

[[noreturn]] void not_stated(TheoremId id, Quantity quantity, double r) {
  throw std::invalid_argument(fmt::format("theorem {} states no bound for {} in {}", theorem_name(id),
                                          quantity_name(quantity),
                                          std::isinf(r) ? std::string("Linf") : fmt::format("L{}", r)));
}

TheoremTarget target(double exponent, bool eps, bool log = false) {
  TheoremTarget t;
  t.exponent = exponent;
  t.epsilon = eps;
  t.log_factor_allowed = log;
  t.tolerance = eps ? kEpsilonTolerance : kExponentTolerance;
  return t;
}

// Reference state for a line: nullopt means the constant far field.
struct Reference {
  std::optional<WaveProfile> profile;
  double shift = 0.0;
  bool needs_positive_time = false;
};

Reference reference_for(const TheoremCheck& check, const ProblemSetup& setup) {
  Reference r;
  switch (check.id) {
    case TheoremId::ConstantState:
    case TheoremId::ConstantStateL1:
    case TheoremId::ConstantStateDerivatives:
    case TheoremId::Diffusive:
    case TheoremId::DiffusiveL1:
    case TheoremId::DiffusiveDerivatives:
      if (setup.u_minus != setup.u_plus)
        throw std::invalid_argument(
            fmt::format("theorem {} concerns a constant state but u- != u+", theorem_name(check.id)));
      break;
    case TheoremId::Fan:
    case TheoremId::FanL1:
      r.profile = WaveProfile::rarefaction(setup.flux, setup.u_minus, setup.u_plus);
      r.needs_positive_time = true;
      break;
    case TheoremId::FanDerivatives:
      r.profile = WaveProfile::rarefaction(setup.flux, setup.u_minus, setup.u_plus);
      r.shift = 1.0;
      break;
    case TheoremId::SmoothedQ1Derivatives:
      r.profile = WaveProfile::smoothed(setup.flux, 1.0, setup.u_minus, setup.u_plus);
      break;
    case TheoremId::SmoothedQ2Derivatives:
      r.profile = WaveProfile::smoothed(setup.flux, kSecondSmoothingExponent, setup.u_minus, setup.u_plus);
      break;
  }
  return r;
}

std::vector<double> line_field(const TheoremCheck& check, const GridSolution& s, const Reference& ref,
                               const ProblemSetup& setup) {
  if (ref.profile) return quantity_field(s, check.quantity, &*ref.profile, ref.shift, setup.flux, setup.law);
  auto field = quantity_field(s, check.quantity, nullptr, 0.0, setup.flux, setup.law);
  if (check.quantity == Quantity::Value)
    for (double& v : field) v -= setup.u_minus;
  return field;
}

}  // namespace

std::string_view theorem_name(TheoremId id) noexcept {
  for (const auto& [k, n] : kNames)
    if (k == id) return n;
  return "?";
}

TheoremCheck TheoremCheck::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 3 || parts.size() > 4)
    throw std::invalid_argument(fmt::format("check '{}' is not of the form <theorem>:<quantity>:<norm>[:tol]", text));
  TheoremCheck c;
  bool found = false;
  for (const auto& [k, n] : kNames)
    if (n == parts[0]) c.id = k, found = true;
  if (!found) throw std::invalid_argument(fmt::format("unknown theorem '{}'", parts[0]));
  found = false;
  for (const auto& [k, n] : kQuantities)
    if (n == parts[1]) c.quantity = k, found = true;
  if (!found) throw std::invalid_argument(fmt::format("unknown quantity '{}' (u, dx, dt, dxx)", parts[1]));
  const std::string_view nm = parts[2];
  if (nm.size() < 2 || nm[0] != 'L') throw std::invalid_argument(fmt::format("bad norm '{}'", nm));
  if (nm == "Linf") {
    c.norm_order = kInfinityNorm;
  } else {
    c.norm_order = parse_number(nm.substr(1), "norm order");
    if (c.norm_order < 1.0) throw std::invalid_argument(fmt::format("norm order must be >= 1 in '{}'", nm));
  }
  if (parts.size() == 4) {
    c.tolerance = parse_number(parts[3], "tolerance");
    if (*c.tolerance < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  }
  theoretical_target(c.id, c.quantity, c.norm_order);
  return c;
}

std::string TheoremCheck::label() const {
  const std::string nm = std::isinf(norm_order) ? "Linf" : fmt::format("L{}", norm_order);
  return fmt::format("{}:{}:{}", theorem_name(id), quantity_name(quantity), nm);
}

TheoremTarget theoretical_target(TheoremId id, Quantity quantity, double r) {
  const bool inf = std::isinf(r);
  switch (id) {
    case TheoremId::ConstantState:
    case TheoremId::Fan:
    case TheoremId::Diffusive:
      if (quantity != Quantity::Value || r < 2.0) break;
      if (inf) return target(-0.25, true);
      return target(-0.25 * (1.0 - 2.0 / r), false);
    case TheoremId::ConstantStateL1:
    case TheoremId::FanL1:
    case TheoremId::DiffusiveL1: {
      if (quantity != Quantity::Value) break;
      const bool log = id != TheoremId::DiffusiveL1;
      if (inf) return target(-0.5, true);
      if (r == 1.0) {
        if (id == TheoremId::FanL1) {
          auto t = target(0.0, true);
          t.report_only = true;
          return t;
        }
        return target(0.0, false, log);
      }
      return target(-0.5 * (1.0 - 1.0 / r), false, log);
    }
    case TheoremId::ConstantStateDerivatives:
    case TheoremId::DiffusiveDerivatives:
    case TheoremId::SmoothedQ1Derivatives:
    case TheoremId::SmoothedQ2Derivatives: {
      const bool eps = id != TheoremId::DiffusiveDerivatives;
      if (quantity == Quantity::Dx) {
        if (inf) return target(-1.0, true);
        if (r < 2.0) break;
        return target(-(2.0 * r - 1.0) / (2.0 * r), eps);
      }
      if ((quantity == Quantity::Dt || quantity == Quantity::Dxx) && r == 2.0) return target(-0.75, eps);
      break;
    }
    case TheoremId::FanDerivatives:
      if (quantity == Quantity::Dx) {
        if (inf) return target(-1.0, true);
        if (r < 2.0) break;
        return target(-(r - 1.0) / r, false);
      }
      if (quantity == Quantity::Dt && r == 2.0) return target(-0.5, false);
      if (quantity == Quantity::Dxx && r == 2.0) return target(-0.75, true);
      break;
  }
  not_stated(id, quantity, r);
}

nlohmann::ordered_json DecayReport::to_json() const {
  nlohmann::ordered_json j;
  j["norm_label"] = norm_label;
  auto s = nlohmann::ordered_json::array();
  for (const auto& p : series) s.push_back({p.t, p.value});
  j["series"] = std::move(s);
  j["fitted_exponent"] = fitted_exponent;
  j["fit_window"] = {fit_window.t_lo, fit_window.t_hi};
  j["theoretical_exponent"] = theoretical_exponent;
  j["log_factor_allowed"] = log_factor_allowed;
  j["pass"] = pass ? nlohmann::ordered_json(*pass) : nlohmann::ordered_json(nullptr);
  return j;
}

Series norm_series(const TheoremCheck& check, std::span<const GridSolution> snapshots, const ProblemSetup& setup) {
  const Reference ref = reference_for(check, setup);
  Series out;
  for (const auto& s : snapshots) {
    if (ref.needs_positive_time && !(s.t > 0.0)) continue;
    if (ref.profile && ref.profile->kind() == ProfileKind::Rarefaction && !(s.t + ref.shift > 0.0)) continue;
    const auto field = line_field(check, s, ref, setup);
    out.push_back({s.t, norm(field, s.dx, check.norm_order)});
  }
  return out;
}

DecayReport theorem_check(const TheoremCheck& check, const Series& series) {
  const TheoremTarget tgt = theoretical_target(check.id, check.quantity, check.norm_order);
  const double decades = series_decades(series);
  if (decades < kMinimumDecades)
    throw DataError(fmt::format("series for {} spans {:.2f} decades of time; need {}", check.label(), decades,
                                kMinimumDecades));
  const DecayFit fit = fit_decay(series, tgt.log_factor_allowed);
  DecayReport r;
  r.norm_label = check.label();
  r.series = series;
  r.fitted_exponent = fit.corrected_exponent.value_or(fit.exponent);
  r.fit_window = fit.window;
  r.theoretical_exponent = tgt.exponent;
  r.log_factor_allowed = tgt.log_factor_allowed;
  if (!tgt.report_only) r.pass = r.fitted_exponent <= tgt.exponent + check.tolerance.value_or(tgt.tolerance);
  return r;
}

DecayReport theorem_check(const TheoremCheck& check, std::span<const GridSolution> snapshots,
                          const ProblemSetup& setup) {
  return theorem_check(check, norm_series(check, snapshots, setup));
}

std::vector<std::vector<double>> deviation_fields(const TheoremCheck& check, std::span<const GridSolution> snapshots,
                                                  const ProblemSetup& setup) {
  TheoremCheck value_line = check;
  value_line.quantity = Quantity::Value;
  const Reference ref = reference_for(value_line, setup);
  std::vector<std::vector<double>> out;
  for (const auto& s : snapshots) {
    if (ref.profile && ref.profile->kind() == ProfileKind::Rarefaction && !(s.t + ref.shift > 0.0)) continue;
    out.push_back(line_field(value_line, s, ref, setup));
  }
  return out;
}

}  // namespace visclab
