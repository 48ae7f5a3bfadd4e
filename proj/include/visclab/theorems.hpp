#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "visclab/decay_fit.hpp"
#include "visclab/flux_laws.hpp"
#include "visclab/grid.hpp"
#include "visclab/norms.hpp"

namespace visclab {

/// Decay statements that can be checked against a run, by family:
///
///   constant        constant-l1        constant-deriv    deviation u - u~ from a constant state
///   fan             fan-l1                               u - u^r(x/t) for a rarefaction
///   fan-deriv                                            derivatives against u^r(1+t, .)
///   smooth1-deriv   smooth2-deriv                        derivatives against U^r(q=1), U^r(q=10)
///   diffusive       diffusive-l1       diffusive-deriv   u - u~ for the equation without convection
///
/// The "-l1" families assume integrable initial deviation and carry the sharper rates.
enum class TheoremId {
  ConstantState,
  ConstantStateL1,
  ConstantStateDerivatives,
  Fan,
  FanL1,
  FanDerivatives,
  SmoothedQ1Derivatives,
  SmoothedQ2Derivatives,
  Diffusive,
  DiffusiveL1,
  DiffusiveDerivatives
};

std::string_view theorem_name(TheoremId id) noexcept;

/// One line of a theorem: `<id>:<quantity>:<norm>[:<tolerance>]`, quantity in
/// {u, dx, dt, dxx}, norm in {L1, L2, L3, ..., Linf}. Example `fan-l1:u:L2`.
struct TheoremCheck {
  TheoremId id = TheoremId::ConstantState;
  Quantity quantity = Quantity::Value;
  double norm_order = 2.0;
  std::optional<double> tolerance;

  /// Throws std::invalid_argument on a malformed line or a line the theorem does not state.
  static TheoremCheck parse(std::string_view text);
  std::string label() const;
};

struct TheoremTarget {
  double exponent = 0.0;
  bool log_factor_allowed = false;
  /// "+ epsilon" statements.
  bool epsilon = false;
  /// No rate is claimed; the series is reported without a verdict.
  bool report_only = false;
  double tolerance = 0.1;
};

/// Tolerance on the exponent: 0.1, widened to 0.15 for epsilon statements.
inline constexpr double kExponentTolerance = 0.1;
inline constexpr double kEpsilonTolerance = 0.15;

/// Exponent stated for a line. Throws std::invalid_argument if the theorem
/// does not cover that quantity/norm combination.
TheoremTarget theoretical_target(TheoremId id, Quantity quantity, double norm_order);

/// Problem data the reference profiles are built from.
struct ProblemSetup {
  ConvexFlux flux = ConvexFlux::burgers();
  ViscosityLaw law = ViscosityLaw::regularized_power(0.5, 1.0);
  double u_minus = 0.0;
  double u_plus = 0.0;
};

struct DecayReport {
  std::string norm_label;
  Series series;
  double fitted_exponent = 0.0;
  FitWindow fit_window{0.0, 0.0};
  double theoretical_exponent = 0.0;
  bool log_factor_allowed = false;
  /// Empty for report-only lines.
  std::optional<bool> pass;

  nlohmann::ordered_json to_json() const;
};

/// Norm of the line's deviation at every snapshot the reference is defined at.
Series norm_series(const TheoremCheck& check, std::span<const GridSolution> snapshots, const ProblemSetup& setup);

/// Fits `series` and verdicts it against the line. Throws DataError when the
/// series spans fewer than 1.5 decades or the fit window is too thin.
DecayReport theorem_check(const TheoremCheck& check, const Series& series);
DecayReport theorem_check(const TheoremCheck& check, std::span<const GridSolution> snapshots,
                          const ProblemSetup& setup);

/// Value-deviation fields (u minus the line's reference) for every snapshot,
/// used by the structural inequality checks.
std::vector<std::vector<double>> deviation_fields(const TheoremCheck& check, std::span<const GridSolution> snapshots,
                                                  const ProblemSetup& setup);

}  // namespace visclab
