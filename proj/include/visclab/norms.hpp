#pragma once

#include <limits>
#include <span>
#include <vector>

#include "visclab/flux_laws.hpp"
#include "visclab/grid.hpp"
#include "visclab/wave_profiles.hpp"

namespace visclab {

/// Pass q = kInfinityNorm to select the grid maximum.
inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

/// (sum |u_j|^q dx)^{1/q}. Throws std::domain_error for q < 1.
double lq_norm(std::span<const double> values, double dx, double q);
double linf_norm(std::span<const double> values);
/// lq_norm or linf_norm depending on q.
double norm(std::span<const double> values, double dx, double q);

// Derivative fields live on the full grid; the boundary cells carry 0 because
// only the interior (three-point) stencil is used.

/// (u_{j+1} - u_{j-1}) / (2 dx).
std::vector<double> dx_field(const GridSolution& state);
/// (u_{j+1} - 2 u_j + u_{j-1}) / dx^2.
std::vector<double> dxx_field(const GridSolution& state);
/// du/dt from the equation itself: -(f(u_{j+1}) - f(u_{j-1})) / (2 dx)
/// + [sigma((u_{j+1}-u_j)/dx) - sigma((u_j-u_{j-1})/dx)] / dx.
std::vector<double> dt_field(const GridSolution& state, const ConvexFlux& flux, const ViscosityLaw& law);

/// Norm of the order-1 or order-2 centred derivative. Throws std::domain_error
/// for grids with fewer than 5 cells or order outside {1, 2}.
double derivative_norms(const GridSolution& state, int order, double q);

/// int <g>^{p-1} g^2 dx with <s> = (1+s^2)^{1/2}, trapezoid rule over the
/// cell centres of a full-grid gradient field.
double weighted_dissipation(std::span<const double> gradient, double dx, double p);
/// Same functional for the centred gradient of a grid field.
double weighted_dissipation(const GridSolution& state, const ViscosityLaw& law);

enum class Quantity { Value, Dx, Dt, Dxx };

/// Solution minus a reference profile evaluated at t + time_shift.
struct Deviation {
  WaveProfile reference;
  double time_shift = 0.0;
  double t = 0.0;
  double dx = 1.0;
  std::vector<double> values;
};

/// u - reference(t + shift, x_j) at every cell.
Deviation deviation(const GridSolution& state, const WaveProfile& reference, double time_shift = 0.0);

/// Derivative field of u minus the analytic derivative of the reference.
/// Pass no reference to get the plain field. Dt needs the flux and law.
std::vector<double> quantity_field(const GridSolution& state, Quantity quantity, const WaveProfile* reference,
                                   double time_shift, const ConvexFlux& flux, const ViscosityLaw& law);

/// ||phi||_{L2}^2 <= ||phi||_{L1} ||phi||_{Linf}.
struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double rel_slack = 1e-12) const { return lhs <= rhs * (1.0 + rel_slack) + 1e-300; }
};
InequalityCheck holder_check(std::span<const double> phi, double dx);

/// ||phi||_inf^{q+2} <= ((q+2)/2)^2 ||phi||_2^2 int |phi|^{q-2} |phi_x|^2 dx,
/// with phi_x the centred difference.
InequalityCheck interpolation_check(std::span<const double> phi, double dx, double q = 2.0);

}  // namespace visclab
