#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "visclab/flux_laws.hpp"
#include "visclab/grid.hpp"
#include "visclab/kernels.hpp"

namespace visclab {

/// Minimum buffer between the inviscid fan and the domain ends.
inline constexpr double kMinimumMargin = 20.0;

struct GridSpec {
  std::size_t cells = 8192;
  double margin = 200.0;
  /// Explicit ends override the margin-derived domain; they must still cover it.
  std::optional<double> x_left;
  std::optional<double> x_right;
};

struct SolverConfig {
  ConvexFlux flux = ConvexFlux::burgers();
  ViscosityLaw law = ViscosityLaw::regularized_power(0.5, 1.0);
  InitialData initial;
  GridSpec grid;
  double t_start = 0.0;
  double t_end = 0.0;
  double cfl_advection = 0.25;
  double cfl_diffusion = 0.3;
  std::vector<double> snapshot_times;
  kernels::Reconstruction reconstruction = kernels::Reconstruction::Minmod;
  /// Fixed step that bypasses the stability bound (used to exercise blowup handling).
  std::optional<double> dt_override;

  /// Throws ConfigError on inconsistent settings.
  void validate() const;
};

/// [min(0, f'(u-) T) - margin, max(0, f'(u+) T) + margin] or the explicit ends.
std::pair<double, double> domain_for(const SolverConfig& config);

/// Cell-centred sampling of the initial datum; boundary cells carry the far field.
GridSolution build_initial(const SolverConfig& config);

/// min(cfl_a dx / max|f'(u_j)|, cfl_d dx^2 / max sigma'(du_j/dx)), optionally
/// shortened to land on `next_stop`.
double stable_dt(const GridSolution& state, const SolverConfig& config,
                 std::optional<double> next_stop = std::nullopt);

/// Far-field value imposed on the first and last cell at time t: the
/// reference profile for ProfilePlusBump data, u-/u+ otherwise.
class BoundaryPins {
 public:
  explicit BoundaryPins(const SolverConfig& config);
  std::pair<double, double> at(double t, double x_first, double x_last) const;

 private:
  std::optional<WaveProfile> profile_;
  double left_;
  double right_;
};

/// SSP-RK2 time stepper over the conservative semi-discretisation
///   du_j/dt = -(F_{j+1/2} - F_{j-1/2}) / dx,
///   F_{j+1/2} = godunov(u_L, u_R) - sigma((u_{j+1} - u_j) / dx).
/// Reuses scratch buffers between steps.
class Stepper {
 public:
  explicit Stepper(const SolverConfig& config);

  /// Advances `state` by dt and returns the boundary flux integral for the
  /// step, dt * (F_in - F_out) averaged over the two stages.
  double advance(GridSolution& state, double dt);

  /// Semi-discrete right-hand side; returns F_in - F_out.
  double rhs(std::span<const double> u, std::span<double> dudt, double dx);

  kernels::Isa last_isa() const noexcept { return isa_; }

 private:
  const SolverConfig* config_;
  BoundaryPins pins_;
  std::vector<double> fluxes_;
  std::vector<double> k1_;
  std::vector<double> k2_;
  std::vector<double> stage_;
  kernels::Isa isa_ = kernels::Isa::Scalar;
};

/// One SSP-RK2 step of `state`. Throws BlowupError on non-finite values.
GridSolution step(const GridSolution& state, double dt, const SolverConfig& config);

struct RunStats {
  std::size_t steps = 0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double boundary_flux_integral = 0.0;
  /// |mass drift - boundary flux integral|.
  double conservation_error = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  /// Largest excursion outside [lower_bound, upper_bound] seen at any step.
  double max_overshoot = 0.0;
  /// Largest |u - pinned value| in the cells adjacent to the boundaries.
  double far_field_gap = 0.0;
  kernels::Isa isa = kernels::Isa::Scalar;
};

struct SolveResult {
  std::vector<GridSolution> snapshots;
  RunStats stats;
};

/// Snapshot times actually used: the configured list, or {t_end} when empty.
std::vector<double> effective_snapshot_times(const SolverConfig& config);

/// Runs from t_start to t_end and records the grid at every snapshot time.
/// `on_snapshot` (optional) sees each snapshot as it is produced.
SolveResult solve(const SolverConfig& config,
                  const std::function<void(const GridSolution&)>& on_snapshot = nullptr);

}  // namespace visclab
