#include "visclab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "visclab/characteristic.hpp"
#include "visclab/errors.hpp"

namespace visclab {
namespace {

double base_initial(const InitialData& init, double t, double x) {
  switch (init.kind) {
    case InitialKind::ProfilePlusBump: return init.profile->value(t, x);
    case InitialKind::MollifiedRiemann: {
      const double mid = 0.5 * (init.u_minus + init.u_plus);
      return mid + 0.5 * (init.u_plus - init.u_minus) * kq_constant(init.q) * smoothing_integral(init.q, x);
    }
    case InitialKind::ConstantPlusBump: break;
  }
  return init.constant;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(t_end >= t_start) || !std::isfinite(t_end) || !std::isfinite(t_start))
    throw ConfigError("t_end must be finite and >= t_start");
  if (!(cfl_advection > 0.0 && cfl_advection <= 1.0)) throw ConfigError("cfl_advection must lie in (0, 1]");
  if (!(cfl_diffusion > 0.0 && cfl_diffusion <= 0.5)) throw ConfigError("cfl_diffusion must lie in (0, 0.5]");
  if (grid.cells < 5) throw ConfigError("grid needs at least 5 cells");
  if (!(grid.margin >= kMinimumMargin)) throw ConfigError("grid margin must be >= 20");
  if (initial.kind == InitialKind::ProfilePlusBump) {
    if (!initial.profile) throw ConfigError("profile initial data without a profile");
    const auto kind = initial.profile->kind();
    if (kind == ProfileKind::Rarefaction && !(t_start > 0.0))
      throw ConfigError("rarefaction profile initial data needs t_start > 0");
  }
  if ((initial.u_minus != initial.u_plus) && flux.is_convex() && !(initial.u_minus < initial.u_plus))
    throw ConfigError("convex-flux runs need u- <= u+");
  double prev = -std::numeric_limits<double>::infinity();
  for (double s : snapshot_times) {
    if (!(s > prev)) throw ConfigError("snapshot times must be strictly increasing");
    if (s < t_start || s > t_end) throw ConfigError("snapshot times must lie in [t_start, t_end]");
    prev = s;
  }
  if (dt_override && !(*dt_override > 0.0)) throw ConfigError("dt override must be positive");
}

std::pair<double, double> domain_for(const SolverConfig& config) {
  const double lm = config.flux.prime(config.initial.far_left());
  const double lp = config.flux.prime(config.initial.far_right());
  const double lo = std::min(0.0, lm * config.t_end) - config.grid.margin;
  const double hi = std::max(0.0, lp * config.t_end) + config.grid.margin;
  if (!config.grid.x_left && !config.grid.x_right) return {lo, hi};
  const double xl = config.grid.x_left.value_or(lo);
  const double xr = config.grid.x_right.value_or(hi);
  if (xl > lo || xr < hi)
    throw ConfigError("domain [" + std::to_string(xl) + ", " + std::to_string(xr) + "] does not cover [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "] needed up to t_end");
  return {xl, xr};
}

BoundaryPins::BoundaryPins(const SolverConfig& config)
    : left_(config.initial.far_left()), right_(config.initial.far_right()) {
  if (config.initial.kind == InitialKind::ProfilePlusBump) profile_ = config.initial.profile;
}

std::pair<double, double> BoundaryPins::at(double t, double x_first, double x_last) const {
  if (!profile_) return {left_, right_};
  return {profile_->value(t, x_first), profile_->value(t, x_last)};
}

GridSolution build_initial(const SolverConfig& config) {
  config.validate();
  const auto [xl, xr] = domain_for(config);
  GridSolution g = GridSolution::uniform(xl, xr, config.grid.cells);
  g.t = config.t_start;
  g.u_minus = config.initial.far_left();
  g.u_plus = config.initial.far_right();
  for (std::size_t j = 0; j < g.n_cells; ++j) {
    const double x = g.x(j);
    g.values[j] = base_initial(config.initial, config.t_start, x) + config.initial.perturbation(x);
  }
  const auto [left, right] = BoundaryPins(config).at(g.t, g.x(0), g.x(g.n_cells - 1));
  g.values.front() = left;
  g.values.back() = right;
  return g;
}

double stable_dt(const GridSolution& state, const SolverConfig& config, std::optional<double> next_stop) {
  const auto& u = state.values;
  double dt = std::numeric_limits<double>::infinity();
  if (config.flux.is_convex()) {
    double speed = 0.0;
    for (double v : u) speed = std::max(speed, std::abs(config.flux.prime(v)));
    if (speed > 0.0) dt = config.cfl_advection * state.dx / speed;
  }
  double grad = 0.0;
  for (std::size_t j = 0; j + 1 < u.size(); ++j) grad = std::max(grad, std::abs(u[j + 1] - u[j]));
  grad /= state.dx;
  const double slope = config.law.max_slope(grad);
  dt = std::min(dt, config.cfl_diffusion * state.dx * state.dx / slope);
  if (next_stop) dt = std::min(dt, *next_stop - state.t);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::logic_error("stable_dt: nonpositive time step");
  return dt;
}

Stepper::Stepper(const SolverConfig& config) : config_(&config), pins_(config) {}

double Stepper::rhs(std::span<const double> u, std::span<double> dudt, double dx) {
  const std::size_t n = u.size();
  fluxes_.resize(n - 1);
  kernels::FluxKernelSpec spec{&config_->flux, &config_->law, 1.0 / dx, config_->reconstruction};
  isa_ = kernels::interface_fluxes(u, fluxes_, spec);
  const double inv_dx = 1.0 / dx;
  dudt[0] = 0.0;
  dudt[n - 1] = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) dudt[j] = -(fluxes_[j] - fluxes_[j - 1]) * inv_dx;
  return fluxes_.front() - fluxes_.back();
}

double Stepper::advance(GridSolution& state, double dt) {
  auto& u = state.values;
  const std::size_t n = u.size();
  k1_.resize(n);
  k2_.resize(n);
  stage_.resize(n);
  const double t_next = state.t + dt;
  const auto [left, right] = pins_.at(t_next, state.x(0), state.x(n - 1));

  const double b1 = rhs(u, k1_, state.dx);
  for (std::size_t j = 1; j + 1 < n; ++j) stage_[j] = u[j] + dt * k1_[j];
  stage_.front() = left;
  stage_.back() = right;

  const double b2 = rhs(stage_, k2_, state.dx);
  for (std::size_t j = 1; j + 1 < n; ++j) u[j] = 0.5 * u[j] + 0.5 * (stage_[j] + dt * k2_[j]);
  u.front() = left;
  u.back() = right;
  state.t = t_next;
  return 0.5 * dt * (b1 + b2);
}

GridSolution step(const GridSolution& state, double dt, const SolverConfig& config) {
  Stepper stepper(config);
  GridSolution next = state;
  stepper.advance(next, dt);
  for (double v : next.values)
    if (!std::isfinite(v)) throw BlowupError(next.t);
  return next;
}

std::vector<double> effective_snapshot_times(const SolverConfig& config) {
  if (!config.snapshot_times.empty()) return config.snapshot_times;
  return {config.t_end};
}

SolveResult solve(const SolverConfig& config, const std::function<void(const GridSolution&)>& on_snapshot) {
  GridSolution state = build_initial(config);
  const std::vector<double> times = effective_snapshot_times(config);

  SolveResult out;
  RunStats& st = out.stats;
  const auto [init_lo, init_hi] = std::minmax_element(state.values.begin(), state.values.end());
  st.lower_bound = std::min({*init_lo, state.u_minus, state.u_plus});
  st.upper_bound = std::max({*init_hi, state.u_minus, state.u_plus});
  st.mass_initial = state.interior_mass();

  Stepper stepper(config);
  BoundaryPins pins(config);
  const std::size_t n = state.n_cells;
  double flux_sum = 0.0;
  double flux_comp = 0.0;

  auto record = [&] {
    const auto [left, right] = pins.at(state.t, state.x(0), state.x(n - 1));
    st.far_field_gap =
        std::max({st.far_field_gap, std::abs(state.values[1] - left), std::abs(state.values[n - 2] - right)});
    out.snapshots.push_back(state);
    if (on_snapshot) on_snapshot(out.snapshots.back());
  };

  std::size_t next = 0;
  while (next < times.size()) {
    const double stop = times[next];
    if (state.t >= stop) {
      record();
      ++next;
      continue;
    }
    double dt = config.dt_override ? std::min(*config.dt_override, stop - state.t)
                                   : stable_dt(state, config, stop);
    const bool lands = dt >= stop - state.t;
    const double db = stepper.advance(state, dt);
    if (lands) state.t = stop;
    ++st.steps;

    // Kahan-accumulated boundary flux integral
    const double y = db - flux_comp;
    const double s = flux_sum + y;
    flux_comp = (s - flux_sum) - y;
    flux_sum = s;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    bool finite = true;
    for (double v : state.values) {
      finite &= std::isfinite(v);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!finite) throw BlowupError(state.t);
    st.max_overshoot = std::max({st.max_overshoot, st.lower_bound - lo, hi - st.upper_bound});
  }

  st.isa = stepper.last_isa();
  st.boundary_flux_integral = flux_sum;
  st.mass_final = state.interior_mass();
  st.conservation_error = std::abs((st.mass_final - st.mass_initial) - st.boundary_flux_integral);
  return out;
}

}  // namespace visclab
