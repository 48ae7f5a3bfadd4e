#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "visclab/wave_profiles.hpp"

namespace visclab {

/// Uniform cell-centred grid on [x_left, x_right] holding one state per cell.
struct GridSolution {
  double x_left = 0.0;
  double x_right = 1.0;
  std::size_t n_cells = 0;
  double dx = 1.0;
  std::vector<double> values;
  double t = 0.0;
  double u_minus = 0.0;
  double u_plus = 0.0;

  static GridSolution uniform(double x_left, double x_right, std::size_t n_cells);

  double x(std::size_t j) const noexcept { return x_left + (static_cast<double>(j) + 0.5) * dx; }
  /// Interior mass sum_j u_j dx over cells 1 .. n-2 (compensated summation).
  double interior_mass() const;
};

/// Gaussian perturbation a * exp(-(x - x_c)^2 / s^2).
struct Bump {
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;

  double operator()(double x) const;
};

enum class InitialKind { ProfilePlusBump, MollifiedRiemann, ConstantPlusBump };

struct InitialData {
  InitialKind kind = InitialKind::ConstantPlusBump;
  /// ProfilePlusBump: reference profile sampled at the start time.
  std::optional<WaveProfile> profile;
  /// MollifiedRiemann: (u- + u+)/2 + (u+ - u-)/2 K_q int_0^x (1+y^2)^{-q} dy.
  double u_minus = 0.0;
  double u_plus = 0.0;
  double q = 1.0;
  /// ConstantPlusBump: far-field state.
  double constant = 0.0;
  Bump bump;
  /// Optional extra perturbations added on top of `bump`.
  std::vector<Bump> extra_bumps;

  static InitialData profile_plus_bump(WaveProfile profile, Bump bump = {});
  static InitialData mollified_riemann(double u_minus, double u_plus, double q, Bump bump = {});
  static InitialData constant_plus_bump(double value, Bump bump = {});

  double far_left() const;
  double far_right() const;
  /// Sum of all perturbations at x.
  double perturbation(double x) const;
};

}  // namespace visclab
