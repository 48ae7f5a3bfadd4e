#include "visclab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace visclab {

GridSolution GridSolution::uniform(double x_left, double x_right, std::size_t n_cells) {
  if (!(x_left < x_right)) throw std::invalid_argument("grid needs x_left < x_right");
  if (n_cells < 3) throw std::invalid_argument("grid needs at least 3 cells");
  GridSolution g;
  g.x_left = x_left;
  g.x_right = x_right;
  g.n_cells = n_cells;
  g.dx = (x_right - x_left) / static_cast<double>(n_cells);
  g.values.assign(n_cells, 0.0);
  return g;
}

double GridSolution::interior_mass() const {
  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t j = 1; j + 1 < values.size(); ++j) {
    const double v = values[j];
    const double s = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return (sum + comp) * dx;
}

double Bump::operator()(double x) const {
  if (amplitude == 0.0) return 0.0;
  const double z = (x - center) / width;
  return amplitude * std::exp(-z * z);
}

InitialData InitialData::profile_plus_bump(WaveProfile profile, Bump bump) {
  InitialData d;
  d.kind = InitialKind::ProfilePlusBump;
  d.u_minus = profile.u_minus();
  d.u_plus = profile.u_plus();
  d.profile = std::move(profile);
  d.bump = bump;
  return d;
}

InitialData InitialData::mollified_riemann(double u_minus, double u_plus, double q, Bump bump) {
  if (!(q > 0.5)) throw std::domain_error("mollified Riemann data needs q > 1/2");
  InitialData d;
  d.kind = InitialKind::MollifiedRiemann;
  d.u_minus = u_minus;
  d.u_plus = u_plus;
  d.q = q;
  d.bump = bump;
  return d;
}

InitialData InitialData::constant_plus_bump(double value, Bump bump) {
  InitialData d;
  d.kind = InitialKind::ConstantPlusBump;
  d.constant = value;
  d.u_minus = d.u_plus = value;
  d.bump = bump;
  return d;
}

double InitialData::far_left() const { return u_minus; }
double InitialData::far_right() const { return u_plus; }

double InitialData::perturbation(double x) const {
  double v = bump(x);
  for (const auto& b : extra_bumps) v += b(x);
  return v;
}

}  // namespace visclab
