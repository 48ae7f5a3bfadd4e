#pragma once

// Small seeded generators for property tests. Every case draws from its own
// stream so a failure can be replayed from the printed case index.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace visclab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  /// Magnitude log-uniform in [lo, hi], random sign.
  double signed_log(double lo, double hi) { return (unit() < 0.5 ? -1.0 : 1.0) * log_uniform(lo, hi); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(unit() * static_cast<double>(n)) % n; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[index(v.size())]; }

  std::vector<double> field(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  /// Sum of `k` Gaussians on a grid with spacing dx, zero at both ends.
  std::vector<double> smooth_field(std::size_t n, double dx, int k) {
    std::vector<double> v(n, 0.0);
    const double len = dx * static_cast<double>(n);
    for (int b = 0; b < k; ++b) {
      const double a = uniform(-2.0, 2.0);
      const double c = uniform(0.3, 0.7) * len;
      const double w = uniform(0.03, 0.1) * len;
      for (std::size_t j = 0; j < n; ++j) {
        const double x = (static_cast<double>(j) + 0.5) * dx - c;
        v[j] += a * std::exp(-x * x / (w * w));
      }
    }
    return v;
  }

 private:
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 rng_;
};

/// Runs `body(gen, case_index)` for `cases` independent seeds.
template <class F>
void for_all(std::size_t cases, std::uint64_t seed, F&& body) {
  for (std::size_t i = 0; i < cases; ++i) {
    Gen g(seed * 0x9E3779B97F4A7C15ull + i);
    body(g, i);
  }
}

}  // namespace visclab::testing
