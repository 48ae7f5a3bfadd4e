// AVX2 interface-flux kernel. Compiled with -mavx2 only; callers reach it
// through the runtime dispatcher, which checks the CPU first.

#include <immintrin.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "visclab/kernels.hpp"

namespace visclab::kernels {
namespace {

enum class ViscousMode { Linear, Regularized, Ostwald };

struct ViscousParams {
  ViscousMode mode;
  double mu;
  int k;  // power exponent in quarters
};

inline double pow_quarter(double base, int k) {
  const int m = std::abs(k);
  double r = 1.0;
  for (int i = 0; i < m / 4; ++i) r *= base;
  const int rem = m % 4;
  if (rem) {
    const double half = std::sqrt(base);
    if (rem & 2) r *= half;
    if (rem & 1) r *= std::sqrt(half);
  }
  return k < 0 ? 1.0 / r : r;
}

inline __m256d pow_quarter(__m256d base, int k) {
  const int m = std::abs(k);
  __m256d r = _mm256_set1_pd(1.0);
  for (int i = 0; i < m / 4; ++i) r = _mm256_mul_pd(r, base);
  const int rem = m % 4;
  if (rem) {
    const __m256d half = _mm256_sqrt_pd(base);
    if (rem & 2) r = _mm256_mul_pd(r, half);
    if (rem & 1) r = _mm256_mul_pd(r, _mm256_sqrt_pd(half));
  }
  return k < 0 ? _mm256_div_pd(_mm256_set1_pd(1.0), r) : r;
}

inline double viscous(double v, const ViscousParams& p) {
  switch (p.mode) {
    case ViscousMode::Linear: return p.mu * v;
    case ViscousMode::Regularized: return p.mu * pow_quarter(1.0 + v * v, p.k) * v;
    case ViscousMode::Ostwald: break;
  }
  return p.mu * pow_quarter(std::abs(v), p.k) * v;
}

inline __m256d viscous(__m256d v, const ViscousParams& p) {
  const __m256d mu = _mm256_set1_pd(p.mu);
  switch (p.mode) {
    case ViscousMode::Linear: return _mm256_mul_pd(mu, v);
    case ViscousMode::Regularized: {
      const __m256d base = _mm256_add_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(v, v));
      return _mm256_mul_pd(_mm256_mul_pd(mu, pow_quarter(base, p.k)), v);
    }
    case ViscousMode::Ostwald: break;
  }
  const __m256d abs_v = _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
  return _mm256_mul_pd(_mm256_mul_pd(mu, pow_quarter(abs_v, p.k)), v);
}

inline double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

inline __m256d minmod(__m256d a, __m256d b) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d same_sign = _mm256_cmp_pd(_mm256_mul_pd(a, b), _mm256_setzero_pd(), _CMP_GT_OQ);
  const __m256d a_smaller =
      _mm256_cmp_pd(_mm256_andnot_pd(sign_mask, a), _mm256_andnot_pd(sign_mask, b), _CMP_LT_OQ);
  const __m256d pick = _mm256_blendv_pd(b, a, a_smaller);
  return _mm256_and_pd(pick, same_sign);
}

inline double burgers(double ul, double ur) {
  const double fl = 0.5 * ul * ul;
  const double fr = 0.5 * ur * ur;
  if (ul <= ur) {
    if (ul > 0.0) return fl;
    if (ur < 0.0) return fr;
    return 0.0;
  }
  return fl > fr ? fl : fr;
}

inline __m256d burgers(__m256d ul, __m256d ur) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d fl = _mm256_mul_pd(half, _mm256_mul_pd(ul, ul));
  const __m256d fr = _mm256_mul_pd(half, _mm256_mul_pd(ur, ur));
  // expansion: min of f over [ul, ur]
  const __m256d right_part = _mm256_blendv_pd(zero, fr, _mm256_cmp_pd(ur, zero, _CMP_LT_OQ));
  const __m256d expansion = _mm256_blendv_pd(right_part, fl, _mm256_cmp_pd(ul, zero, _CMP_GT_OQ));
  // compression: max of the end values
  const __m256d compression = _mm256_blendv_pd(fr, fl, _mm256_cmp_pd(fl, fr, _CMP_GT_OQ));
  return _mm256_blendv_pd(compression, expansion, _mm256_cmp_pd(ul, ur, _CMP_LE_OQ));
}

template <bool IsBurgers>
void run(std::span<const double> u, std::span<double> F, double inv_dx, Reconstruction rec,
         const ViscousParams& vp) {
  const std::size_t n = u.size();
  const double* p = u.data();
  const __m256d vinv_dx = _mm256_set1_pd(inv_dx);
  const __m256d vhalf = _mm256_set1_pd(0.5);

  auto scalar_at = [&](std::size_t j, double s_here, double s_next) {
    double adv = 0.0;
    if constexpr (IsBurgers) adv = burgers(p[j] + 0.5 * s_here, p[j + 1] - 0.5 * s_next);
    F[j] = adv - viscous((p[j + 1] - p[j]) * inv_dx, vp);
  };

  if (rec == Reconstruction::PiecewiseConstant) {
    std::size_t j = 0;
    for (; j + 4 <= n - 1; j += 4) {
      const __m256d u0 = _mm256_loadu_pd(p + j);
      const __m256d u1 = _mm256_loadu_pd(p + j + 1);
      __m256d f = _mm256_setzero_pd();
      if constexpr (IsBurgers) f = burgers(u0, u1);
      const __m256d visc = viscous(_mm256_mul_pd(_mm256_sub_pd(u1, u0), vinv_dx), vp);
      _mm256_storeu_pd(F.data() + j, _mm256_sub_pd(f, visc));
    }
    for (; j + 1 < n; ++j) scalar_at(j, 0.0, 0.0);
    return;
  }

  auto slope = [&](std::size_t j) {
    if (j == 0 || j + 1 >= n) return 0.0;
    return minmod(p[j] - p[j - 1], p[j + 1] - p[j]);
  };

  // interface 0 touches the first (zero-slope) cell
  scalar_at(0, 0.0, slope(1));
  std::size_t j = 1;
  // vector lanes need cells j-1 .. j+5 and interior slopes at j .. j+4
  for (; n >= 6 && j + 3 <= n - 3; j += 4) {
    const __m256d um = _mm256_loadu_pd(p + j - 1);
    const __m256d u0 = _mm256_loadu_pd(p + j);
    const __m256d u1 = _mm256_loadu_pd(p + j + 1);
    const __m256d u2 = _mm256_loadu_pd(p + j + 2);
    const __m256d d_left = _mm256_sub_pd(u0, um);
    const __m256d d_mid = _mm256_sub_pd(u1, u0);
    const __m256d d_right = _mm256_sub_pd(u2, u1);
    const __m256d s_here = minmod(d_left, d_mid);
    const __m256d s_next = minmod(d_mid, d_right);
    __m256d f = _mm256_setzero_pd();
    if constexpr (IsBurgers) {
      const __m256d ul = _mm256_add_pd(u0, _mm256_mul_pd(vhalf, s_here));
      const __m256d ur = _mm256_sub_pd(u1, _mm256_mul_pd(vhalf, s_next));
      f = burgers(ul, ur);
    }
    const __m256d visc = viscous(_mm256_mul_pd(d_mid, vinv_dx), vp);
    _mm256_storeu_pd(F.data() + j, _mm256_sub_pd(f, visc));
  }
  for (; j + 1 < n; ++j) scalar_at(j, slope(j), slope(j + 1));
}

}  // namespace

bool avx2_compiled() noexcept { return true; }

bool avx2_supported(const FluxKernelSpec& spec) noexcept {
  if (!spec.flux || !spec.law) return false;
  const auto fk = spec.flux->kind();
  if (fk != FluxKind::Zero && fk != FluxKind::Burgers) return false;
  int k = 0;
  switch (spec.law->kind()) {
    case ViscosityKind::Linear: return true;
    case ViscosityKind::RegularizedPower: return detail::quarter_power(0.5 * (spec.law->p() - 1.0), k);
    case ViscosityKind::OstwaldDeWaele: return detail::quarter_power(spec.law->p() - 1.0, k) && k >= 0;
  }
  return false;
}

void interface_fluxes_avx2(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec) {
  if (u.size() < 2 || F.size() + 1 != u.size())
    throw std::invalid_argument("interface_fluxes: need n >= 2 cells and n-1 interfaces");
  if (!avx2_supported(spec)) throw std::invalid_argument("AVX2 kernel does not cover this flux/law");
  ViscousParams vp{ViscousMode::Linear, spec.law->mu(), 0};
  switch (spec.law->kind()) {
    case ViscosityKind::Linear: break;
    case ViscosityKind::RegularizedPower:
      vp.mode = ViscousMode::Regularized;
      detail::quarter_power(0.5 * (spec.law->p() - 1.0), vp.k);
      break;
    case ViscosityKind::OstwaldDeWaele:
      vp.mode = ViscousMode::Ostwald;
      detail::quarter_power(spec.law->p() - 1.0, vp.k);
      break;
  }
  if (spec.flux->kind() == FluxKind::Burgers)
    run<true>(u, F, spec.inv_dx, spec.reconstruction, vp);
  else
    run<false>(u, F, spec.inv_dx, spec.reconstruction, vp);
}

}  // namespace visclab::kernels
