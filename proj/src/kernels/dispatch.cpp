#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "visclab/kernels.hpp"

namespace visclab::kernels {
namespace {

std::atomic<bool> g_force_scalar{false};

bool env_forces_scalar() {
  const char* v = std::getenv("VISCLAB_FORCE_SCALAR");
  return v && std::strcmp(v, "0") != 0 && *v != '\0';
}

bool cpu_has_avx2() noexcept {
#if defined(VISCLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

}  // namespace

#if !defined(VISCLAB_HAVE_AVX2)
bool avx2_compiled() noexcept { return false; }
bool avx2_supported(const FluxKernelSpec&) noexcept { return false; }
void interface_fluxes_avx2(std::span<const double>, std::span<double>, const FluxKernelSpec&) {
  throw std::logic_error("AVX2 kernels were not compiled into this build");
}
#endif

void force_scalar(bool on) noexcept { g_force_scalar.store(on, std::memory_order_relaxed); }

Isa active_isa() noexcept {
  if (g_force_scalar.load(std::memory_order_relaxed)) return Isa::Scalar;
  static const bool env = env_forces_scalar();
  if (env) return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

Isa interface_fluxes(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec) {
  if (active_isa() == Isa::Avx2 && avx2_supported(spec)) {
    interface_fluxes_avx2(u, F, spec);
    return Isa::Avx2;
  }
  interface_fluxes_scalar(u, F, spec);
  return Isa::Scalar;
}

}  // namespace visclab::kernels
