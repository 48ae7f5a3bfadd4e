#pragma once

#include <span>
#include <string_view>

#include "visclab/flux_laws.hpp"

// Interface-flux kernels for the finite-volume step.
//
// The scalar kernel is the reference for every flux/viscosity combination.
// The AVX2 kernel covers the built-in Zero and Burgers fluxes with viscosity
// laws whose power can be formed from square roots (exponent a multiple of
// 1/4); anything else dispatches to the scalar kernel.

namespace visclab::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

enum class Reconstruction { PiecewiseConstant, Minmod };

struct FluxKernelSpec {
  const ConvexFlux* flux = nullptr;
  const ViscosityLaw* law = nullptr;
  double inv_dx = 1.0;
  Reconstruction reconstruction = Reconstruction::Minmod;
};

/// F[j] = godunov(uL, uR) - sigma((u[j+1] - u[j]) / dx) at interface j + 1/2,
/// j = 0 .. n-2. With Minmod, uL/uR are the limited linear reconstructions
/// (zero slope in the first and last cell).
void interface_fluxes_scalar(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec);

bool avx2_compiled() noexcept;
bool avx2_supported(const FluxKernelSpec& spec) noexcept;
void interface_fluxes_avx2(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec);

/// Best ISA on this CPU, honouring force_scalar() and VISCLAB_FORCE_SCALAR=1.
Isa active_isa() noexcept;
void force_scalar(bool on) noexcept;

/// Runtime-dispatched kernel; returns the ISA that actually ran.
Isa interface_fluxes(std::span<const double> u, std::span<double> F, const FluxKernelSpec& spec);

namespace detail {
// Exponent e = k/4 -> k, if e is a quarter-integer in [-8, 8].
bool quarter_power(double e, int& k) noexcept;
}  // namespace detail

}  // namespace visclab::kernels
