#pragma once

// Fifth-order WENO reconstruction of the scaled entropy variables w = RᵀV and
// the sign-property switch that gates the dissipation per component.

#include <array>
#include <span>

#include "rhd/eigen.hpp"
#include "rhd/state.hpp"

namespace rhd {

enum class Side {
  left,   // w⁻ at x_{i+1/2} from cells i-2..i+2
  right,  // w⁺ at x_{i+1/2} from cells i-1..i+3
};

/// `stencil` is given in increasing cell order for both sides.
double weno5_reconstruct(std::span<const double, 5> stencil, Side side);

template <int Dim>
struct InterfaceJumps {
  StateVec<Dim> w_jump_reconstructed{};  // w⁺ - w⁻
  StateVec<Dim> w_jump_raw{};            // Rᵀ(V_{i+1} - V_i)
  StateVec<Dim> switch_on{};             // 0 or 1 per component
};

/// 1 iff both jumps have the same strict sign.
inline double sign_switch(double reconstructed, double raw) {
  return (reconstructed > 0.0 && raw > 0.0) || (reconstructed < 0.0 && raw < 0.0) ? 1.0 : 0.0;
}

/// w_k = RᵀV_k for k = 0..Dim+1.
template <int Dim>
StateVec<Dim> project_scaled(const ScaledEigenSystem<Dim>& sys, const StateVec<Dim>& V);

/// `stencil_V` holds V at cells i-2..i+3 for interface i+1/2.
template <int Dim>
InterfaceJumps<Dim> scaled_variable_jumps(std::span<const StateVec<Dim>, 6> stencil_V,
                                          const ScaledEigenSystem<Dim>& sys);

}  // namespace rhd
