#pragma once

// Scaled right-eigenvector matrices R with ∂F/∂U = R Λ R⁻¹ and ∂U/∂V = R Rᵀ,
// interface-averaged states, and the Roe / Lax-Friedrichs |Λ| choices.

#include <array>

#include "rhd/ecflux.hpp"
#include "rhd/means.hpp"
#include "rhd/state.hpp"

namespace rhd {

template <int N>
using Matrix = std::array<std::array<double, N>, N>;

template <int Dim>
struct ScaledEigenSystem {
  Matrix<Dim + 2> R{};
  StateVec<Dim> lambdas{};
  Axis dir = Axis::x;
};

enum class DissipationKind { roe, lax_friedrichs };

/// ρ̄ = ⟨ρ⟩_ln, ū = ⟨u⟩ (componentwise), p̄ = ⟨ρ⟩_ln / ⟨ρ/p⟩_ln.
template <int Dim>
PrimState<Dim> interface_average(const StatePair<Dim>& pair);

template <int Dim>
PrimState<Dim> interface_average(const FluxPoint<Dim>& L, const FluxPoint<Dim>& R);

ScaledEigenSystem<1> scaled_eigensystem_1d(const PrimState<1>& avg, const EosParams& eos);

ScaledEigenSystem<2> scaled_eigensystem_2d(const PrimState<2>& avg, const EosParams& eos,
                                           Axis dir);

template <int Dim>
ScaledEigenSystem<Dim> scaled_eigensystem(const PrimState<Dim>& avg, const EosParams& eos,
                                          Axis dir) {
  if constexpr (Dim == 1) {
    return scaled_eigensystem_1d(avg, eos);
  } else {
    return scaled_eigensystem_2d(avg, eos, dir);
  }
}

/// Diagonal of |Λ|: |λ_k| per mode (Roe) or max_k |λ_k| everywhere (LF).
template <int Dim>
StateVec<Dim> dissipation_diagonal(const ScaledEigenSystem<Dim>& sys, DissipationKind kind);

}  // namespace rhd
