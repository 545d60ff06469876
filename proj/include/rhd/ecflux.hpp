#pragma once

// Two-point entropy conservative fluxes and their sixth-order combination.
//
// The two-point flux F̃(L, R) satisfies [[V]]ᵀ F̃ = [[ψ]] for the entropy pair
// η = -ρWS/(Γ-1), built from the parameter vector z = (ρ, ρ/p, u[, v]).

#include <array>
#include <span>

#include "rhd/means.hpp"
#include "rhd/state.hpp"

namespace rhd {

enum class EcOrder { second, sixth };

/// Per-cell quantities every two-point flux evaluation needs; computing them
/// once per cell keeps logarithms and square roots out of the pair loop.
template <int Dim>
struct FluxPoint {
  double rho = 1.0;
  double p = 1.0;
  std::array<double, Dim> vel{};
  double s = 1.0;  // sqrt(1 - |u|^2) = 1/W
  double W = 1.0;
  std::array<double, Dim> velW{};
  double beta = 1.0;  // ρ/p
  double log_rho = 0.0;
  double log_beta = 0.0;
};

template <int Dim>
FluxPoint<Dim> make_flux_point(const PrimState<Dim>& w);

/// Denominator Q of the closed-form flux; equals ⟨ρ/p⟩ W_L W_R > 0.
template <int Dim>
double ec_denominator(const FluxPoint<Dim>& L, const FluxPoint<Dim>& R);

StateVec<1> ec_flux_1d(const FluxPoint<1>& L, const FluxPoint<1>& R, const EosParams& eos);
StateVec<1> ec_flux_1d(const StatePair<1>& pair, const EosParams& eos);

StateVec<2> ec_flux_2d(const FluxPoint<2>& L, const FluxPoint<2>& R, const EosParams& eos,
                       Axis dir);
StateVec<2> ec_flux_2d(const StatePair<2>& pair, const EosParams& eos, Axis dir);

template <int Dim>
StateVec<Dim> ec_flux(const FluxPoint<Dim>& L, const FluxPoint<Dim>& R, const EosParams& eos,
                      Axis dir) {
  if constexpr (Dim == 1) {
    return ec_flux_1d(L, R, eos);
  } else {
    return ec_flux_2d(L, R, eos, dir);
  }
}

inline constexpr std::array<double, 3> kEc6Coefficients = {3.0 / 2.0, -3.0 / 10.0, 1.0 / 30.0};

/// Sixth-order combination from the two-point fluxes of a stencil i-2..i+3:
///   3/2 F(i,i+1) - 3/10 (F(i-1,i+1) + F(i,i+2))
///   + 1/30 (F(i-2,i+1) + F(i-1,i+2) + F(i,i+3)).
template <int Dim>
StateVec<Dim> combine_ec6(const StateVec<Dim>& f_i_ip1, const StateVec<Dim>& f_im1_ip1,
                          const StateVec<Dim>& f_i_ip2, const StateVec<Dim>& f_im2_ip1,
                          const StateVec<Dim>& f_im1_ip2, const StateVec<Dim>& f_i_ip3) {
  const auto [a1, a2, a3] = kEc6Coefficients;
  StateVec<Dim> out;
  for (int k = 0; k < Dim + 2; ++k) {
    out[k] = a1 * f_i_ip1[k] + a2 * (f_im1_ip1[k] + f_i_ip2[k]) +
             a3 * (f_im2_ip1[k] + f_im1_ip2[k] + f_i_ip3[k]);
  }
  return out;
}

/// Sixth-order entropy conservative flux at the interface between
/// stencil[2] and stencil[3] (cells i-2..i+3).
template <int Dim>
StateVec<Dim> ec_flux_high_order(std::span<const PrimState<Dim>, 6> stencil,
                                 const EosParams& eos, Axis dir);

}  // namespace rhd
