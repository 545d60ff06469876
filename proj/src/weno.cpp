#include "rhd/weno.hpp"

#include "rhd/detail/weno5_core.hpp"

namespace rhd {

double weno5_reconstruct(std::span<const double, 5> s, Side side) {
  if (side == Side::left) return detail::weno5_left(s[0], s[1], s[2], s[3], s[4]);
  return detail::weno5_left(s[4], s[3], s[2], s[1], s[0]);
}

template <int Dim>
StateVec<Dim> project_scaled(const ScaledEigenSystem<Dim>& sys, const StateVec<Dim>& V) {
  StateVec<Dim> w{};
  for (int k = 0; k < Dim + 2; ++k) {
    double acc = 0.0;
    for (int r = 0; r < Dim + 2; ++r) acc += sys.R[r][k] * V[r];
    w[k] = acc;
  }
  return w;
}

template <int Dim>
InterfaceJumps<Dim> scaled_variable_jumps(std::span<const StateVec<Dim>, 6> stencil_V,
                                          const ScaledEigenSystem<Dim>& sys) {
  std::array<StateVec<Dim>, 6> w;
  for (int j = 0; j < 6; ++j) w[j] = project_scaled(sys, stencil_V[j]);

  StateVec<Dim> dV;
  for (int r = 0; r < Dim + 2; ++r) dV[r] = stencil_V[3][r] - stencil_V[2][r];
  const StateVec<Dim> raw = project_scaled(sys, dV);

  InterfaceJumps<Dim> out;
  for (int k = 0; k < Dim + 2; ++k) {
    const double minus = detail::weno5_left(w[0][k], w[1][k], w[2][k], w[3][k], w[4][k]);
    const double plus = detail::weno5_left(w[5][k], w[4][k], w[3][k], w[2][k], w[1][k]);
    out.w_jump_reconstructed[k] = plus - minus;
    out.w_jump_raw[k] = raw[k];
    out.switch_on[k] = sign_switch(out.w_jump_reconstructed[k], out.w_jump_raw[k]);
  }
  return out;
}

template StateVec<1> project_scaled<1>(const ScaledEigenSystem<1>&, const StateVec<1>&);
template StateVec<2> project_scaled<2>(const ScaledEigenSystem<2>&, const StateVec<2>&);
template InterfaceJumps<1> scaled_variable_jumps<1>(std::span<const StateVec<1>, 6>,
                                                    const ScaledEigenSystem<1>&);
template InterfaceJumps<2> scaled_variable_jumps<2>(std::span<const StateVec<2>, 6>,
                                                    const ScaledEigenSystem<2>&);

}  // namespace rhd
