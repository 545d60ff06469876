#include "rhd/ecflux.hpp"

#include <cmath>

namespace rhd {

template <int Dim>
FluxPoint<Dim> make_flux_point(const PrimState<Dim>& w) {
  FluxPoint<Dim> f;
  f.rho = w.rho;
  f.p = w.p;
  f.vel = w.vel;
  f.s = std::sqrt(1.0 - speed_squared(w));
  f.W = 1.0 / f.s;
  for (int l = 0; l < Dim; ++l) f.velW[l] = w.vel[l] * f.W;
  f.beta = w.rho / w.p;
  f.log_rho = std::log(w.rho);
  f.log_beta = std::log(f.beta);
  return f;
}

template <int Dim>
double ec_denominator(const FluxPoint<Dim>& L, const FluxPoint<Dim>& R) {
  const double z2 = mean(L.beta, R.beta);
  const double Wm = mean(L.W, R.W);
  double Q = z2 * Wm * Wm;
  for (int l = 0; l < Dim; ++l) {
    const double lm = lorentz_mean(L.vel[l], R.vel[l], L.s, R.s);
    Q += z2 * (mean(L.vel[l], R.vel[l]) * Wm * lm - mean(L.velW[l], R.velW[l]) * lm);
  }
  return Q;
}

StateVec<1> ec_flux_1d(const FluxPoint<1>& L, const FluxPoint<1>& R, const EosParams& eos) {
  const double z1 = mean(L.rho, R.rho);
  const double z2 = mean(L.beta, R.beta);
  const double z3 = mean(L.vel[0], R.vel[0]);
  const double z1_ln = ln_mean(L.rho, R.rho, L.log_rho, R.log_rho);
  const double z2_ln = ln_mean(L.beta, R.beta, L.log_beta, R.log_beta);
  const double Wm = mean(L.W, R.W);
  const double uW = mean(L.velW[0], R.velW[0]);
  const double lm = lorentz_mean(L.vel[0], R.vel[0], L.s, R.s);
  const double alpha = 1.0 + 1.0 / ((eos.gamma() - 1.0) * z2_ln);

  const double Q = z2 * Wm * Wm + z2 * z3 * Wm * lm - z2 * uW * lm;
  const double F1 = z1_ln * uW;
  const double F2 = (alpha * z2 * lm * F1 + z1 * Wm * Wm + z1 * z3 * Wm * lm) / Q;
  const double F3 = (z1 * Wm * uW + z1 * z3 * uW * lm + alpha * F1 * (z2 * Wm + z2 * z3 * lm)) / Q;
  return {F1, F2, F3};
}

StateVec<1> ec_flux_1d(const StatePair<1>& pair, const EosParams& eos) {
  return ec_flux_1d(make_flux_point(pair.left), make_flux_point(pair.right), eos);
}

StateVec<2> ec_flux_2d(const FluxPoint<2>& L, const FluxPoint<2>& R, const EosParams& eos,
                       Axis dir) {
  const double z1 = mean(L.rho, R.rho);
  const double z2 = mean(L.beta, R.beta);
  const double z3 = mean(L.vel[0], R.vel[0]);
  const double z4 = mean(L.vel[1], R.vel[1]);
  const double z1_ln = ln_mean(L.rho, R.rho, L.log_rho, R.log_rho);
  const double z2_ln = ln_mean(L.beta, R.beta, L.log_beta, R.log_beta);
  const double Wm = mean(L.W, R.W);
  const double uW = mean(L.velW[0], R.velW[0]);
  const double vW = mean(L.velW[1], R.velW[1]);
  const double lx = lorentz_mean(L.vel[0], R.vel[0], L.s, R.s);
  const double ly = lorentz_mean(L.vel[1], R.vel[1], L.s, R.s);
  const double alpha = 1.0 + 1.0 / ((eos.gamma() - 1.0) * z2_ln);

  const double Q = z2 * Wm * Wm + z2 * (z3 * Wm * lx - uW * lx + z4 * Wm * ly - vW * ly);
  const double shared = z1 * Wm * (z3 * lx + z4 * ly);

  double F1, F2, F3;
  if (dir == Axis::x) {
    F1 = z1_ln * uW;
    F2 = (alpha * z2 * lx * F1 + z1 * (Wm * Wm - vW * ly) + shared) / Q;
    F3 = (alpha * z2 * ly * F1 + z1 * uW * ly) / Q;
  } else {
    F1 = z1_ln * vW;
    F2 = (alpha * z2 * lx * F1 + z1 * vW * lx) / Q;
    F3 = (alpha * z2 * ly * F1 + z1 * (Wm * Wm - uW * lx) + shared) / Q;
  }
  const double F4 = (alpha * F1 + uW * F2 + vW * F3) / Wm;
  return {F1, F2, F3, F4};
}

StateVec<2> ec_flux_2d(const StatePair<2>& pair, const EosParams& eos, Axis dir) {
  return ec_flux_2d(make_flux_point(pair.left), make_flux_point(pair.right), eos, dir);
}

template <int Dim>
StateVec<Dim> ec_flux_high_order(std::span<const PrimState<Dim>, 6> stencil,
                                 const EosParams& eos, Axis dir) {
  std::array<FluxPoint<Dim>, 6> fp;
  for (int k = 0; k < 6; ++k) fp[k] = make_flux_point(stencil[k]);
  // stencil index 2 is cell i
  auto F = [&](int a, int b) { return ec_flux<Dim>(fp[a], fp[b], eos, dir); };
  return combine_ec6<Dim>(F(2, 3), F(1, 3), F(2, 4), F(0, 3), F(1, 4), F(2, 5));
}

template FluxPoint<1> make_flux_point<1>(const PrimState<1>&);
template FluxPoint<2> make_flux_point<2>(const PrimState<2>&);
template double ec_denominator<1>(const FluxPoint<1>&, const FluxPoint<1>&);
template double ec_denominator<2>(const FluxPoint<2>&, const FluxPoint<2>&);
template StateVec<1> ec_flux_high_order<1>(std::span<const PrimState<1>, 6>, const EosParams&,
                                           Axis);
template StateVec<2> ec_flux_high_order<2>(std::span<const PrimState<2>, 6>, const EosParams&,
                                           Axis);

}  // namespace rhd
