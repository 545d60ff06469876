#include "rhd/eigen.hpp"

#include <algorithm>
#include <cmath>

namespace rhd {

template <int Dim>
PrimState<Dim> interface_average(const FluxPoint<Dim>& L, const FluxPoint<Dim>& R) {
  PrimState<Dim> avg;
  avg.rho = ln_mean(L.rho, R.rho, L.log_rho, R.log_rho);
  for (int l = 0; l < Dim; ++l) avg.vel[l] = mean(L.vel[l], R.vel[l]);
  avg.p = avg.rho / ln_mean(L.beta, R.beta, L.log_beta, R.log_beta);
  return avg;
}

template <int Dim>
PrimState<Dim> interface_average(const StatePair<Dim>& pair) {
  return interface_average(make_flux_point(pair.left), make_flux_point(pair.right));
}

ScaledEigenSystem<1> scaled_eigensystem_1d(const PrimState<1>& avg, const EosParams& eos) {
  const double g = eos.gamma();
  const double rho = avg.rho;
  const double u = avg.vel[0];
  const double W = lorentz_factor(avg);
  const double h = specific_enthalpy(avg, eos);
  const double c = sound_speed(avg, eos);

  const Matrix<3> M = {{
      {1.0, 1.0, 1.0},
      {(u - c) * W * h, u * W, (u + c) * W * h},
      {(1.0 - u * c) * W * h, W, (1.0 + u * c) * W * h},
  }};
  const std::array<double, 3> scale = {
      std::sqrt(rho * W * (1.0 - u * c) / (2.0 * g)),
      std::sqrt((g - 1.0) * rho * W / g),
      std::sqrt(rho * W * (1.0 + u * c) / (2.0 * g)),
  };

  ScaledEigenSystem<1> sys;
  sys.dir = Axis::x;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) sys.R[r][k] = M[r][k] * scale[k];
  }
  sys.lambdas = {(u - c) / (1.0 - u * c), u, (u + c) / (1.0 + u * c)};
  return sys;
}

ScaledEigenSystem<2> scaled_eigensystem_2d(const PrimState<2>& avg, const EosParams& eos,
                                           Axis dir) {
  const double g = eos.gamma();
  const double rho = avg.rho;
  const double p = avg.p;
  const double u = avg.vel[0];
  const double v = avg.vel[1];
  const double W = lorentz_factor(avg);
  const double h = specific_enthalpy(avg, eos);
  const double c = sound_speed(avg, eos);
  const double c2 = c * c;
  const double den = 1.0 - (u * u + v * v) * c2;

  // normal (un) and tangential (ut) velocity components for this direction
  const double un = dir == Axis::x ? u : v;
  const double ut = dir == Axis::x ? v : u;
  const double root = std::sqrt(1.0 - un * un - ut * ut * c2);
  const double lm = (un * (1.0 - c2) - (c / W) * root) / den;
  const double lp = (un * (1.0 - c2) + (c / W) * root) / den;
  const double one_m_un2 = 1.0 - un * un;
  const double Am = one_m_un2 / (1.0 - un * lm);
  const double Ap = one_m_un2 / (1.0 - un * lp);
  const double B = rho * W * root * root / (g * one_m_un2);
  const double C = rho * un * c * root / (g * one_m_un2);

  const double s_acoustic_m = std::sqrt(0.5 * (B - C));
  const double s_acoustic_p = std::sqrt(0.5 * (B + C));
  const double s_entropy = std::sqrt((g - 1.0) * rho * W * W * W / g);
  const double s_shear = std::sqrt(p / (W * one_m_un2 * h));

  ScaledEigenSystem<2> sys;
  sys.dir = dir;
  Matrix<4> M;
  std::array<double, 4> scale;
  if (dir == Axis::x) {
    M = {{
        {1.0, 1.0 / W, W * v, 1.0},
        {h * W * Am * lm, u, 2.0 * h * W * W * u * v, h * W * Ap * lp},
        {h * W * v, v, h * (1.0 + 2.0 * W * W * v * v), h * W * v},
        {h * W * Am, 1.0, 2.0 * h * W * W * v, h * W * Ap},
    }};
    scale = {s_acoustic_m, s_entropy, s_shear, s_acoustic_p};
    sys.lambdas = {lm, u, u, lp};
  } else {
    M = {{
        {1.0, W * u, 1.0 / W, 1.0},
        {h * W * u, h * (1.0 + 2.0 * W * W * u * u), u, h * W * u},
        {h * W * Am * lm, 2.0 * h * W * W * u * v, v, h * W * Ap * lp},
        {h * W * Am, 2.0 * h * W * W * u, 1.0, h * W * Ap},
    }};
    scale = {s_acoustic_m, s_shear, s_entropy, s_acoustic_p};
    sys.lambdas = {lm, v, v, lp};
  }
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) sys.R[r][k] = M[r][k] * scale[k];
  }
  return sys;
}

template <int Dim>
StateVec<Dim> dissipation_diagonal(const ScaledEigenSystem<Dim>& sys, DissipationKind kind) {
  StateVec<Dim> d;
  for (int k = 0; k < Dim + 2; ++k) d[k] = std::abs(sys.lambdas[k]);
  if (kind == DissipationKind::lax_friedrichs) {
    const double m = *std::max_element(d.begin(), d.end());
    d.fill(m);
  }
  return d;
}

template PrimState<1> interface_average<1>(const StatePair<1>&);
template PrimState<2> interface_average<2>(const StatePair<2>&);
template PrimState<1> interface_average<1>(const FluxPoint<1>&, const FluxPoint<1>&);
template PrimState<2> interface_average<2>(const FluxPoint<2>&, const FluxPoint<2>&);
template StateVec<1> dissipation_diagonal<1>(const ScaledEigenSystem<1>&, DissipationKind);
template StateVec<2> dissipation_diagonal<2>(const ScaledEigenSystem<2>&, DissipationKind);

}  // namespace rhd
