#pragma once

// Central-difference Jacobians ∂U/∂V and ∂F/∂U, and the matrices R Rᵀ and
// R Λ R⁻¹ built from a scaled eigensystem, for identity checks.

#include <Eigen/Dense>
#include <cmath>

#include "rhd/eigen.hpp"
#include "rhd/state.hpp"

namespace rhd::test {

template <int Dim>
using Mat = Eigen::Matrix<double, Dim + 2, Dim + 2>;

/// Inverse of the entropy-variable map, in closed form.
template <int Dim>
PrimState<Dim> prim_from_entropy_vars(const StateVec<Dim>& V, const EosParams& eos) {
  const double g = eos.gamma();
  const double bW = -V[Dim + 1];  // β W
  PrimState<Dim> w;
  double u2 = 0.0;
  for (int l = 0; l < Dim; ++l) {
    w.vel[l] = V[1 + l] / bW;
    u2 += w.vel[l] * w.vel[l];
  }
  const double beta = bW * std::sqrt(1.0 - u2);
  const double S = g - (g - 1.0) * (V[0] - beta);
  w.p = std::exp((S + g * std::log(beta)) / (1.0 - g));
  w.rho = beta * w.p;
  return w;
}

template <int Dim>
Mat<Dim> dUdV_fd(const PrimState<Dim>& w, const EosParams& eos) {
  const StateVec<Dim> V = entropy_variables(w, eos);
  Mat<Dim> J;
  for (int c = 0; c < Dim + 2; ++c) {
    const double h = 1e-6 * std::max(std::abs(V[c]), 1.0);
    StateVec<Dim> Vp = V, Vm = V;
    Vp[c] += h;
    Vm[c] -= h;
    const auto Up = prim_to_cons(prim_from_entropy_vars<Dim>(Vp, eos), eos);
    const auto Um = prim_to_cons(prim_from_entropy_vars<Dim>(Vm, eos), eos);
    for (int r = 0; r < Dim + 2; ++r) J(r, c) = (Up.q[r] - Um.q[r]) / (2.0 * h);
  }
  return J;
}

template <int Dim>
Mat<Dim> dFdU_fd(const PrimState<Dim>& w, const EosParams& eos, Axis dir) {
  const ConsState<Dim> U = prim_to_cons(w, eos);
  auto flux = [&](const ConsState<Dim>& u) {
    return physical_flux(cons_to_prim(u, eos, w.p), u, dir);
  };
  Mat<Dim> J;
  for (int c = 0; c < Dim + 2; ++c) {
    const double h = 1e-6 * std::max(std::abs(U.q[c]), 1.0);
    ConsState<Dim> Up = U, Um = U;
    Up.q[c] += h;
    Um.q[c] -= h;
    const auto Fp = flux(Up);
    const auto Fm = flux(Um);
    for (int r = 0; r < Dim + 2; ++r) J(r, c) = (Fp[r] - Fm[r]) / (2.0 * h);
  }
  return J;
}

template <int Dim>
Mat<Dim> to_eigen(const Matrix<Dim + 2>& M) {
  Mat<Dim> out;
  for (int r = 0; r < Dim + 2; ++r) {
    for (int c = 0; c < Dim + 2; ++c) out(r, c) = M[r][c];
  }
  return out;
}

template <int Dim>
Mat<Dim> r_rt(const ScaledEigenSystem<Dim>& sys) {
  const Mat<Dim> R = to_eigen<Dim>(sys.R);
  return R * R.transpose();
}

template <int Dim>
Mat<Dim> r_lambda_rinv(const ScaledEigenSystem<Dim>& sys) {
  const Mat<Dim> R = to_eigen<Dim>(sys.R);
  Eigen::Matrix<double, Dim + 2, 1> lam;
  for (int k = 0; k < Dim + 2; ++k) lam(k) = sys.lambdas[k];
  return R * lam.asDiagonal() * R.inverse();
}

/// max |A - B| / max(1, max |B|)
template <int Dim>
double rel_max_diff(const Mat<Dim>& A, const Mat<Dim>& B) {
  return (A - B).cwiseAbs().maxCoeff() / std::max(1.0, B.cwiseAbs().maxCoeff());
}

}  // namespace rhd::test
