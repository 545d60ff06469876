#pragma once

// Two-point averages used by the entropy conservative fluxes.

#include <cmath>
#include <utility>

#include "rhd/state.hpp"

namespace rhd {

template <int Dim>
struct StatePair {
  PrimState<Dim> left;
  PrimState<Dim> right;
};

inline double mean(double a_left, double a_right) { return 0.5 * (a_left + a_right); }

inline double jump(double a_left, double a_right) { return a_right - a_left; }

namespace detail {

inline constexpr double kLnMeanSeriesCutoff = 1e-4;

// (aL+aR)/2 / (1 + s/3 + s^2/5 + s^3/7) with s = ((aL-aR)/(aL+aR))^2.
inline double ln_mean_series(double a_left, double a_right, double s) {
  const double F = 1.0 + s * (1.0 / 3.0 + s * (1.0 / 5.0 + s * (1.0 / 7.0)));
  return 0.5 * (a_left + a_right) / F;
}

inline double ln_mean_ratio_param(double a_left, double a_right) {
  const double zeta = a_left / a_right;
  const double f = (zeta - 1.0) / (zeta + 1.0);
  return f * f;
}

}  // namespace detail

/// Logarithmic mean [[a]] / [[ln a]] for positive arguments.
inline double ln_mean(double a_left, double a_right) {
  const double s = detail::ln_mean_ratio_param(a_left, a_right);
  if (s < detail::kLnMeanSeriesCutoff) return detail::ln_mean_series(a_left, a_right, s);
  return (a_right - a_left) / (std::log(a_right) - std::log(a_left));
}

/// Same as ln_mean(a,b) but reuses logarithms already computed per cell.
inline double ln_mean(double a_left, double a_right, double log_left, double log_right) {
  const double s = detail::ln_mean_ratio_param(a_left, a_right);
  if (s < detail::kLnMeanSeriesCutoff) return detail::ln_mean_series(a_left, a_right, s);
  return (a_right - a_left) / (log_right - log_left);
}

/// ⟨⟨u⟩⟩ with W(uR) - W(uL) = ⟨⟨u⟩⟩ (uR - uL); sL, sR are sqrt(1 - |u|^2).
inline double lorentz_mean(double u_left, double u_right, double s_left, double s_right) {
  return (u_left + u_right) / (s_left * s_right * (s_left + s_right));
}

inline double lorentz_mean_1d(double u_left, double u_right) {
  return lorentz_mean(u_left, u_right, std::sqrt(1.0 - u_left * u_left),
                      std::sqrt(1.0 - u_right * u_right));
}

/// Pair (⟨⟨·⟩⟩_x, ⟨⟨·⟩⟩_y) with [[W]] = ⟨⟨·⟩⟩_x [[u]] + ⟨⟨·⟩⟩_y [[v]].
inline std::pair<double, double> lorentz_mean_2d(const StatePair<2>& pair) {
  const auto& L = pair.left;
  const auto& R = pair.right;
  const double sL = std::sqrt(1.0 - L.vel[0] * L.vel[0] - L.vel[1] * L.vel[1]);
  const double sR = std::sqrt(1.0 - R.vel[0] * R.vel[0] - R.vel[1] * R.vel[1]);
  return {lorentz_mean(L.vel[0], R.vel[0], sL, sR), lorentz_mean(L.vel[1], R.vel[1], sL, sR)};
}

}  // namespace rhd
