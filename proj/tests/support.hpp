#pragma once

// Random admissible states and small numeric helpers shared by the tests.

#include <algorithm>
#include <cmath>
#include <random>

#include "rhd/scheme.hpp"
#include "rhd/state.hpp"

namespace rhd::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// ρ and p log-uniform over [lo, hi], speed uniform below max_speed with a
/// uniformly random direction.
template <int Dim>
PrimState<Dim> random_prim(Rng& rng, double max_speed = 0.95, double lo = 1e-2, double hi = 1e2) {
  PrimState<Dim> w;
  w.rho = log_uniform(rng, lo, hi);
  w.p = log_uniform(rng, lo, hi);
  const double speed = uniform(rng, 0.0, max_speed);
  if constexpr (Dim == 1) {
    w.vel[0] = uniform(rng, 0.0, 1.0) < 0.5 ? -speed : speed;
  } else {
    const double angle = uniform(rng, 0.0, 2.0 * M_PI);
    w.vel[0] = speed * std::cos(angle);
    w.vel[1] = speed * std::sin(angle);
  }
  return w;
}

/// |a - b| / max(|b|, floor)
inline double rel_err(double a, double b, double floor = 1.0) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

template <class Vec>
double max_rel_err(const Vec& a, const Vec& b, double floor = 1.0) {
  double e = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, rel_err(a[k], b[k], floor));
  return e;
}

/// Interior cells filled with independent random states (discontinuous at
/// every interface); the halo is left for apply_boundary.
template <int Dim>
Field<Dim> random_field(const Grid& grid, Rng& rng, const EosParams& eos, double max_speed = 0.9,
                        double lo = 0.1, double hi = 10.0) {
  Field<Dim> f(grid);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      f.w(i, j) = random_prim<Dim>(rng, max_speed, lo, hi);
      f.U(i, j) = prim_to_cons(f.w(i, j), eos);
    }
  }
  return f;
}

}  // namespace rhd::test
