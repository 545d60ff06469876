#pragma once

// Benchmark problem definition and field initialisation from it.

#include <functional>
#include <optional>
#include <string>

#include "rhd/scheme.hpp"
#include "rhd/state.hpp"

namespace rhd {

struct ProblemSpec {
  using InitialCondition = std::function<PrimState<2>(double x, double y)>;
  using ExactSolution = std::function<PrimState<2>(double x, double y, double t)>;

  std::string name;
  std::string summary;
  int dim = 1;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  double gamma = 5.0 / 3.0;
  InitialCondition ic;
  BoundaryCondition bc;
  double t_end = 0.0;
  ExactSolution exact;  // empty when no closed form is known
  int default_nx = 100;
  int default_ny = 1;
  bool accuracy_test = false;  // uses the Δx^{5/3} time-step cap by default
};

/// Drops the components beyond Dim (1D problems carry v = 0).
template <int Dim>
PrimState<Dim> restrict_dim(const PrimState<2>& w) {
  PrimState<Dim> out;
  out.rho = w.rho;
  for (int l = 0; l < Dim; ++l) out.vel[l] = w.vel[l];
  out.p = w.p;
  return out;
}

/// nx, ny <= 0 select the problem defaults.
Grid make_grid(const ProblemSpec& problem, int nx = 0, int ny = 0);

/// Evaluates the initial condition at every storage cell centre, halo
/// included, and freezes those halo values for dirichlet sides. Throws
/// std::invalid_argument if any sampled state is inadmissible.
template <int Dim>
Field<Dim> initialize_field(const ProblemSpec& problem, const Grid& grid);

}  // namespace rhd
