#include "rhd/problem.hpp"

#include <stdexcept>

namespace rhd {

Grid make_grid(const ProblemSpec& problem, int nx, int ny) {
  if (nx <= 0) nx = problem.default_nx;
  if (problem.dim == 1) return Grid::make_1d(problem.x0, problem.x1, nx);
  if (ny <= 0) ny = nx == problem.default_nx ? problem.default_ny : nx;
  return Grid::make_2d(problem.x0, problem.x1, nx, problem.y0, problem.y1, ny);
}

template <int Dim>
Field<Dim> initialize_field(const ProblemSpec& problem, const Grid& grid) {
  if (grid.dim != problem.dim) {
    throw std::invalid_argument("grid dimension does not match problem " + problem.name);
  }
  const EosParams eos(problem.gamma);
  Field<Dim> field(grid);
  const int g = Grid::ghost;
  const int j_lo = Dim == 2 ? -g : 0;
  const int j_hi = Dim == 2 ? grid.ny + g : 1;
  for (int j = j_lo; j < j_hi; ++j) {
    for (int i = -g; i < grid.nx + g; ++i) {
      const double y = Dim == 2 ? grid.yc(j) : 0.0;
      const PrimState<Dim> w = restrict_dim<Dim>(problem.ic(grid.xc(i), y));
      if (!admissible(w)) {
        throw std::invalid_argument("initial condition of " + problem.name +
                                    " is inadmissible at x=" + std::to_string(grid.xc(i)) +
                                    ", y=" + std::to_string(y));
      }
      field.w(i, j) = w;
      field.U(i, j) = prim_to_cons(w, eos);
    }
  }
  const BoundaryCondition& bc = problem.bc;
  if (bc.x_lo == BcKind::dirichlet || bc.x_hi == BcKind::dirichlet ||
      (Dim == 2 && (bc.y_lo == BcKind::dirichlet || bc.y_hi == BcKind::dirichlet))) {
    field.freeze_inflow();
  }
  return field;
}

template Field<1> initialize_field<1>(const ProblemSpec&, const Grid&);
template Field<2> initialize_field<2>(const ProblemSpec&, const Grid&);

}  // namespace rhd
