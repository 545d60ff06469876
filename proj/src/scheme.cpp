#include "rhd/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rhd/simd.hpp"
#include "rhd/weno.hpp"

namespace rhd {

Grid Grid::make_1d(double x0, double x1, int nx) {
  if (nx < ghost) throw std::invalid_argument("grid needs at least 3 cells per direction");
  if (!(x1 > x0)) throw std::invalid_argument("grid domain must have positive length");
  Grid g;
  g.dim = 1;
  g.nx = nx;
  g.ny = 1;
  g.x0 = x0;
  g.dx = (x1 - x0) / nx;
  return g;
}

Grid Grid::make_2d(double x0, double x1, int nx, double y0, double y1, int ny) {
  if (nx < ghost || ny < ghost) {
    throw std::invalid_argument("grid needs at least 3 cells per direction");
  }
  if (!(x1 > x0) || !(y1 > y0)) {
    throw std::invalid_argument("grid domain must have positive length");
  }
  Grid g;
  g.dim = 2;
  g.nx = nx;
  g.ny = ny;
  g.x0 = x0;
  g.y0 = y0;
  g.dx = (x1 - x0) / nx;
  g.dy = (y1 - y0) / ny;
  return g;
}

void BoundaryCondition::validate() const {
  if ((x_lo == BcKind::periodic) != (x_hi == BcKind::periodic) ||
      (y_lo == BcKind::periodic) != (y_hi == BcKind::periodic)) {
    throw std::invalid_argument("periodic boundaries must be set on both opposing sides");
  }
}

template <int Dim>
Field<Dim>::Field(const Grid& g)
    : grid(g), cons(g.storage_size()), prim(g.storage_size()) {
  if (g.dim != Dim) throw std::invalid_argument("grid dimension does not match field");
}

template <int Dim>
void Field<Dim>::freeze_inflow() {
  inflow_cons = cons;
  inflow_prim = prim;
}

namespace {

// Fills the three ghost layers on one side of one grid line. `cell(k)` maps a
// line coordinate (negative or >= n for ghosts) to a storage index.
template <int Dim, class CellIndex>
void fill_line_side(Field<Dim>& f, BcKind kind, bool hi, int n, int axis, CellIndex cell) {
  for (int g = 0; g < Grid::ghost; ++g) {
    const int ghost = hi ? n + g : -1 - g;
    const std::size_t dst = cell(ghost);
    int src = 0;
    switch (kind) {
      case BcKind::periodic: src = hi ? g : n - 1 - g; break;
      case BcKind::outflow: src = hi ? n - 1 : 0; break;
      case BcKind::reflective: src = hi ? n - 1 - g : g; break;
      case BcKind::dirichlet:
        if (f.inflow_cons.size() != f.cons.size()) {
          throw std::logic_error("dirichlet boundary used without frozen inflow states");
        }
        f.cons[dst] = f.inflow_cons[dst];
        f.prim[dst] = f.inflow_prim[dst];
        continue;
    }
    const std::size_t s = cell(src);
    f.cons[dst] = f.cons[s];
    f.prim[dst] = f.prim[s];
    if (kind == BcKind::reflective) {
      f.cons[dst].q[1 + axis] = -f.cons[dst].q[1 + axis];
      f.prim[dst].vel[axis] = -f.prim[dst].vel[axis];
    }
  }
}

}  // namespace

template <int Dim>
void apply_boundary(Field<Dim>& field, const BoundaryCondition& bc) {
  const Grid& g = field.grid;
  for (int j = 0; j < g.ny; ++j) {
    auto cell = [&](int i) { return g.index(i, j); };
    fill_line_side(field, bc.x_lo, false, g.nx, 0, cell);
    fill_line_side(field, bc.x_hi, true, g.nx, 0, cell);
  }
  if constexpr (Dim == 2) {
    for (int i = 0; i < g.nx; ++i) {
      auto cell = [&](int j) { return g.index(i, j); };
      fill_line_side(field, bc.y_lo, false, g.ny, 1, cell);
      fill_line_side(field, bc.y_hi, true, g.ny, 1, cell);
    }
  }
}

template <int Dim>
void update_primitives(Field<Dim>& field, const EosParams& eos, int stage) {
  const Grid& g = field.grid;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      try {
        field.prim[k] = cons_to_prim(field.cons[k], eos, field.prim[k].p);
      } catch (const NonPhysicalState& e) {
        throw NonPhysicalState(std::string(e.what()) + " at cell (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")",
                               static_cast<long>(j) * g.nx + i, stage);
      }
    }
  }
}

template <int Dim>
RhsEvaluator<Dim>::RhsEvaluator(SchemeConfig cfg, BoundaryCondition bc)
    : cfg_(cfg), bc_(bc) {
  bc_.validate();
}

template <int Dim>
void RhsEvaluator<Dim>::operator()(Field<Dim>& field, std::vector<ConsState<Dim>>& rate) {
  apply_boundary(field, bc_);
  const Grid& g = field.grid;
  rate.assign(g.storage_size(), ConsState<Dim>{});

  const int lx = g.nx + 2 * Grid::ghost;
  w_.resize(lx);
  u_.resize(lx);
  for (int j = 0; j < g.ny; ++j) {
    for (int k = 0; k < lx; ++k) {
      const std::size_t s = g.index(k - Grid::ghost, j);
      w_[k] = field.prim[s];
      u_[k] = field.cons[s];
    }
    line_fluxes(g.nx, Axis::x);
    for (int i = 0; i < g.nx; ++i) {
      auto& r = rate[g.index(i, j)].q;
      for (int c = 0; c < Dim + 2; ++c) r[c] = -(flux_[i + 1][c] - flux_[i][c]) / g.dx;
    }
  }

  if constexpr (Dim == 2) {
    const int ly = g.ny + 2 * Grid::ghost;
    w_.resize(ly);
    u_.resize(ly);
    for (int i = 0; i < g.nx; ++i) {
      for (int k = 0; k < ly; ++k) {
        const std::size_t s = g.index(i, k - Grid::ghost);
        w_[k] = field.prim[s];
        u_[k] = field.cons[s];
      }
      line_fluxes(g.ny, Axis::y);
      for (int j = 0; j < g.ny; ++j) {
        auto& r = rate[g.index(i, j)].q;
        for (int c = 0; c < Dim + 2; ++c) r[c] += -(flux_[j + 1][c] - flux_[j][c]) / g.dy;
      }
    }
  }
}

template <int Dim>
void RhsEvaluator<Dim>::line_fluxes(int n, Axis dir) {
  flux_.resize(n + 1);
  if (cfg_.flux_mode == FluxMode::llf1) {
    line_llf(n, dir);
    return;
  }
  line_ec6(n, dir);
  if (cfg_.flux_mode == FluxMode::es) line_es_dissipation(n, dir);
}

template <int Dim>
void RhsEvaluator<Dim>::line_ec6(int n, Axis dir) {
  const int len = n + 2 * Grid::ghost;
  fp_.resize(len);
  for (int k = 0; k < len; ++k) fp_[k] = make_flux_point(w_[k]);

  // pairN[a] = F̃(a, a+N) over the ranges the interfaces k = 0..n touch
  pair1_.resize(len);
  pair2_.resize(len);
  pair3_.resize(len);
  const EosParams& eos = cfg_.eos;
  for (int a = 2; a <= n + 2; ++a) pair1_[a] = ec_flux<Dim>(fp_[a], fp_[a + 1], eos, dir);
  for (int a = 1; a <= n + 2; ++a) pair2_[a] = ec_flux<Dim>(fp_[a], fp_[a + 2], eos, dir);
  for (int a = 0; a <= n + 2; ++a) pair3_[a] = ec_flux<Dim>(fp_[a], fp_[a + 3], eos, dir);

  for (int k = 0; k <= n; ++k) {
    const int i = k + 2;
    flux_[k] = combine_ec6<Dim>(pair1_[i], pair2_[i - 1], pair2_[i], pair3_[i - 2], pair3_[i - 1],
                                pair3_[i]);
  }
}

template <int Dim>
void RhsEvaluator<Dim>::line_es_dissipation(int n, Axis dir) {
  constexpr int nv = Dim + 2;
  const int len = n + 2 * Grid::ghost;
  const int m = n + 1;
  const EosParams& eos = cfg_.eos;

  V_.resize(len);
  for (int k = 0; k < len; ++k) V_[k] = entropy_variables(w_[k], eos);

  sys_.resize(m);
  wst_.resize(static_cast<std::size_t>(nv) * 6 * m);
  wrec_.resize(static_cast<std::size_t>(nv) * 2 * m);
  auto slot = [&](int c, int s) { return wst_.data() + (static_cast<std::size_t>(c) * 6 + s) * m; };

  for (int k = 0; k < m; ++k) {
    const int i = k + 2;
    sys_[k] = scaled_eigensystem<Dim>(interface_average(fp_[i], fp_[i + 1]), eos, dir);
    for (int s = 0; s < 6; ++s) {
      const StateVec<Dim> wv = project_scaled(sys_[k], V_[i - 2 + s]);
      for (int c = 0; c < nv; ++c) slot(c, s)[k] = wv[c];
    }
  }

  const simd::KernelTable& kt = simd::kernels();
  for (int c = 0; c < nv; ++c) {
    double* minus = wrec_.data() + static_cast<std::size_t>(c) * 2 * m;
    double* plus = minus + m;
    kt.weno5_left(slot(c, 0), slot(c, 1), slot(c, 2), slot(c, 3), slot(c, 4), minus, m);
    kt.weno5_left(slot(c, 5), slot(c, 4), slot(c, 3), slot(c, 2), slot(c, 1), plus, m);
  }

  for (int k = 0; k < m; ++k) {
    const int i = k + 2;
    const ScaledEigenSystem<Dim>& sys = sys_[k];
    StateVec<Dim> dV;
    for (int r = 0; r < nv; ++r) dV[r] = V_[i + 1][r] - V_[i][r];
    const StateVec<Dim> raw = project_scaled(sys, dV);
    const StateVec<Dim> diag = dissipation_diagonal(sys, cfg_.dissipation);

    StateVec<Dim> coef;
    for (int c = 0; c < nv; ++c) {
      const double* minus = wrec_.data() + static_cast<std::size_t>(c) * 2 * m;
      const double jr = minus[m + k] - minus[k];
      coef[c] = sign_switch(jr, raw[c]) * diag[c] * jr;
    }
    for (int r = 0; r < nv; ++r) {
      double acc = 0.0;
      for (int c = 0; c < nv; ++c) acc += sys.R[r][c] * coef[c];
      flux_[k][r] -= 0.5 * acc;
    }
  }
}

template <int Dim>
void RhsEvaluator<Dim>::line_llf(int n, Axis dir) {
  const int len = n + 2 * Grid::ghost;
  // pair1_ holds physical fluxes and wrec_ the per-cell max |λ| here
  pair1_.resize(len);
  wrec_.resize(len);
  for (int k = 2; k <= n + 3; ++k) {
    pair1_[k] = physical_flux(w_[k], u_[k], dir);
    wrec_[k] = max_abs_char_speed(w_[k], cfg_.eos, dir);
  }
  for (int k = 0; k <= n; ++k) {
    const int i = k + 2;
    const double a = std::max(wrec_[i], wrec_[i + 1]);
    for (int c = 0; c < Dim + 2; ++c) {
      flux_[k][c] = 0.5 * (pair1_[i][c] + pair1_[i + 1][c]) -
                    0.5 * a * (u_[i + 1].q[c] - u_[i].q[c]);
    }
  }
}

template <int Dim>
std::vector<ConsState<Dim>> semidiscrete_rhs(Field<Dim>& field, const SchemeConfig& cfg,
                                             const BoundaryCondition& bc) {
  RhsEvaluator<Dim> rhs(cfg, bc);
  std::vector<ConsState<Dim>> rate;
  rhs(field, rate);
  return rate;
}

template <int Dim>
EntropyRate entropy_production(Field<Dim>& field, const SchemeConfig& cfg,
                               const BoundaryCondition& bc) {
  const std::vector<ConsState<Dim>> rate = semidiscrete_rhs(field, cfg, bc);
  const Grid& g = field.grid;
  const double vol = g.cell_volume();
  EntropyRate out;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      const StateVec<Dim> V = entropy_variables(field.prim[k], cfg.eos);
      for (int c = 0; c < Dim + 2; ++c) {
        out.value += V[c] * rate[k].q[c] * vol;
        out.scale += std::abs(V[c] * rate[k].q[c]) * vol;
      }
    }
  }
  return out;
}

template <int Dim>
double total_entropy(const Field<Dim>& field, const EosParams& eos) {
  const Grid& g = field.grid;
  double sum = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) sum += entropy_quantities(field.w(i, j), eos).eta;
  }
  return sum * g.cell_volume();
}

template <int Dim>
StateVec<Dim> total_conserved(const Field<Dim>& field) {
  const Grid& g = field.grid;
  StateVec<Dim> sum{};
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      for (int c = 0; c < Dim + 2; ++c) sum[c] += field.U(i, j).q[c];
    }
  }
  for (double& s : sum) s *= g.cell_volume();
  return sum;
}

#define RHD_INSTANTIATE_SCHEME(D)                                                            \
  template struct Field<D>;                                                                  \
  template class RhsEvaluator<D>;                                                            \
  template void apply_boundary<D>(Field<D>&, const BoundaryCondition&);                      \
  template void update_primitives<D>(Field<D>&, const EosParams&, int);                      \
  template std::vector<ConsState<D>> semidiscrete_rhs<D>(Field<D>&, const SchemeConfig&,     \
                                                         const BoundaryCondition&);          \
  template EntropyRate entropy_production<D>(Field<D>&, const SchemeConfig&,                 \
                                             const BoundaryCondition&);                      \
  template double total_entropy<D>(const Field<D>&, const EosParams&);                       \
  template StateVec<D> total_conserved<D>(const Field<D>&);

RHD_INSTANTIATE_SCHEME(1)
RHD_INSTANTIATE_SCHEME(2)

#undef RHD_INSTANTIATE_SCHEME

}  // namespace rhd
