#pragma once

// Uniform grids with a three-cell halo, ghost-cell boundary conditions and the
// semi-discrete right-hand side L(U) for the entropy conservative, entropy
// stable and first-order local Lax-Friedrichs interface fluxes.

#include <cstddef>
#include <vector>

#include "rhd/ecflux.hpp"
#include "rhd/eigen.hpp"
#include "rhd/state.hpp"

namespace rhd {

struct Grid {
  static constexpr int ghost = 3;

  int dim = 1;
  int nx = 0;
  int ny = 1;
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;

  static Grid make_1d(double x0, double x1, int nx);
  static Grid make_2d(double x0, double x1, int nx, double y0, double y1, int ny);

  int stride() const { return nx + 2 * ghost; }
  int rows() const { return dim == 2 ? ny + 2 * ghost : 1; }
  std::size_t storage_size() const { return static_cast<std::size_t>(stride()) * rows(); }
  std::size_t interior_count() const { return static_cast<std::size_t>(nx) * ny; }
  double cell_volume() const { return dim == 2 ? dx * dy : dx; }

  /// Storage index of interior-relative cell (i, j); ghosts have negative or
  /// past-the-end indices. In 1D, j must be 0.
  std::size_t index(int i, int j = 0) const {
    const int jj = dim == 2 ? j + ghost : 0;
    return static_cast<std::size_t>(i + ghost) + static_cast<std::size_t>(jj) * stride();
  }

  double xc(int i) const { return x0 + (i + 0.5) * dx; }
  double yc(int j) const { return y0 + (j + 0.5) * dy; }
};

enum class BcKind { periodic, outflow, dirichlet, reflective };

struct BoundaryCondition {
  BcKind x_lo = BcKind::periodic;
  BcKind x_hi = BcKind::periodic;
  BcKind y_lo = BcKind::periodic;
  BcKind y_hi = BcKind::periodic;

  static BoundaryCondition all(BcKind kind) { return {kind, kind, kind, kind}; }

  /// Throws std::invalid_argument if periodic is paired with anything else.
  void validate() const;
};

/// Conservative states and their primitive cache over the full storage
/// (interior plus halo). `inflow_*` hold frozen ghost values for dirichlet
/// sides and are empty otherwise.
template <int Dim>
struct Field {
  Grid grid;
  std::vector<ConsState<Dim>> cons;
  std::vector<PrimState<Dim>> prim;
  std::vector<ConsState<Dim>> inflow_cons;
  std::vector<PrimState<Dim>> inflow_prim;

  Field() = default;
  explicit Field(const Grid& g);

  ConsState<Dim>& U(int i, int j = 0) { return cons[grid.index(i, j)]; }
  const ConsState<Dim>& U(int i, int j = 0) const { return cons[grid.index(i, j)]; }
  PrimState<Dim>& w(int i, int j = 0) { return prim[grid.index(i, j)]; }
  const PrimState<Dim>& w(int i, int j = 0) const { return prim[grid.index(i, j)]; }

  /// Copies the current ghost values into the dirichlet store.
  void freeze_inflow();
};

enum class FluxMode { ec, es, llf1 };

struct SchemeConfig {
  FluxMode flux_mode = FluxMode::es;
  DissipationKind dissipation = DissipationKind::lax_friedrichs;
  EosParams eos{};
};

/// Fills every ghost cell (conservative and primitive) from the interior.
template <int Dim>
void apply_boundary(Field<Dim>& field, const BoundaryCondition& bc);

/// Recomputes interior primitives from conservative values, seeding Newton
/// with the cached pressure. Rethrows NonPhysicalState with the cell index
/// and the given stage.
template <int Dim>
void update_primitives(Field<Dim>& field, const EosParams& eos, int stage = -1);

/// Evaluates L(U) with reusable line workspaces. The rate vector uses the
/// field storage layout; ghost entries are zero.
template <int Dim>
class RhsEvaluator {
 public:
  RhsEvaluator(SchemeConfig cfg, BoundaryCondition bc);

  /// Fills the halo of `field` and writes L(U) into `rate`.
  void operator()(Field<Dim>& field, std::vector<ConsState<Dim>>& rate);

  const SchemeConfig& config() const { return cfg_; }
  const BoundaryCondition& boundary() const { return bc_; }

 private:
  // Interface fluxes of one grid line held in w_/u_ (n cells plus halo);
  // flux_[k] is the flux between line cells k+2 and k+3.
  void line_fluxes(int n, Axis dir);
  void line_ec6(int n, Axis dir);
  void line_es_dissipation(int n, Axis dir);
  void line_llf(int n, Axis dir);

  SchemeConfig cfg_;
  BoundaryCondition bc_;
  std::vector<PrimState<Dim>> w_;
  std::vector<ConsState<Dim>> u_;
  std::vector<FluxPoint<Dim>> fp_;
  std::vector<StateVec<Dim>> pair1_, pair2_, pair3_;
  std::vector<StateVec<Dim>> V_;
  std::vector<ScaledEigenSystem<Dim>> sys_;
  std::vector<double> wst_;    // [component][stencil slot][interface]
  std::vector<double> wrec_;   // [component][minus|plus][interface]
  std::vector<StateVec<Dim>> flux_;
};

template <int Dim>
std::vector<ConsState<Dim>> semidiscrete_rhs(Field<Dim>& field, const SchemeConfig& cfg,
                                             const BoundaryCondition& bc);

struct EntropyRate {
  double value = 0.0;  // Σ Vᵀ L(U) vol
  double scale = 0.0;  // Σ |V|ᵀ |L(U)| vol
};

template <int Dim>
EntropyRate entropy_production(Field<Dim>& field, const SchemeConfig& cfg,
                               const BoundaryCondition& bc);

/// Σ η(U) vol over the interior.
template <int Dim>
double total_entropy(const Field<Dim>& field, const EosParams& eos);

/// Σ U vol over the interior, per component.
template <int Dim>
StateVec<Dim> total_conserved(const Field<Dim>& field);

}  // namespace rhd
