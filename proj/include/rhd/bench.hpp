#pragma once

// Benchmark catalogue, error norms, convergence studies, fine-mesh reference
// solutions and schlieren images.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rhd/problem.hpp"
#include "rhd/scheme.hpp"
#include "rhd/timeint.hpp"

namespace rhd {

/// Free parameters of the shock-bubble setup.
struct ShockBubbleParams {
  double bubble_rho = 0.1358;
  double bubble_x = 215.0;
  double bubble_y = 0.0;
  double bubble_radius = 25.0;
};

struct CatalogueOptions {
  ShockBubbleParams shock_bubble;
};

/// acc1d, rp1..rp4, dp, blast, acc2d, 2drp1..2drp3, sb, sv in that order.
std::vector<ProblemSpec> catalogue(const CatalogueOptions& options = {});

/// Case-insensitive lookup; std::nullopt if unknown.
std::optional<ProblemSpec> find_problem(const std::string& name,
                                        const CatalogueOptions& options = {});

/// Isentropic vortex of strength `eps` in its rest frame, boosted with the
/// velocity (vx, vy), evaluated at t = 0.
PrimState<2> boosted_vortex(double x, double y, double gamma, double eps, double vx, double vy);

struct ErrorNorms {
  double l1 = 0.0;    // Σ|e| / N
  double l2 = 0.0;    // sqrt(Σe² / N)
  double linf = 0.0;  // max |e|
};

/// Throws std::invalid_argument on size mismatch or empty input.
ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms err;
  std::optional<double> order_l1, order_l2, order_linf;
};

/// Interior ρ in storage order (x fastest).
template <int Dim>
std::vector<double> interior_density(const Field<Dim>& field);

/// Runs `problem` at each n (n×n in 2D) to controls.t_end and measures the
/// ρ error against problem.exact. Throws std::invalid_argument without exact.
std::vector<ConvergenceRow> convergence_study(const ProblemSpec& problem,
                                              const std::vector<int>& resolutions,
                                              const SchemeConfig& cfg,
                                              const TimeControls& controls);

/// Runs the first-order local Lax-Friedrichs scheme on `fine_n` cells per
/// direction and samples the result at the cell centres of `target` by
/// linear interpolation between fine cell centres (exact point sampling when
/// fine_n / n is odd).
template <int Dim>
std::vector<PrimState<Dim>> reference_solution(const ProblemSpec& problem, int fine_n,
                                               const Grid& target, const TimeControls& controls);

/// log10(1 + |∇ρ|) by central differences over the interior.
template <int Dim>
std::vector<double> schlieren(Field<Dim>& field, const BoundaryCondition& bc);

}  // namespace rhd
