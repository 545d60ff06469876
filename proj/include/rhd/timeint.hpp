#pragma once

// Three-stage SSP Runge-Kutta stepping, CFL time-step selection and the run
// loop with total-entropy monitoring.

#include <functional>
#include <vector>

#include "rhd/problem.hpp"
#include "rhd/scheme.hpp"
#include "rhd/simd.hpp"

namespace rhd {

struct TimeControls {
  double cfl = 0.4;
  double t_end = 0.0;
  bool accuracy_mode = false;  // caps Δt at CFL Δx^{5/3}
  long max_steps = 10'000'000;
  double snapshot_dt = 0.0;  // 0 disables intermediate snapshots

  /// Throws std::invalid_argument unless 0 < cfl <= 1 and t_end >= 0.
  void validate() const;
};

struct EntropySample {
  double t = 0.0;
  double total = 0.0;
};

struct EntropyTrace {
  std::vector<EntropySample> samples;

  /// Throws std::logic_error unless t exceeds the last sample time.
  void append(double t, double total);
};

/// max over the interior of max_k |λ_k| in direction `dir`.
template <int Dim>
double max_signal_speed(const Field<Dim>& field, const EosParams& eos, Axis dir);

/// CFL step, optionally capped in accuracy mode, clipped so t + Δt <= t_end.
template <int Dim>
double compute_dt(const Field<Dim>& field, const EosParams& eos, const TimeControls& controls,
                  double t = 0.0);

template <int Dim>
struct Rk3Workspace {
  std::vector<ConsState<Dim>> u0;
  std::vector<ConsState<Dim>> rate;
};

/// One SSP-RK3 step
///   U1 = U + Δt L(U)
///   U2 = 3/4 U + 1/4 (U1 + Δt L(U1))
///   U' = 1/3 U + 2/3 (U2 + Δt L(U2))
/// where `rhs(field, rate)` evaluates L. Primitives are refreshed after every
/// stage; a NonPhysicalState carries the stage number (1..3).
template <int Dim, class Rhs>
void rk3_step(Field<Dim>& field, double dt, Rhs&& rhs, const EosParams& eos,
              Rk3Workspace<Dim>& ws) {
  static_assert(sizeof(ConsState<Dim>) == sizeof(double) * (Dim + 2));
  const std::size_t n = field.cons.size() * (Dim + 2);
  ws.u0 = field.cons;
  const simd::KernelTable& kt = simd::kernels();
  auto flat = [](auto& v) { return reinterpret_cast<double*>(v.data()); };
  auto cflat = [](const auto& v) { return reinterpret_cast<const double*>(v.data()); };

  constexpr double a[3] = {0.0, 3.0 / 4.0, 1.0 / 3.0};
  constexpr double b[3] = {1.0, 1.0 / 4.0, 2.0 / 3.0};
  for (int stage = 0; stage < 3; ++stage) {
    rhs(field, ws.rate);
    // first stage: y = U, later stages: y = current stage value
    kt.ssp_combine(a[stage], cflat(ws.u0), b[stage], cflat(field.cons), dt, cflat(ws.rate),
                   flat(field.cons), n);
    update_primitives(field, eos, stage + 1);
  }
}

template <int Dim>
struct RunResult {
  Field<Dim> field;
  EntropyTrace trace;
  long steps = 0;
  double t = 0.0;
};

template <int Dim>
using SnapshotCallback = std::function<void(const Field<Dim>&, double t)>;

/// Advances `problem` from t = 0 to controls.t_end on `grid`. The callback, if
/// set, sees t = 0, every multiple of snapshot_dt (steps are shortened to land
/// on them) and t_end. Throws NonPhysicalState on inadmissible states and
/// std::runtime_error when max_steps is exceeded.
template <int Dim>
RunResult<Dim> run(const ProblemSpec& problem, const Grid& grid, const SchemeConfig& cfg,
                   const TimeControls& controls, const SnapshotCallback<Dim>& snapshot = {});

}  // namespace rhd
