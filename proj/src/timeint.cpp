#include "rhd/timeint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rhd {

void TimeControls::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be finite and non-negative");
  }
  if (!(snapshot_dt >= 0.0)) throw std::invalid_argument("snapshot interval must be >= 0");
  if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
}

void EntropyTrace::append(double t, double total) {
  if (!samples.empty() && !(t > samples.back().t)) {
    throw std::logic_error("entropy samples must have increasing times");
  }
  samples.push_back({t, total});
}

template <int Dim>
double max_signal_speed(const Field<Dim>& field, const EosParams& eos, Axis dir) {
  const Grid& g = field.grid;
  double m = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) m = std::max(m, max_abs_char_speed(field.w(i, j), eos, dir));
  }
  return m;
}

template <int Dim>
double compute_dt(const Field<Dim>& field, const EosParams& eos, const TimeControls& controls,
                  double t) {
  const Grid& g = field.grid;
  double dt;
  if constexpr (Dim == 1) {
    dt = controls.cfl * g.dx / max_signal_speed(field, eos, Axis::x);
  } else {
    dt = controls.cfl / (max_signal_speed(field, eos, Axis::x) / g.dx +
                         max_signal_speed(field, eos, Axis::y) / g.dy);
  }
  if (controls.accuracy_mode) {
    const double h = Dim == 1 ? g.dx : std::min(g.dx, g.dy);
    dt = std::min(dt, controls.cfl * std::pow(h, 5.0 / 3.0));
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw NonPhysicalState("time step collapsed to " + std::to_string(dt));
  }
  return std::min(dt, controls.t_end - t);
}

template <int Dim>
RunResult<Dim> run(const ProblemSpec& problem, const Grid& grid, const SchemeConfig& cfg,
                   const TimeControls& controls, const SnapshotCallback<Dim>& snapshot) {
  controls.validate();
  problem.bc.validate();
  if (cfg.eos.gamma() != problem.gamma) {
    throw std::invalid_argument("scheme adiabatic index differs from problem " + problem.name);
  }

  RunResult<Dim> result;
  result.field = initialize_field<Dim>(problem, grid);
  Field<Dim>& field = result.field;
  const EosParams& eos = cfg.eos;
  const double t_end = controls.t_end;

  double t = 0.0;
  result.trace.append(t, total_entropy(field, eos));
  if (snapshot) snapshot(field, t);

  const bool periodic_snaps = snapshot && controls.snapshot_dt > 0.0;
  long snap_index = 1;
  double next_snap = periodic_snaps ? controls.snapshot_dt : std::numeric_limits<double>::infinity();

  RhsEvaluator<Dim> rhs(cfg, problem.bc);
  Rk3Workspace<Dim> ws;
  while (t < t_end) {
    if (result.steps >= controls.max_steps) {
      throw std::runtime_error("maximum step count " + std::to_string(controls.max_steps) +
                               " reached at t=" + std::to_string(t));
    }
    double dt = compute_dt(field, eos, controls, t);
    // a snapshot time within round-off of t_end is served by the final one
    const bool snap_hit = t + dt >= next_snap && next_snap < t_end * (1.0 - 1e-12);
    if (snap_hit) dt = next_snap - t;
    const bool final = !snap_hit && t + dt >= t_end;

    rk3_step(field, dt, rhs, eos, ws);
    ++result.steps;
    t = final ? t_end : (snap_hit ? next_snap : t + dt);
    result.trace.append(t, total_entropy(field, eos));

    if (snap_hit) {
      snapshot(field, t);
      ++snap_index;
      next_snap = static_cast<double>(snap_index) * controls.snapshot_dt;
    }
  }
  if (snapshot && t_end > 0.0) snapshot(field, t);
  result.t = t;
  return result;
}

#define RHD_INSTANTIATE_TIMEINT(D)                                                         \
  template double max_signal_speed<D>(const Field<D>&, const EosParams&, Axis);            \
  template double compute_dt<D>(const Field<D>&, const EosParams&, const TimeControls&,    \
                                double);                                                   \
  template RunResult<D> run<D>(const ProblemSpec&, const Grid&, const SchemeConfig&,       \
                               const TimeControls&, const SnapshotCallback<D>&);

RHD_INSTANTIATE_TIMEINT(1)
RHD_INSTANTIATE_TIMEINT(2)

#undef RHD_INSTANTIATE_TIMEINT

}  // namespace rhd
