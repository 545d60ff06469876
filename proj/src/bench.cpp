#include "rhd/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rhd {

namespace {

PrimState<2> prim2(double rho, double u, double v, double p) { return {rho, {u, v}, p}; }

PrimState<2> prim1(double rho, double u, double p) { return {rho, {u, 0.0}, p}; }

// Shifts x by s on the periodic interval [a, a + L).
double periodic_shift(double x, double s, double a, double L) {
  const double r = std::fmod(s, L);
  if (r == 0.0) return x;
  double y = std::fmod(x + r - a, L);
  if (y < 0.0) y += L;
  return a + y;
}

ProblemSpec riemann_1d(std::string name, std::string summary, PrimState<2> left,
                       PrimState<2> right, double gamma, double t_end) {
  ProblemSpec p;
  p.name = std::move(name);
  p.summary = std::move(summary);
  p.dim = 1;
  p.gamma = gamma;
  p.ic = [left, right](double x, double) { return x < 0.5 ? left : right; };
  p.bc = BoundaryCondition::all(BcKind::outflow);
  p.t_end = t_end;
  p.default_nx = 400;
  return p;
}

// ur, ul, ll, lr: quadrants x>0.5,y>0.5 / x<0.5,y>0.5 / x<0.5,y<0.5 / x>0.5,y<0.5.
ProblemSpec riemann_2d(std::string name, std::string summary, PrimState<2> ur, PrimState<2> ul,
                       PrimState<2> ll, PrimState<2> lr) {
  ProblemSpec p;
  p.name = std::move(name);
  p.summary = std::move(summary);
  p.dim = 2;
  p.ic = [=](double x, double y) {
    if (y > 0.5) return x > 0.5 ? ur : ul;
    return x > 0.5 ? lr : ll;
  };
  p.bc = BoundaryCondition::all(BcKind::outflow);
  p.t_end = 0.4;
  p.default_nx = 400;
  p.default_ny = 400;
  return p;
}

}  // namespace

PrimState<2> boosted_vortex(double x, double y, double gamma, double eps, double vx, double vy) {
  const double w = std::hypot(vx, vy);
  const double lorentz = 1.0 / std::sqrt(1.0 - w * w);
  const double nx = w > 0.0 ? vx / w : 0.0;
  const double ny = w > 0.0 ? vy / w : 0.0;
  // rest-frame coordinates: stretch along the boost direction
  const double along = (lorentz - 1.0) * (nx * x + ny * y);
  const double x0 = x + along * nx;
  const double y0 = y + along * ny;
  const double r2 = x0 * x0 + y0 * y0;

  const double pi = std::numbers::pi;
  const double C1 = (gamma - 1.0) / gamma / (8.0 * pi * pi) * eps * eps;
  const double e = std::exp(1.0 - r2);
  const double rho = std::pow(1.0 - C1 * e, 1.0 / (gamma - 1.0));
  const double p = std::pow(rho, gamma);
  const double C2 = 2.0 * gamma * C1 * e / (2.0 * gamma - 1.0 - gamma * C1 * e);
  const double f = std::sqrt(C2 / (1.0 + C2 * r2));
  const double u0 = -y0 * f;
  const double v0 = x0 * f;

  // relativistic addition of the rest-frame velocity and the boost
  const double vu = vx * u0 + vy * v0;
  const double k = lorentz / (lorentz + 1.0) * vu;
  const double den = 1.0 + vu;
  const double u = (u0 / lorentz + vx + k * vx) / den;
  const double v = (v0 / lorentz + vy + k * vy) / den;
  return prim2(rho, u, v, p);
}

std::vector<ProblemSpec> catalogue(const CatalogueOptions& options) {
  std::vector<ProblemSpec> out;

  {
    ProblemSpec p;
    p.name = "acc1d";
    p.summary = "1D smooth density wave, periodic";
    p.dim = 1;
    p.x0 = 0.0;
    p.x1 = 2.0 * std::numbers::pi;
    p.ic = [](double x, double) { return prim1(1.0 + 0.2 * std::sin(x), 0.2, 1.0); };
    p.exact = [](double x, double, double t) {
      return prim1(1.0 + 0.2 * std::sin(x - 0.2 * t), 0.2, 1.0);
    };
    p.bc = BoundaryCondition::all(BcKind::periodic);
    p.t_end = 0.1;
    p.default_nx = 320;
    p.accuracy_test = true;
    out.push_back(std::move(p));
  }

  out.push_back(riemann_1d("rp1", "1D Riemann problem: rarefaction, contact, shock",
                           prim1(10.0, 0.0, 40.0 / 3.0), prim1(1.0, 0.0, 1e-6), 5.0 / 3.0, 0.4));
  out.push_back(riemann_1d("rp2", "1D Riemann problem with a thin shell",
                           prim1(1.0, 0.0, 1e3), prim1(1.0, 0.0, 1e-2), 5.0 / 3.0, 0.4));
  out.push_back(riemann_1d("rp3", "1D Riemann problem: two shocks",
                           prim1(1.0, 0.9, 1.0), prim1(1.0, 0.0, 10.0), 4.0 / 3.0, 0.4));
  out.push_back(riemann_1d("rp4", "1D Riemann problem: two rarefactions",
                           prim1(1.0, -0.7, 20.0), prim1(1.0, 0.7, 20.0), 5.0 / 3.0, 0.4));

  {
    ProblemSpec p = riemann_1d("dp", "1D shock running into a density perturbation",
                               prim1(5.0, 0.0, 50.0), prim1(2.0, 0.0, 5.0), 5.0 / 3.0, 0.35);
    p.ic = [](double x, double) {
      return x < 0.5 ? prim1(5.0, 0.0, 50.0) : prim1(2.0 + 0.3 * std::sin(50.0 * x), 0.0, 5.0);
    };
    out.push_back(std::move(p));
  }

  {
    ProblemSpec p = riemann_1d("blast", "1D interaction of two blast waves",
                               prim1(1.0, 0.0, 1e3), prim1(1.0, 0.0, 1e2), 1.4, 0.43);
    p.ic = [](double x, double) {
      if (x < 0.1) return prim1(1.0, 0.0, 1e3);
      if (x < 0.9) return prim1(1.0, 0.0, 1e-2);
      return prim1(1.0, 0.0, 1e2);
    };
    p.default_nx = 4000;
    out.push_back(std::move(p));
  }

  {
    ProblemSpec p;
    p.name = "acc2d";
    p.summary = "2D boosted isentropic vortex, periodic";
    p.dim = 2;
    p.x0 = -5.0;
    p.x1 = 5.0;
    p.y0 = -5.0;
    p.y1 = 5.0;
    const double vb = -0.5;  // speed 0.5*sqrt(2) along (-1,-1)
    const double gamma = p.gamma;
    p.ic = [=](double x, double y) { return boosted_vortex(x, y, gamma, 5.0, vb, vb); };
    p.exact = [=](double x, double y, double t) {
      const double xs = periodic_shift(x, -vb * t, -5.0, 10.0);
      const double ys = periodic_shift(y, -vb * t, -5.0, 10.0);
      return boosted_vortex(xs, ys, gamma, 5.0, vb, vb);
    };
    p.bc = BoundaryCondition::all(BcKind::periodic);
    p.t_end = 20.0;
    p.default_nx = 80;
    p.default_ny = 80;
    p.accuracy_test = true;
    out.push_back(std::move(p));
  }

  out.push_back(riemann_2d("2drp1", "2D Riemann problem: four vortex sheets",
                           prim2(0.5, 0.5, -0.5, 5.0), prim2(1.0, 0.5, 0.5, 5.0),
                           prim2(3.0, -0.5, 0.5, 5.0), prim2(1.5, -0.5, -0.5, 5.0)));
  out.push_back(riemann_2d("2drp2", "2D Riemann problem: four rarefactions",
                           prim2(1.0, 0.0, 0.0, 1.0), prim2(0.5771, -0.3529, 0.0, 0.4),
                           prim2(1.0, -0.3529, -0.3529, 1.0), prim2(0.5771, 0.0, -0.3529, 0.4)));
  out.push_back(riemann_2d("2drp3", "2D Riemann problem: two shocks and two contacts",
                           prim2(0.035145216124503, 0.0, 0.0, 0.162931056509027),
                           prim2(0.1, 0.7, 0.0, 1.0), prim2(0.5, 0.0, 0.0, 1.0),
                           prim2(0.1, 0.0, 0.7, 1.0)));

  {
    ProblemSpec p;
    p.name = "sb";
    p.summary = "2D left-moving shock hitting a bubble";
    p.dim = 2;
    p.x0 = 0.0;
    p.x1 = 325.0;
    p.y0 = -45.0;
    p.y1 = 45.0;
    const ShockBubbleParams sb = options.shock_bubble;
    p.ic = [sb](double x, double y) {
      if (x >= 265.0) return prim2(1.865225080631180, -0.196781107378299, 0.0, 0.15);
      const double dx = x - sb.bubble_x;
      const double dy = y - sb.bubble_y;
      if (std::sqrt(dx * dx + dy * dy) <= sb.bubble_radius) {
        return prim2(sb.bubble_rho, 0.0, 0.0, 0.05);
      }
      return prim2(1.0, 0.0, 0.0, 0.05);
    };
    p.bc = {BcKind::outflow, BcKind::dirichlet, BcKind::reflective, BcKind::reflective};
    p.t_end = 450.0;
    p.default_nx = 650;
    p.default_ny = 180;
    out.push_back(std::move(p));
  }

  {
    ProblemSpec p;
    p.name = "sv";
    p.summary = "2D stationary shock interacting with a moving vortex";
    p.dim = 2;
    p.x0 = -17.0;
    p.x1 = 3.0;
    p.y0 = -5.0;
    p.y1 = 5.0;
    p.gamma = 1.4;
    p.ic = [](double x, double y) {
      if (x < -6.0) {
        return prim2(4.891497310766981, -0.388882958251919, 0.0, 11.894863258311670);
      }
      return boosted_vortex(x, y, 1.4, 5.0, -0.9, 0.0);
    };
    p.bc = {BcKind::outflow, BcKind::dirichlet, BcKind::reflective, BcKind::reflective};
    p.t_end = 19.0;
    p.default_nx = 800;
    p.default_ny = 400;
    out.push_back(std::move(p));
  }

  return out;
}

std::optional<ProblemSpec> find_problem(const std::string& name, const CatalogueOptions& options) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (ProblemSpec& p : catalogue(options)) {
    if (p.name == key) return std::move(p);
  }
  return std::nullopt;
}

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("error_norms: size mismatch");
  if (numeric.empty()) throw std::invalid_argument("error_norms: empty input");
  ErrorNorms out;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < numeric.size(); ++k) {
    const double e = std::abs(numeric[k] - exact[k]);
    out.l1 += e;
    sum_sq += e * e;
    out.linf = std::max(out.linf, e);
  }
  const double n = static_cast<double>(numeric.size());
  out.l1 /= n;
  out.l2 = std::sqrt(sum_sq / n);
  return out;
}

template <int Dim>
std::vector<double> interior_density(const Field<Dim>& field) {
  const Grid& g = field.grid;
  std::vector<double> rho;
  rho.reserve(g.interior_count());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) rho.push_back(field.w(i, j).rho);
  }
  return rho;
}

namespace {

template <int Dim>
std::vector<double> exact_density(const ProblemSpec& problem, const Grid& g, double t) {
  std::vector<double> rho;
  rho.reserve(g.interior_count());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      rho.push_back(problem.exact(g.xc(i), Dim == 2 ? g.yc(j) : 0.0, t).rho);
    }
  }
  return rho;
}

template <int Dim>
ErrorNorms run_and_measure(const ProblemSpec& problem, int n, const SchemeConfig& cfg,
                           const TimeControls& controls) {
  const Grid g = make_grid(problem, n, n);
  const RunResult<Dim> r = run<Dim>(problem, g, cfg, controls);
  return error_norms(interior_density(r.field), exact_density<Dim>(problem, g, r.t));
}

std::optional<double> observed_order(double e_coarse, double e_fine, int n_coarse, int n_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
  return std::log(e_coarse / e_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& problem,
                                              const std::vector<int>& resolutions,
                                              const SchemeConfig& cfg,
                                              const TimeControls& controls) {
  if (!problem.exact) {
    throw std::invalid_argument("problem " + problem.name + " has no exact solution");
  }
  std::vector<ConvergenceRow> rows;
  for (int n : resolutions) {
    ConvergenceRow row;
    row.n = n;
    row.err = problem.dim == 1 ? run_and_measure<1>(problem, n, cfg, controls)
                               : run_and_measure<2>(problem, n, cfg, controls);
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      row.order_l1 = observed_order(prev.err.l1, row.err.l1, prev.n, n);
      row.order_l2 = observed_order(prev.err.l2, row.err.l2, prev.n, n);
      row.order_linf = observed_order(prev.err.linf, row.err.linf, prev.n, n);
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

// Linear interpolation weights between the two fine cell centres bracketing x.
struct Bracket {
  int k = 0;
  double theta = 0.0;
};

Bracket bracket(double x, double origin, double h, int n) {
  const double s = (x - origin) / h - 0.5;
  int k = static_cast<int>(std::floor(s));
  k = std::clamp(k, 0, n - 2);
  return {k, s - k};
}

template <int Dim>
PrimState<Dim> lerp(const PrimState<Dim>& a, const PrimState<Dim>& b, double t) {
  if (t == 0.0) return a;
  PrimState<Dim> out;
  out.rho = a.rho + t * (b.rho - a.rho);
  for (int l = 0; l < Dim; ++l) out.vel[l] = a.vel[l] + t * (b.vel[l] - a.vel[l]);
  out.p = a.p + t * (b.p - a.p);
  return out;
}

}  // namespace

template <int Dim>
std::vector<PrimState<Dim>> reference_solution(const ProblemSpec& problem, int fine_n,
                                               const Grid& target, const TimeControls& controls) {
  if (fine_n % target.nx != 0 || (Dim == 2 && fine_n % target.ny != 0)) {
    throw std::invalid_argument("reference resolution must be a multiple of the target");
  }
  const Grid fine = make_grid(problem, fine_n, fine_n);
  SchemeConfig cfg;
  cfg.flux_mode = FluxMode::llf1;
  cfg.eos = EosParams(problem.gamma);
  TimeControls tc = controls;
  tc.accuracy_mode = false;
  tc.snapshot_dt = 0.0;
  const RunResult<Dim> r = run<Dim>(problem, fine, cfg, tc);

  std::vector<PrimState<Dim>> out;
  out.reserve(target.interior_count());
  for (int j = 0; j < target.ny; ++j) {
    for (int i = 0; i < target.nx; ++i) {
      const Bracket bx = bracket(target.xc(i), fine.x0, fine.dx, fine.nx);
      if constexpr (Dim == 1) {
        out.push_back(lerp(r.field.w(bx.k), r.field.w(bx.k + 1), bx.theta));
      } else {
        const Bracket by = bracket(target.yc(j), fine.y0, fine.dy, fine.ny);
        const PrimState<2> lo =
            lerp(r.field.w(bx.k, by.k), r.field.w(bx.k + 1, by.k), bx.theta);
        const PrimState<2> hi =
            lerp(r.field.w(bx.k, by.k + 1), r.field.w(bx.k + 1, by.k + 1), bx.theta);
        out.push_back(lerp(lo, hi, by.theta));
      }
    }
  }
  return out;
}

template <int Dim>
std::vector<double> schlieren(Field<Dim>& field, const BoundaryCondition& bc) {
  apply_boundary(field, bc);
  const Grid& g = field.grid;
  std::vector<double> out;
  out.reserve(g.interior_count());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double gx = (field.w(i + 1, j).rho - field.w(i - 1, j).rho) / (2.0 * g.dx);
      double gy = 0.0;
      if constexpr (Dim == 2) {
        gy = (field.w(i, j + 1).rho - field.w(i, j - 1).rho) / (2.0 * g.dy);
      }
      out.push_back(std::log10(1.0 + std::sqrt(gx * gx + gy * gy)));
    }
  }
  return out;
}

template std::vector<double> interior_density<1>(const Field<1>&);
template std::vector<double> interior_density<2>(const Field<2>&);
template std::vector<PrimState<1>> reference_solution<1>(const ProblemSpec&, int, const Grid&,
                                                         const TimeControls&);
template std::vector<PrimState<2>> reference_solution<2>(const ProblemSpec&, int, const Grid&,
                                                         const TimeControls&);
template std::vector<double> schlieren<1>(Field<1>&, const BoundaryCondition&);
template std::vector<double> schlieren<2>(Field<2>&, const BoundaryCondition&);

}  // namespace rhd
