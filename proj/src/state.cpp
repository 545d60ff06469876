#include "rhd/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rhd {

namespace {

constexpr double kNewtonRelTol = 1e-14;
constexpr int kNewtonMaxIter = 50;
constexpr double kPressureFloor = 1e-14;
constexpr double kBisectLo = 1e-16;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string describe_cons(const double* q, int n) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (int k = 0; k < n; ++k) os << (k ? ", " : "") << q[k];
  os << ")";
  return os.str();
}

// Residual of E + p = D W + Γ/(Γ-1) p W^2 and its derivative, with the
// velocity implied by p through |u| = |m| / (E + p).
struct PressureResidual {
  double D, E, mabs, g;

  double lorentz(double p) const {
    const double ep = E + p;
    return ep / std::sqrt((ep - mabs) * (ep + mabs));
  }

  double value(double p) const {
    const double W = lorentz(p);
    return D * W + g * p * W * W - E - p;
  }

  double derivative(double p) const {
    const double ep = E + p;
    const double W = lorentz(p);
    const double v2 = (mabs / ep) * (mabs / ep);
    const double dW = -W * W * W * v2 / ep;
    return D * dW + g * (W * W + 2.0 * p * W * dW) - 1.0;
  }
};

}  // namespace

EosParams::EosParams(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0 && gamma <= 2.0)) {
    throw std::invalid_argument("adiabatic index must lie in (1, 2]");
  }
}

NonPhysicalState::NonPhysicalState(const std::string& what, long cell, int stage)
    : std::runtime_error(what), cell_(cell), stage_(stage) {}

template <int Dim>
double speed_squared(const PrimState<Dim>& w) {
  double s = 0.0;
  for (int l = 0; l < Dim; ++l) s += w.vel[l] * w.vel[l];
  return s;
}

template <int Dim>
double lorentz_factor(const PrimState<Dim>& w) {
  return 1.0 / std::sqrt(1.0 - speed_squared(w));
}

template <int Dim>
bool admissible(const PrimState<Dim>& w) {
  if (!std::isfinite(w.rho) || !std::isfinite(w.p)) return false;
  for (double u : w.vel) {
    if (!std::isfinite(u)) return false;
  }
  return w.rho > 0.0 && w.p > 0.0 && speed_squared(w) < 1.0;
}

template <int Dim>
double specific_enthalpy(const PrimState<Dim>& w, const EosParams& eos) {
  const double g = eos.gamma();
  return 1.0 + g * w.p / ((g - 1.0) * w.rho);
}

template <int Dim>
ConsState<Dim> prim_to_cons(const PrimState<Dim>& w, const EosParams& eos) {
  const double W = lorentz_factor(w);
  const double h = specific_enthalpy(w, eos);
  const double rhw2 = w.rho * h * W * W;
  ConsState<Dim> U;
  U.q[0] = w.rho * W;
  for (int l = 0; l < Dim; ++l) U.q[1 + l] = rhw2 * w.vel[l];
  U.q[Dim + 1] = rhw2 - w.p;
  return U;
}

template <int Dim>
PrimState<Dim> cons_to_prim(const ConsState<Dim>& U, const EosParams& eos,
                            std::optional<double> p_guess) {
  const double D = U.D();
  const double E = U.E();
  double m2 = 0.0;
  for (int l = 0; l < Dim; ++l) m2 += U.mom(l) * U.mom(l);
  const double mabs = std::sqrt(m2);

  bool finite = std::isfinite(D) && std::isfinite(E) && std::isfinite(m2);
  if (!finite || !(D > 0.0) || !(E > mabs)) {
    throw NonPhysicalState("inadmissible conservative state " +
                           describe_cons(U.q.data(), Dim + 2));
  }

  const double g = eos.gamma() / (eos.gamma() - 1.0);
  const PressureResidual f{D, E, mabs, g};

  double p = p_guess ? std::max(*p_guess, kPressureFloor)
                     : std::max((eos.gamma() - 1.0) * (E - D), kPressureFloor);
  bool converged = false;
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    const double r = f.value(p);
    if (std::abs(r) <= 4.0 * kEps * (E + p)) {
      converged = true;
      break;
    }
    const double dr = f.derivative(p);
    const double p_new = p - r / dr;
    if (!std::isfinite(p_new) || p_new <= 0.0) break;
    const bool small_step = std::abs(p_new - p) <= kNewtonRelTol * p_new;
    p = p_new;
    if (small_step) {
      converged = true;
      break;
    }
  }

  if (!converged) {
    double lo = kBisectLo;
    double hi = 10.0 * E;
    if (!(f.value(lo) < 0.0) || !(f.value(hi) > 0.0)) {
      throw NonPhysicalState("no positive pressure root for conservative state " +
                             describe_cons(U.q.data(), Dim + 2));
    }
    for (int it = 0; it < 400 && hi - lo > kNewtonRelTol * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f.value(mid) > 0.0 ? hi : lo) = mid;
    }
    p = 0.5 * (lo + hi);
  }

  const double ep = E + p;
  const double W = f.lorentz(p);
  PrimState<Dim> w;
  w.rho = D / W;
  w.p = p;
  for (int l = 0; l < Dim; ++l) w.vel[l] = U.mom(l) / ep;
  if (!admissible(w)) {
    throw NonPhysicalState("pressure recovery produced an inadmissible state from " +
                           describe_cons(U.q.data(), Dim + 2));
  }
  return w;
}

template <int Dim>
StateVec<Dim> physical_flux(const PrimState<Dim>& w, const ConsState<Dim>& U, Axis dir) {
  const int d = static_cast<int>(dir);
  const double ud = w.vel[d];
  StateVec<Dim> F;
  F[0] = U.D() * ud;
  for (int l = 0; l < Dim; ++l) F[1 + l] = U.mom(l) * ud;
  F[1 + d] += w.p;
  F[Dim + 1] = U.mom(d);
  return F;
}

template <int Dim>
StateVec<Dim> entropy_variables(const PrimState<Dim>& w, const EosParams& eos) {
  const double g = eos.gamma();
  const double W = lorentz_factor(w);
  const double S = std::log(w.p) - g * std::log(w.rho);
  const double beta = w.rho / w.p;
  StateVec<Dim> V;
  V[0] = (g - S) / (g - 1.0) + beta;
  for (int l = 0; l < Dim; ++l) V[1 + l] = beta * W * w.vel[l];
  V[Dim + 1] = -beta * W;
  return V;
}

template <int Dim>
EntropyQuantities<Dim> entropy_quantities(const PrimState<Dim>& w, const EosParams& eos) {
  const double g = eos.gamma();
  const double W = lorentz_factor(w);
  const double S = std::log(w.p) - g * std::log(w.rho);
  EntropyQuantities<Dim> e;
  e.eta = -w.rho * W * S / (g - 1.0);
  for (int l = 0; l < Dim; ++l) {
    e.q[l] = -w.rho * w.vel[l] * W * S / (g - 1.0);
    e.psi[l] = w.rho * W * w.vel[l];
  }
  e.V = entropy_variables(w, eos);
  return e;
}

template <int Dim>
double sound_speed(const PrimState<Dim>& w, const EosParams& eos) {
  const double h = specific_enthalpy(w, eos);
  return std::sqrt(eos.gamma() * w.p / (w.rho * h));
}

template <int Dim>
StateVec<Dim> char_speeds(const PrimState<Dim>& w, const EosParams& eos, Axis dir) {
  const double c = sound_speed(w, eos);
  StateVec<Dim> lam;
  if constexpr (Dim == 1) {
    const double u = w.vel[0];
    lam = {(u - c) / (1.0 - u * c), u, (u + c) / (1.0 + u * c)};
  } else {
    const int d = static_cast<int>(dir);
    const double un = w.vel[d];
    const double ut = w.vel[1 - d];
    const double c2 = c * c;
    const double v2 = un * un + ut * ut;
    const double W = 1.0 / std::sqrt(1.0 - v2);
    const double root = (c / W) * std::sqrt(1.0 - un * un - ut * ut * c2);
    const double den = 1.0 - v2 * c2;
    lam = {(un * (1.0 - c2) - root) / den, un, un, (un * (1.0 - c2) + root) / den};
  }
  return lam;
}

template <int Dim>
double max_abs_char_speed(const PrimState<Dim>& w, const EosParams& eos, Axis dir) {
  const StateVec<Dim> lam = char_speeds(w, eos, dir);
  double m = 0.0;
  for (double l : lam) m = std::max(m, std::abs(l));
  return m;
}

#define RHD_INSTANTIATE_STATE(D)                                                          \
  template double speed_squared<D>(const PrimState<D>&);                                 \
  template double lorentz_factor<D>(const PrimState<D>&);                                \
  template bool admissible<D>(const PrimState<D>&);                                      \
  template double specific_enthalpy<D>(const PrimState<D>&, const EosParams&);           \
  template ConsState<D> prim_to_cons<D>(const PrimState<D>&, const EosParams&);          \
  template PrimState<D> cons_to_prim<D>(const ConsState<D>&, const EosParams&,           \
                                        std::optional<double>);                          \
  template StateVec<D> physical_flux<D>(const PrimState<D>&, const ConsState<D>&, Axis); \
  template StateVec<D> entropy_variables<D>(const PrimState<D>&, const EosParams&);      \
  template EntropyQuantities<D> entropy_quantities<D>(const PrimState<D>&,               \
                                                      const EosParams&);                 \
  template double sound_speed<D>(const PrimState<D>&, const EosParams&);                 \
  template StateVec<D> char_speeds<D>(const PrimState<D>&, const EosParams&, Axis);      \
  template double max_abs_char_speed<D>(const PrimState<D>&, const EosParams&, Axis);

RHD_INSTANTIATE_STATE(1)
RHD_INSTANTIATE_STATE(2)

#undef RHD_INSTANTIATE_STATE

}  // namespace rhd
