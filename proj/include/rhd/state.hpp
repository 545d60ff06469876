#pragma once

// Physical state representations for special relativistic hydrodynamics with
// an ideal-gas equation of state: primitive/conservative variables, the
// pressure-recovery solve, physical fluxes, the entropy pair and the
// characteristic speeds.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace rhd {

template <int Dim>
using StateVec = std::array<double, Dim + 2>;

template <int Dim>
inline constexpr int kNumVars = Dim + 2;

enum class Axis : int { x = 0, y = 1 };

/// Adiabatic index of the ideal-gas closure p = (Γ-1) ρ e.
class EosParams {
 public:
  explicit EosParams(double gamma = 5.0 / 3.0);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

template <int Dim>
struct PrimState {
  double rho = 1.0;
  std::array<double, Dim> vel{};
  double p = 1.0;
};

/// Conservative vector (D, m_1..m_Dim, E). Layout is exactly Dim+2 doubles so
/// arrays of states can be processed as flat double buffers.
template <int Dim>
struct ConsState {
  StateVec<Dim> q{};

  double D() const { return q[0]; }
  double mom(int l) const { return q[1 + l]; }
  double E() const { return q[Dim + 1]; }
};

static_assert(sizeof(ConsState<1>) == 3 * sizeof(double));
static_assert(sizeof(ConsState<2>) == 4 * sizeof(double));

template <int Dim>
struct EntropyQuantities {
  double eta = 0.0;
  std::array<double, Dim> q{};
  StateVec<Dim> V{};
  std::array<double, Dim> psi{};
};

/// Raised when a conservative state has no admissible primitive preimage, or
/// when an evolved state leaves the admissible set.
class NonPhysicalState : public std::runtime_error {
 public:
  explicit NonPhysicalState(const std::string& what, long cell = -1, int stage = -1);

  long cell() const { return cell_; }
  int stage() const { return stage_; }

 private:
  long cell_;
  int stage_;
};

template <int Dim>
double speed_squared(const PrimState<Dim>& w);

template <int Dim>
double lorentz_factor(const PrimState<Dim>& w);

/// ρ>0, p>0, |u|<1, all finite.
template <int Dim>
bool admissible(const PrimState<Dim>& w);

/// h = 1 + Γ p / ((Γ-1) ρ)
template <int Dim>
double specific_enthalpy(const PrimState<Dim>& w, const EosParams& eos);

template <int Dim>
ConsState<Dim> prim_to_cons(const PrimState<Dim>& w, const EosParams& eos);

/// Recovers primitives by a safeguarded Newton solve for the pressure.
/// `p_guess` is the pressure from the previous stage when available.
/// Throws NonPhysicalState when no positive-pressure subluminal root exists.
template <int Dim>
PrimState<Dim> cons_to_prim(const ConsState<Dim>& U, const EosParams& eos,
                            std::optional<double> p_guess = std::nullopt);

template <int Dim>
StateVec<Dim> physical_flux(const PrimState<Dim>& w, const ConsState<Dim>& U, Axis dir);

template <int Dim>
StateVec<Dim> entropy_variables(const PrimState<Dim>& w, const EosParams& eos);

template <int Dim>
EntropyQuantities<Dim> entropy_quantities(const PrimState<Dim>& w, const EosParams& eos);

/// c_s = sqrt(Γ p / (ρ h))
template <int Dim>
double sound_speed(const PrimState<Dim>& w, const EosParams& eos);

/// Eigenvalues of ∂F_dir/∂U ordered (acoustic-, material..., acoustic+).
template <int Dim>
StateVec<Dim> char_speeds(const PrimState<Dim>& w, const EosParams& eos, Axis dir);

template <int Dim>
double max_abs_char_speed(const PrimState<Dim>& w, const EosParams& eos, Axis dir);

}  // namespace rhd
