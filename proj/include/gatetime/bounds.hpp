// Closed-form minimum-time bounds for a two-level system under an
// average-energy budget, plus the physical-units bridge (wavelength to gate
// time / level gap). Natural units: hbar = 1, so Planck's h = 2*pi, energies
// are angular frequencies and times their inverses.
#pragma once

#include <numbers>
#include <optional>

namespace gatetime {

namespace constants {
// Pinned SI constants; bit-reproducible outputs depend on these exact values.
inline constexpr double kSpeedOfLight = 2.99792458e8;    // m/s
inline constexpr double kPlanckJs = 6.62607015e-34;      // J*s
inline constexpr double kElectronVolt = 1.602176634e-19; // J
inline constexpr double kPlanckEvs = kPlanckJs / kElectronVolt;   // eV*s
inline constexpr double kHbarEvs =
    kPlanckEvs / (2.0 * std::numbers::pi);                        // eV*s
}  // namespace constants

// Strictly positive average-energy budget (natural units, or eV at the
// boundary).
class EnergyBudget {
 public:
  explicit EnergyBudget(double value);  // throws std::domain_error unless > 0
  double value() const { return value_; }

 private:
  double value_;
};

// Gate phase shift, normalized into [0, 2*pi) on construction.
class GatePhase {
 public:
  explicit GatePhase(double radians);
  double theta() const { return theta_; }
  // theta reduced modulo pi, in [0, pi).
  double theta_mod_pi() const;
  // True on the second half-open branch, pi <= theta < 2*pi.
  bool high_branch() const { return theta_ >= std::numbers::pi; }

 private:
  double theta_;
};

struct EigenvaluePair {
  double e1;
  double e2;
};

// Minimum time to reach an orthogonal state: h/(4E) = pi/(2E).
double orthogonality_time(EnergyBudget energy);

// Minimum time of the phase-shifted NOT gate:
// (h/4E) * (1 + 2*(theta mod pi)/pi). Sawtooth in theta with period pi,
// discontinuous at multiples of pi (the formula, not its closure, is the
// contract).
double gate_min_time(GatePhase theta, EnergyBudget energy);

// Hamiltonian eigenvalues realizing the gate at the minimum time. Both are
// >= 0 (energies measured from the ground state), their mean is E, and their
// ratio is theta/(theta+pi) for theta in [0,pi) and (theta-pi)/theta for
// theta in [pi,2*pi).
EigenvaluePair eigenvalue_pair(GatePhase theta, EnergyBudget energy);

// Minimum time to rotate a known state by angle alpha in [0, pi/2]
// (overlap magnitude cos(alpha)): alpha*h/(2*pi*E) = alpha/E.
double rotation_min_time(double alpha, EnergyBudget energy);

// Gate time of a resonant transition with the given wavelength:
// lambda/(2c), SI seconds.
double physical_gate_time(double wavelength_nm);

// Level gap matching the wavelength: h*c/lambda, in eV.
double resonant_gap_from_wavelength(double wavelength_nm);

// Natural-units time (with energies quoted in eV) to SI seconds.
double seconds_from_natural(double time_natural);

// One gate's analytic bound next to what a synthesized Hamiltonian achieved
// and (optionally) what the independent search found.
struct SpeedLimitReport {
  GatePhase theta;
  EnergyBudget energy;
  double tau_analytic;
  double e1;
  double e2;
  double achieved_fidelity;
  double phase_residual;
  std::optional<double> oracle_min_time;
};

}  // namespace gatetime
