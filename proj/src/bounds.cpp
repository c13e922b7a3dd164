#include "gatetime/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gatetime {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

EnergyBudget::EnergyBudget(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::domain_error("EnergyBudget: requires a finite value > 0, got " +
                            std::to_string(value));
  }
}

GatePhase::GatePhase(double radians) {
  if (!std::isfinite(radians)) {
    throw std::domain_error("GatePhase: non-finite angle");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2*pi
  theta_ = r;
}

double GatePhase::theta_mod_pi() const {
  return theta_ < kPi ? theta_ : theta_ - kPi;
}

double orthogonality_time(EnergyBudget energy) {
  return kPi / (2.0 * energy.value());
}

double gate_min_time(GatePhase theta, EnergyBudget energy) {
  return (kPi / (2.0 * energy.value())) *
         (1.0 + 2.0 * theta.theta_mod_pi() / kPi);
}

EigenvaluePair eigenvalue_pair(GatePhase theta, EnergyBudget energy) {
  const double th = theta.theta();
  const double e = energy.value();
  if (!theta.high_branch()) {
    const double denom = 2.0 * th + kPi;
    return {2.0 * e * th / denom, 2.0 * e * (th + kPi) / denom};
  }
  const double denom = 2.0 * th - kPi;
  return {2.0 * e * th / denom, 2.0 * e * (th - kPi) / denom};
}

double rotation_min_time(double alpha, EnergyBudget energy) {
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > kPi / 2.0) {
    throw std::domain_error("rotation_min_time: alpha must lie in [0, pi/2]");
  }
  return alpha / energy.value();
}

double physical_gate_time(double wavelength_nm) {
  if (!std::isfinite(wavelength_nm) || wavelength_nm <= 0.0) {
    throw std::domain_error("physical_gate_time: wavelength must be > 0 nm");
  }
  return wavelength_nm * 1e-9 / (2.0 * constants::kSpeedOfLight);
}

double resonant_gap_from_wavelength(double wavelength_nm) {
  if (!std::isfinite(wavelength_nm) || wavelength_nm <= 0.0) {
    throw std::domain_error(
        "resonant_gap_from_wavelength: wavelength must be > 0 nm");
  }
  return constants::kPlanckEvs * constants::kSpeedOfLight /
         (wavelength_nm * 1e-9);
}

double seconds_from_natural(double time_natural) {
  return time_natural * constants::kHbarEvs;
}

}  // namespace gatetime
