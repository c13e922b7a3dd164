#include "gatetime/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace gatetime {

double wrap_phase_distance(double x, double y) {
  const double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(x - y), two_pi);
  return std::min(d, two_pi - d);
}

GateCheckResult check_gate(const UnitaryOperator2& u, GatePhase theta,
                           double tol) {
  if (!(tol > 0.0)) {
    throw std::domain_error("check_gate: tolerance must be > 0");
  }
  const cx ov1 = inner(QubitState::basis0(), apply(u, QubitState::basis1()));
  const cx ov2 = inner(QubitState::basis1(), apply(u, QubitState::basis0()));
  GateCheckResult r;
  r.fidelity1 = std::abs(ov1);
  r.fidelity2 = std::abs(ov2);
  r.phase1 = std::arg(ov1);
  r.phase2 = std::arg(ov2);
  r.phase_target = -theta.theta();
  r.passed = r.fidelity1 >= 1.0 - tol && r.fidelity2 >= 1.0 - tol &&
             wrap_phase_distance(r.phase1, r.phase_target) <= tol &&
             wrap_phase_distance(r.phase2, r.phase_target) <= tol;
  return r;
}

bool check_rotation(const UnitaryOperator2& u, const QubitState& initial,
                    double alpha, double tol) {
  if (!(tol > 0.0)) {
    throw std::domain_error("check_rotation: tolerance must be > 0");
  }
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha > std::numbers::pi / 2.0) {
    throw std::domain_error("check_rotation: alpha must lie in [0, pi/2]");
  }
  const double overlap = std::abs(inner(apply(u, initial), initial));
  return std::abs(overlap - std::cos(alpha)) < tol;
}

SpeedLimitReport build_report(const GateSpec& spec,
                              std::optional<double> oracle_min_time) {
  const SynthesizedGate gate = synthesize_gate(spec);
  const EigenvaluePair pair = eigenvalue_pair(spec.theta, spec.energy);
  const UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
  const GateCheckResult check = check_gate(u, spec.theta, 1e-9);
  SpeedLimitReport report{spec.theta,
                          spec.energy,
                          gate.tau,
                          pair.e1,
                          pair.e2,
                          std::min(check.fidelity1, check.fidelity2),
                          std::max(
                              wrap_phase_distance(check.phase1,
                                                  check.phase_target),
                              wrap_phase_distance(check.phase2,
                                                  check.phase_target)),
                          oracle_min_time};
  return report;
}

}  // namespace gatetime
