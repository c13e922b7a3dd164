// Gate and rotation acceptance checks. The gate check compares full complex
// amplitudes: both overlap magnitudes and both overlap phases against the
// target phase, since the overall phase of the state matters when the qubit
// belongs to a larger register.
#pragma once

#include <optional>

#include "gatetime/bounds.hpp"
#include "gatetime/linalg.hpp"
#include "gatetime/synthesis.hpp"

namespace gatetime {

struct GateCheckResult {
  double fidelity1;     // |<1|u|0>| after the swap, i.e. |<basis0|u basis1>|
  double fidelity2;     // |<basis1|u basis0>|
  double phase1;        // arg of the first overlap
  double phase2;        // arg of the second overlap
  double phase_target;  // -theta
  bool passed;          // both fidelities >= 1-tol, both phases within tol
};

// Principal wrap-around distance between two angles: min(|d|, 2*pi - |d|).
double wrap_phase_distance(double x, double y);

// Does u swap the basis states and add phase exp(-i theta), within tol on
// both fidelity and phase? Phase comparison is modulo 2*pi.
GateCheckResult check_gate(const UnitaryOperator2& u, GatePhase theta,
                           double tol);

// True iff | |<u initial|initial>| - cos(alpha) | < tol.
bool check_rotation(const UnitaryOperator2& u, const QubitState& initial,
                    double alpha, double tol);

// Synthesize the gate, evolve, check at tolerance 1e-9, and assemble the
// report; raw residuals are always carried so callers can apply their own
// thresholds.
SpeedLimitReport build_report(const GateSpec& spec,
                              std::optional<double> oracle_min_time);

}  // namespace gatetime
