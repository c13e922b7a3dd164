// Independent numerical oracle for the minimum gate/rotation times: a
// brute-force grid over all constant two-level Hamiltonians that satisfy the
// spectrum and average-energy constraints, scanning time for the earliest
// tolerance-pass, followed by deterministic local refinement. Success is
// decided by direct evolution only; the closed-form bounds never enter the
// search, so the oracle is able to falsify them.
#pragma once

#include <variant>
#include <vector>

#include "gatetime/bounds.hpp"
#include "gatetime/linalg.hpp"
#include "gatetime/synthesis.hpp"

namespace gatetime {

struct RotationTarget {
  double alpha;  // in [0, pi/2]
  QubitState initial_state;
};

using SearchTarget = std::variant<GatePhase, RotationTarget>;

struct SearchConfig {
  EnergyBudget energy;
  SearchTarget target;
  int grid_e;        // samples per eigenvalue dimension (gap and mean)
  int grid_phi1;     // frame polar-angle samples on [0, pi/2]
  int grid_phi2;     // frame azimuth samples on [0, 2*pi)
  double time_resolution;
  double time_horizon;
  double success_tol;      // scan tolerance; refinement tightens to 1e-6
  int refine_iterations;   // coordinate-descent rounds

  // Defaults: grids 64/32/32, time step tau/200, horizon 2*tau, tolerance
  // 1e-3, 3 refinement rounds. The grids are snapped so the analytically
  // optimal point is searched exactly.
  static SearchConfig for_gate(GatePhase theta, EnergyBudget energy);
  static SearchConfig for_rotation(double alpha, QubitState initial_state,
                                   EnergyBudget energy);

  // Throws std::domain_error on invalid counts/tolerances. Short horizons are
  // legal (they produce a not-found result); the factory defaults always
  // cover at least 1.5x the analytic time.
  void validate() const;
};

struct SearchResult {
  bool found;                      // false: nothing passed within the horizon
  double min_time_found;           // 0 when not found
  UnitaryFamilyParams best_params; // zeros when not found
  double analytic_time;
  double margin;                   // min_time_found/analytic_time - 1
  long long evaluations;           // direct-evolution evaluations performed
};

// Earliest time at which any Hamiltonian on the constraint grid performs the
// phase-shifted NOT gate within success_tol (both overlap magnitudes and
// both phases). The grid covers (gap, mean, phi1, phi2) with eigenvalues
// >= 0 and both basis-state energy averages <= E; the reduction is a
// minimum with lexicographically-smallest-parameter tie-break, so the result
// is independent of evaluation order. The _serial variant runs the identical
// code on one thread and returns bit-identical results.
//
// Targets whose phase sits within the check tolerance of a sawtooth branch
// point (theta mod pi close to 0 at that scale) are achieved on the shorter
// branch: the minimum time of a toleranced gate is genuinely discontinuous
// there.
SearchResult search_min_gate_time(const SearchConfig& config);
SearchResult search_min_gate_time_serial(const SearchConfig& config);

// Same search with success criterion |<psi(t)|psi(0)>| <= cos(alpha) +
// success_tol (reaching at least angle alpha).
SearchResult search_min_rotation_time(const SearchConfig& config);
SearchResult search_min_rotation_time_serial(const SearchConfig& config);

// One report per theta, order preserved. When with_oracle is set, each
// report carries the oracle minimum from a reduced grid (one search runs per
// theta; grid snapping keeps the found time exact regardless of grid size).
std::vector<SpeedLimitReport> sweep_sawtooth(
    const std::vector<GatePhase>& thetas, EnergyBudget energy,
    bool with_oracle);

}  // namespace gatetime
