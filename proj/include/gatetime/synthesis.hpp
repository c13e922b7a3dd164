// Time-optimal Hamiltonian construction: the general three-parameter unitary
// family for a two-level system, its Hermitian generator, the unique
// minimum-time Hamiltonian for the phase-shifted NOT gate, and the known-state
// rotation construction.
#pragma once

#include "gatetime/bounds.hpp"
#include "gatetime/linalg.hpp"

namespace gatetime {

struct GateSpec {
  GatePhase theta;
  EnergyBudget energy;
};

// Parameters of the general unitary family: eigenvalues (e1, e2) of the
// generator and two frame angles. e1, e2 >= 0 (spectrum measured from the
// ground state); phi1, phi2 finite.
class UnitaryFamilyParams {
 public:
  UnitaryFamilyParams(double e1, double e2, double phi1, double phi2);

  double e1() const { return e1_; }
  double e2() const { return e2_; }
  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }

 private:
  double e1_, e2_, phi1_, phi2_;
};

// Arbitrary rotation of a known state by angle alpha in [0, pi/2] under
// budget E.
struct RotationSpec {
  double alpha;
  EnergyBudget energy;
  QubitState initial_state;
};

// The family evaluated literally: global factor exp(-i(e1+e2)t/2), diagonal
// cos^2(phi1)/sin^2(phi1) combination, off-diagonals
// 2i exp(+-i phi2) sin(phi1) cos(phi1) sin((e2-e1)t/2).
UnitaryOperator2 general_unitary(const UnitaryFamilyParams& params, double t);

// Hermitian generator h with general_unitary(params, t) = exp(-i h t) and
// eigenvalues {e1, e2}. The frame convention is fixed so phi1 = pi/4,
// phi2 = 0 yields (e1+e2)/2 * I + (e1-e2)/2 * sigma_x.
HermitianOperator2 family_hamiltonian(const UnitaryFamilyParams& params);

struct SynthesizedGate {
  HermitianOperator2 h;
  double tau;
};

// Minimum-time Hamiltonian for the phase-shifted NOT gate: eigenvalues from
// eigenvalue_pair(theta, E) in the phi1 = pi/4, phi2 = 0 frame, run for
// gate_min_time(theta, E). Evolving either basis state for tau swaps them
// and multiplies by exp(-i theta), full complex amplitudes included.
SynthesizedGate synthesize_gate(const GateSpec& spec);

struct SynthesizedRotation {
  HermitianOperator2 h;
  double tau;
};

// Hamiltonian with eigenvalues {0, 2E} whose eigenbasis splits the initial
// state into an equal superposition, run for rotation_min_time(alpha, E);
// the evolved overlap magnitude with the initial state is cos(alpha).
// Eigenvector global phase is fixed by making the first nonzero component of
// the lower eigenvector real positive.
SynthesizedRotation synthesize_rotation(const RotationSpec& spec);

}  // namespace gatetime
