#include "gatetime/synthesis.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace gatetime;

namespace {

constexpr double kPi = std::numbers::pi;

UnitaryFamilyParams random_params(std::mt19937_64& rng) {
  return UnitaryFamilyParams(testutil::uniform(rng, 0.0, 3.0),
                             testutil::uniform(rng, 0.0, 3.0),
                             testutil::uniform(rng, 0.0, 2.0 * kPi),
                             testutil::uniform(rng, 0.0, 2.0 * kPi));
}

// Residual of U psi1 = exp(-i theta) psi2 and U psi2 = exp(-i theta) psi1,
// measured on full complex amplitudes.
double gate_amplitude_residual(const UnitaryOperator2& u, double theta) {
  const cx phase = std::polar(1.0, -theta);
  const QubitState out1 = apply(u, QubitState::basis1());
  const QubitState out2 = apply(u, QubitState::basis0());
  double r = std::abs(out1.a() - phase);
  r = std::max(r, std::abs(out1.b()));
  r = std::max(r, std::abs(out2.b() - phase));
  r = std::max(r, std::abs(out2.a()));
  return r;
}

}  // namespace

TEST_CASE("family params validate their invariants") {
  CHECK_NOTHROW(UnitaryFamilyParams(0.0, 2.0, 0.3, 0.4));
  CHECK_THROWS_AS(UnitaryFamilyParams(-0.1, 2.0, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(UnitaryFamilyParams(0.0, 2.0, std::nan(""), 0.0),
                  std::invalid_argument);
}

TEST_CASE("general unitary reduces to the literal swap-gate form at phi1=pi/4, phi2=0") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const double e1 = testutil::uniform(rng, 0.0, 3.0);
    const double e2 = testutil::uniform(rng, 0.0, 3.0);
    const double t = testutil::uniform(rng, 0.0, 5.0);
    UnitaryOperator2 u =
        general_unitary(UnitaryFamilyParams(e1, e2, kPi / 4.0, 0.0), t);
    CHECK(max_abs_diff(u.matrix(), testutil::swap_gate_unitary(e1, e2, t)) <
          1e-12);
  }
}

TEST_CASE("general unitary is the identity at t = 0") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    UnitaryOperator2 u = general_unitary(random_params(rng), 0.0);
    CHECK(max_abs_diff(u.matrix(), Matrix2::identity()) < 1e-14);
  }
}

TEST_CASE("general unitary is diagonal at phi1 = 0") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 50; ++i) {
    const double e1 = testutil::uniform(rng, 0.0, 3.0);
    const double e2 = testutil::uniform(rng, 0.0, 3.0);
    const double t = testutil::uniform(rng, 0.0, 5.0);
    UnitaryOperator2 u = general_unitary(
        UnitaryFamilyParams(e1, e2, 0.0, testutil::uniform(rng, 0.0, 6.0)), t);
    CHECK(max_abs_diff(u.matrix(), testutil::diagonal_unitary(e1, e2, t)) <
          1e-12);
  }
}

TEST_CASE("general unitary stays unitary across the family") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 500; ++i) {
    UnitaryOperator2 u =
        general_unitary(random_params(rng), testutil::uniform(rng, 0.0, 8.0));
    CHECK(UnitaryOperator2::unitarity_residual(u.matrix()) < 1e-10);
  }
}

TEST_CASE("family Hamiltonian: frozen symmetric case (E1,E2) = (1,3)") {
  HermitianOperator2 h =
      family_hamiltonian(UnitaryFamilyParams(1.0, 3.0, kPi / 4.0, 0.0));
  Matrix2 expected;
  expected(0, 0) = 2.0;
  expected(1, 1) = 2.0;
  expected(0, 1) = -1.0;
  expected(1, 0) = -1.0;
  CHECK(max_abs_diff(h.matrix(), expected) < 1e-12);
}

TEST_CASE("family Hamiltonian: diagonal at phi1 = 0") {
  HermitianOperator2 h =
      family_hamiltonian(UnitaryFamilyParams(0.4, 2.6, 0.0, 1.3));
  Matrix2 expected;
  expected(0, 0) = 0.4;
  expected(1, 1) = 2.6;
  CHECK(max_abs_diff(h.matrix(), expected) < 1e-12);
}

TEST_CASE("family Hamiltonian generates the family and keeps its spectrum") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 200; ++i) {
    UnitaryFamilyParams p = random_params(rng);
    HermitianOperator2 h = family_hamiltonian(p);
    for (double t : {0.2, 0.9, 2.7}) {
      CHECK(max_abs_diff(expm_hermitian(h, t).matrix(),
                         general_unitary(p, t).matrix()) < 1e-10);
    }
    EigenSystem2 es = eig_hermitian(h);
    CHECK(es.eigenvalue_low ==
          doctest::Approx(std::min(p.e1(), p.e2())).epsilon(1e-12));
    CHECK(es.eigenvalue_high ==
          doctest::Approx(std::max(p.e1(), p.e2())).epsilon(1e-12));
  }
}

TEST_CASE("synthesize_gate: theta = 0 swaps the basis states in time pi/2") {
  SynthesizedGate gate =
      synthesize_gate(GateSpec{GatePhase(0.0), EnergyBudget(1.0)});
  Matrix2 expected;
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(0, 1) = -1.0;
  expected(1, 0) = -1.0;
  CHECK(max_abs_diff(gate.h.matrix(), expected) < 1e-12);
  CHECK(gate.tau == doctest::Approx(kPi / 2.0));
  UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
  CHECK(gate_amplitude_residual(u, 0.0) < 1e-10);
}

TEST_CASE("synthesize_gate: theta = pi/2 adds phase -i in time pi") {
  SynthesizedGate gate =
      synthesize_gate(GateSpec{GatePhase(kPi / 2.0), EnergyBudget(1.0)});
  CHECK(gate.tau == doctest::Approx(kPi));
  UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
  const QubitState out = apply(u, QubitState::basis1());
  CHECK(std::abs(out.a() - cx(0.0, -1.0)) < 1e-10);
  CHECK(std::abs(out.b()) < 1e-10);
  CHECK(gate_amplitude_residual(u, kPi / 2.0) < 1e-10);
}

TEST_CASE("synthesize_gate: theta = pi flips the sigma_x sign and the phase") {
  SynthesizedGate gate =
      synthesize_gate(GateSpec{GatePhase(kPi), EnergyBudget(1.0)});
  Matrix2 expected;
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(0, 1) = 1.0;
  expected(1, 0) = 1.0;
  CHECK(max_abs_diff(gate.h.matrix(), expected) < 1e-12);
  CHECK(gate.tau == doctest::Approx(kPi / 2.0));
  UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
  const QubitState out = apply(u, QubitState::basis1());
  CHECK(std::abs(out.a() - cx(-1.0, 0.0)) < 1e-10);
  CHECK(gate_amplitude_residual(u, kPi) < 1e-10);
}

TEST_CASE("synthesized gates reproduce the target across theta and energy") {
  for (double energy : {0.5, 1.0, 3.0}) {
    for (int i = 0; i < 100; ++i) {
      const double theta = 2.0 * kPi * i / 100.0;
      GateSpec spec{GatePhase(theta), EnergyBudget(energy)};
      SynthesizedGate gate = synthesize_gate(spec);
      UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
      CHECK(gate_amplitude_residual(u, theta) < 1e-10);
    }
  }
}

TEST_CASE("synthesized gates hold the average energy on both basis states") {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 200; ++i) {
    const double energy = testutil::uniform(rng, 0.1, 5.0);
    GateSpec spec{GatePhase(testutil::uniform(rng, 0.0, 2.0 * kPi)),
                  EnergyBudget(energy)};
    const Matrix2& m = synthesize_gate(spec).h.matrix();
    CHECK(std::abs(m(0, 0).real() - energy) <= 1e-12 * energy);
    CHECK(std::abs(m(1, 1).real() - energy) <= 1e-12 * energy);
  }
}

TEST_CASE("states with Re(a conj b) = 0 are mapped to orthogonal states") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 500; ++i) {
    GateSpec spec{GatePhase(testutil::uniform(rng, 0.0, 2.0 * kPi)),
                  EnergyBudget(1.0)};
    SynthesizedGate gate = synthesize_gate(spec);
    UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
    QubitState in = testutil::random_quarter_phase_state(rng);
    CHECK(std::abs(inner(in, apply(u, in))) < 1e-10);
  }
}

TEST_CASE("states with |Re(a conj b)| > 0.1 are not mapped to orthogonal states") {
  std::mt19937_64 rng(38);
  for (int i = 0; i < 500; ++i) {
    GateSpec spec{GatePhase(testutil::uniform(rng, 0.0, 2.0 * kPi)),
                  EnergyBudget(1.0)};
    SynthesizedGate gate = synthesize_gate(spec);
    UnitaryOperator2 u = expm_hermitian(gate.h, gate.tau);
    QubitState in = testutil::random_correlated_state(rng);
    CHECK(std::abs(inner(in, apply(u, in))) > 0.05);
  }
}

TEST_CASE("synthesize_rotation: orthogonal target at alpha = pi/2") {
  RotationSpec spec{kPi / 2.0, EnergyBudget(1.0), QubitState::basis1()};
  SynthesizedRotation rot = synthesize_rotation(spec);
  CHECK(rot.tau == doctest::Approx(kPi / 2.0));
  UnitaryOperator2 u = expm_hermitian(rot.h, rot.tau);
  CHECK(std::abs(inner(apply(u, spec.initial_state), spec.initial_state)) <
        1e-10);
}

TEST_CASE("synthesize_rotation: alpha = 0 keeps the state") {
  RotationSpec spec{0.0, EnergyBudget(1.0), QubitState::basis0()};
  SynthesizedRotation rot = synthesize_rotation(spec);
  CHECK(rot.tau == 0.0);
  UnitaryOperator2 u = expm_hermitian(rot.h, rot.tau);
  CHECK(std::abs(inner(apply(u, spec.initial_state), spec.initial_state)) ==
        doctest::Approx(1.0));
}

TEST_CASE("synthesize_rotation: alpha = pi/3 from basis0 reaches overlap 1/2") {
  RotationSpec spec{kPi / 3.0, EnergyBudget(1.0), QubitState::basis0()};
  SynthesizedRotation rot = synthesize_rotation(spec);
  CHECK(rot.tau == doctest::Approx(kPi / 3.0));
  UnitaryOperator2 u = expm_hermitian(rot.h, rot.tau);
  CHECK(std::abs(inner(apply(u, spec.initial_state), spec.initial_state)) ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("synthesize_rotation: spectrum {0, 2E} and an even split of the state") {
  std::mt19937_64 rng(39);
  for (int i = 0; i < 200; ++i) {
    const double energy = testutil::uniform(rng, 0.1, 4.0);
    RotationSpec spec{testutil::uniform(rng, 0.0, kPi / 2.0),
                      EnergyBudget(energy), testutil::random_state(rng)};
    SynthesizedRotation rot = synthesize_rotation(spec);
    EigenSystem2 es = eig_hermitian(rot.h);
    CHECK(std::abs(es.eigenvalue_low) < 1e-12 * energy);
    CHECK(es.eigenvalue_high ==
          doctest::Approx(2.0 * energy).epsilon(1e-12));
    CHECK(std::abs(inner(es.eigvec_low, spec.initial_state)) ==
          doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
    CHECK(std::abs(inner(es.eigvec_high, spec.initial_state)) ==
          doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
    // Average energy in the known state is exactly the budget.
    const Matrix2& m = rot.h.matrix();
    const QubitState& s = spec.initial_state;
    const cx avg = std::conj(s.a()) * (m(0, 0) * s.a() + m(0, 1) * s.b()) +
                   std::conj(s.b()) * (m(1, 0) * s.a() + m(1, 1) * s.b());
    CHECK(avg.real() == doctest::Approx(energy).epsilon(1e-12));
  }
}

TEST_CASE("synthesize_rotation: overlap magnitude is cos(alpha) across the range") {
  for (int i = 0; i <= 20; ++i) {
    const double alpha = kPi / 2.0 * i / 20.0;
    RotationSpec spec{alpha, EnergyBudget(1.0), QubitState::basis1()};
    SynthesizedRotation rot = synthesize_rotation(spec);
    CHECK(rot.tau == doctest::Approx(alpha).epsilon(1e-12));
    UnitaryOperator2 u = expm_hermitian(rot.h, rot.tau);
    CHECK(std::abs(inner(apply(u, spec.initial_state), spec.initial_state)) ==
          doctest::Approx(std::cos(alpha)).epsilon(1e-10));
  }
}
