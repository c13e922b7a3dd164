#include "gatetime/synthesis.hpp"

#include <cmath>
#include <stdexcept>

namespace gatetime {

namespace {
constexpr cx kI = cx(0.0, 1.0);
}

UnitaryFamilyParams::UnitaryFamilyParams(double e1, double e2, double phi1,
                                         double phi2)
    : e1_(e1), e2_(e2), phi1_(phi1), phi2_(phi2) {
  if (!std::isfinite(e1) || !std::isfinite(e2) || e1 < 0.0 || e2 < 0.0) {
    throw std::invalid_argument(
        "UnitaryFamilyParams: eigenvalues must be finite and >= 0");
  }
  if (!std::isfinite(phi1) || !std::isfinite(phi2)) {
    throw std::invalid_argument(
        "UnitaryFamilyParams: phase parameters must be finite");
  }
}

UnitaryOperator2 general_unitary(const UnitaryFamilyParams& p, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("general_unitary: non-finite time");
  }
  const double half_gap_t = 0.5 * (p.e2() - p.e1()) * t;
  const cx global = std::polar(1.0, -0.5 * (p.e1() + p.e2()) * t);
  const double c1 = std::cos(p.phi1());
  const double s1 = std::sin(p.phi1());
  const cx plus = std::polar(1.0, half_gap_t);
  const cx minus = std::conj(plus);
  const cx off = 2.0 * kI * s1 * c1 * std::sin(half_gap_t);

  Matrix2 m;
  m(0, 0) = global * (c1 * c1 * plus + s1 * s1 * minus);
  m(0, 1) = global * (off * std::polar(1.0, p.phi2()));
  m(1, 0) = global * (off * std::polar(1.0, -p.phi2()));
  m(1, 1) = global * (c1 * c1 * minus + s1 * s1 * plus);
  return UnitaryOperator2(m);
}

HermitianOperator2 family_hamiltonian(const UnitaryFamilyParams& p) {
  const double mean = 0.5 * (p.e1() + p.e2());
  const double half_gap = 0.5 * (p.e2() - p.e1());
  const double c2 = std::cos(2.0 * p.phi1());
  const double s2 = std::sin(2.0 * p.phi1());
  // Axis components reproducing the family under exp(-i h t):
  // n = (-sin(2 phi1) cos(phi2), sin(2 phi1) sin(phi2), -cos(2 phi1)).
  Matrix2 m;
  m(0, 0) = mean - half_gap * c2;
  m(1, 1) = mean + half_gap * c2;
  m(0, 1) = -half_gap * s2 * std::polar(1.0, p.phi2());
  m(1, 0) = std::conj(m(0, 1));
  return HermitianOperator2(m);
}

SynthesizedGate synthesize_gate(const GateSpec& spec) {
  const EigenvaluePair pair = eigenvalue_pair(spec.theta, spec.energy);
  const UnitaryFamilyParams params(pair.e1, pair.e2, std::numbers::pi / 4.0,
                                   0.0);
  return {family_hamiltonian(params), gate_min_time(spec.theta, spec.energy)};
}

SynthesizedRotation synthesize_rotation(const RotationSpec& spec) {
  const double tau = rotation_min_time(spec.alpha, spec.energy);
  const cx sa = spec.initial_state.a();
  const cx sb = spec.initial_state.b();
  // Orthogonal complement of the initial state.
  const cx pa = -std::conj(sb);
  const cx pb = std::conj(sa);
  // v1 = (s - p)/sqrt(2) carries eigenvalue 2E, v0 = (s + p)/sqrt(2) spans
  // the kernel, so the initial state splits evenly between the two. The
  // projector below is invariant under v1's global phase; basis recovery
  // goes through eig_hermitian's deterministic phase convention.
  const double inv_rt2 = 1.0 / std::numbers::sqrt2;
  const cx v1a = (sa - pa) * inv_rt2;
  const cx v1b = (sb - pb) * inv_rt2;

  const double e_hi = 2.0 * spec.energy.value();
  Matrix2 m;
  m(0, 0) = e_hi * std::norm(v1a);
  m(1, 1) = e_hi * std::norm(v1b);
  m(0, 1) = e_hi * v1a * std::conj(v1b);
  m(1, 0) = std::conj(m(0, 1));
  return {HermitianOperator2(m), tau};
}

}  // namespace gatetime
