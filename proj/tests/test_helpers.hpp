// Shared test utilities: deterministic random generators and independent
// oracles (truncated Taylor series for the matrix exponential, the literal
// swap-gate unitary formula). The oracles deliberately avoid the library's
// spectral evolution path so they can falsify it.
#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "gatetime/linalg.hpp"

namespace testutil {

using gatetime::cx;
using gatetime::Matrix2;
using gatetime::QubitState;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Matrix2 random_hermitian_matrix(std::mt19937_64& rng,
                                       double scale = 2.0) {
  Matrix2 m;
  m(0, 0) = uniform(rng, -scale, scale);
  m(1, 1) = uniform(rng, -scale, scale);
  m(0, 1) = cx(uniform(rng, -scale, scale), uniform(rng, -scale, scale));
  m(1, 0) = std::conj(m(0, 1));
  return m;
}

inline gatetime::HermitianOperator2 random_hermitian(std::mt19937_64& rng,
                                                     double scale = 2.0) {
  return gatetime::HermitianOperator2(random_hermitian_matrix(rng, scale));
}

inline QubitState random_state(std::mt19937_64& rng) {
  return QubitState::normalized(
      cx(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)),
      cx(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)));
}

// State with Re(a * conj(b)) = 0: amplitudes with relative phase +-pi/2.
inline QubitState random_quarter_phase_state(std::mt19937_64& rng) {
  const double mix = uniform(rng, 0.0, std::numbers::pi / 2.0);
  const double global = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  const double rel = (uniform(rng, 0.0, 1.0) < 0.5 ? 1.0 : -1.0) *
                     std::numbers::pi / 2.0;
  return QubitState(std::polar(std::cos(mix), global + rel),
                    std::polar(std::sin(mix), global));
}

// State with |Re(a * conj(b))| > 0.1, by rejection.
inline QubitState random_correlated_state(std::mt19937_64& rng) {
  for (;;) {
    QubitState s = random_state(rng);
    if (std::abs((s.a() * std::conj(s.b())).real()) > 0.1) return s;
  }
}

inline double frobenius_norm(const Matrix2& m) {
  double s = 0.0;
  for (const cx& z : m.e) s += std::norm(z);
  return std::sqrt(s);
}

// 30-term Taylor series of exp(-i h t); independent of the spectral path.
inline Matrix2 taylor_expm(const Matrix2& h, double t) {
  const Matrix2 a = cx(0.0, -t) * h;
  Matrix2 sum = Matrix2::identity();
  Matrix2 term = Matrix2::identity();
  for (int k = 1; k < 30; ++k) {
    term = cx(1.0 / k, 0.0) * (term * a);
    sum = sum + term;
  }
  return sum;
}

// The minimum-time gate unitary evaluated literally:
// exp(-i(e1+e2)t/2) * [[cos d, i sin d], [i sin d, cos d]], d = (e2-e1)t/2.
inline Matrix2 swap_gate_unitary(double e1, double e2, double t) {
  const double d = 0.5 * (e2 - e1) * t;
  const cx global = std::polar(1.0, -0.5 * (e1 + e2) * t);
  const cx i(0.0, 1.0);
  Matrix2 m;
  m(0, 0) = global * std::cos(d);
  m(0, 1) = global * i * std::sin(d);
  m(1, 0) = global * i * std::sin(d);
  m(1, 1) = global * std::cos(d);
  return m;
}

// The diagonal evolution operator: diag(exp(-i e1 t), exp(-i e2 t)).
inline Matrix2 diagonal_unitary(double e1, double e2, double t) {
  Matrix2 m;
  m(0, 0) = std::polar(1.0, -e1 * t);
  m(1, 1) = std::polar(1.0, -e2 * t);
  return m;
}

inline double state_distance(const QubitState& x, const QubitState& y) {
  return std::max(std::abs(x.a() - y.a()), std::abs(x.b() - y.b()));
}

}  // namespace testutil
