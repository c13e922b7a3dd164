#include "gatetime/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gatetime {

bool finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Matrix2 Matrix2::identity() {
  Matrix2 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

Matrix2 Matrix2::zero() { return Matrix2{}; }

Matrix2 Matrix2::pauli_x() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix2 Matrix2::pauli_y() {
  Matrix2 m;
  m(0, 1) = cx(0, -1);
  m(1, 0) = cx(0, 1);
  return m;
}

Matrix2 Matrix2::pauli_z() {
  Matrix2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Matrix2 Matrix2::adjoint() const {
  Matrix2 r;
  r(0, 0) = std::conj((*this)(0, 0));
  r(0, 1) = std::conj((*this)(1, 0));
  r(1, 0) = std::conj((*this)(0, 1));
  r(1, 1) = std::conj((*this)(1, 1));
  return r;
}

bool Matrix2::all_finite() const {
  for (const cx& z : e) {
    if (!finite(z)) return false;
  }
  return true;
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  r(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
  r(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
  r(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
  r(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
  return r;
}

Matrix2 operator*(cx s, const Matrix2& a) {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
  return r;
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

QubitState::QubitState(cx a, cx b) : a_(a), b_(b) {
  if (!finite(a) || !finite(b)) {
    throw std::invalid_argument("QubitState: non-finite amplitude");
  }
  double n2 = std::norm(a) + std::norm(b);
  if (std::abs(n2 - 1.0) > kStateNormTol) {
    throw std::invalid_argument("QubitState: norm " + std::to_string(n2) +
                                " not 1 within tolerance");
  }
}

QubitState QubitState::normalized(cx a, cx b) {
  if (!finite(a) || !finite(b)) {
    throw std::invalid_argument("QubitState: non-finite amplitude");
  }
  double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n == 0.0) {
    throw std::invalid_argument("QubitState: cannot normalize zero vector");
  }
  return QubitState(a / n, b / n);
}

HermitianOperator2::HermitianOperator2(const Matrix2& m, double tol) : m_(m) {
  if (!m.all_finite()) {
    throw std::invalid_argument("HermitianOperator2: non-finite entry");
  }
  double r = hermiticity_residual(m);
  if (r > tol) {
    throw std::invalid_argument("HermitianOperator2: hermiticity residual " +
                                std::to_string(r) + " exceeds tolerance");
  }
}

double HermitianOperator2::hermiticity_residual(const Matrix2& m) {
  double r = std::abs(m(0, 1) - std::conj(m(1, 0)));
  r = std::max(r, std::abs(m(0, 0).imag()));
  r = std::max(r, std::abs(m(1, 1).imag()));
  return r;
}

UnitaryOperator2::UnitaryOperator2(const Matrix2& m, double tol) : m_(m) {
  if (!m.all_finite()) {
    throw std::invalid_argument("UnitaryOperator2: non-finite entry");
  }
  double r = unitarity_residual(m);
  if (r > tol) {
    throw std::invalid_argument("UnitaryOperator2: unitarity residual " +
                                std::to_string(r) + " exceeds tolerance");
  }
}

double UnitaryOperator2::unitarity_residual(const Matrix2& m) {
  return max_abs_diff(m.adjoint() * m, Matrix2::identity());
}

namespace {

// Phase-fix an orthonormal pair component: rotate so the first component with
// nonzero magnitude is real positive.
QubitState phase_fixed(cx a, cx b) {
  cx ref = (std::abs(a) != 0.0) ? a : b;
  double mag = std::abs(ref);
  if (mag == 0.0) return QubitState(a, b);  // zero vector rejected downstream
  cx phase = std::conj(ref) / mag;
  return QubitState(a * phase, b * phase);
}

}  // namespace

EigenSystem2 eig_hermitian(const HermitianOperator2& h) {
  const Matrix2& m = h.matrix();
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  // Symmetrized off-diagonal; within construction tolerance of both entries.
  const cx off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(off));
  const double lo = mean - half_gap;
  const double hi = mean + half_gap;

  if (std::abs(off) == 0.0) {
    // Diagonal: computational basis, ties broken in basis order.
    if (a <= d) {
      return {a, d, QubitState::basis0(), QubitState::basis1()};
    }
    return {d, a, QubitState::basis1(), QubitState::basis0()};
  }

  // (off, hi - a) spans the high eigenvector; hi - a > 0 whenever off != 0.
  const cx va = off;
  const double vb = hi - a;
  const double n = std::sqrt(std::norm(va) + vb * vb);
  QubitState vec_high = phase_fixed(va / n, cx(vb / n, 0.0));
  QubitState vec_low =
      phase_fixed(cx(-vb / n, 0.0), std::conj(va) / n);
  return {lo, hi, vec_low, vec_high};
}

UnitaryOperator2 expm_from_spectrum(const EigenSystem2& s, double t) {
  const cx plo = std::polar(1.0, -s.eigenvalue_low * t);
  const cx phi = std::polar(1.0, -s.eigenvalue_high * t);
  const cx la = s.eigvec_low.a(), lb = s.eigvec_low.b();
  const cx ha = s.eigvec_high.a(), hb = s.eigvec_high.b();
  Matrix2 m;
  m(0, 0) = plo * la * std::conj(la) + phi * ha * std::conj(ha);
  m(0, 1) = plo * la * std::conj(lb) + phi * ha * std::conj(hb);
  m(1, 0) = plo * lb * std::conj(la) + phi * hb * std::conj(ha);
  m(1, 1) = plo * lb * std::conj(lb) + phi * hb * std::conj(hb);
  return UnitaryOperator2(m, UnitaryOperator2::Unchecked{});
}

UnitaryOperator2 expm_hermitian(const HermitianOperator2& h, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("expm_hermitian: non-finite time");
  }
  return expm_from_spectrum(eig_hermitian(h), t);
}

QubitState apply(const UnitaryOperator2& u, const QubitState& s) {
  const Matrix2& m = u.matrix();
  return QubitState(m(0, 0) * s.a() + m(0, 1) * s.b(),
                    m(1, 0) * s.a() + m(1, 1) * s.b());
}

cx inner(const QubitState& s1, const QubitState& s2) {
  return std::conj(s1.a()) * s2.a() + std::conj(s1.b()) * s2.b();
}

}  // namespace gatetime
