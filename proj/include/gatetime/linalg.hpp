// Dependency-free complex 2x2 linear algebra for two-level-system dynamics:
// Hermitian eigendecomposition in closed form, matrix exponentials via the
// spectral form, and normalized state arithmetic. Natural units (hbar = 1)
// throughout.
#pragma once

#include <array>
#include <complex>

namespace gatetime {

using cx = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kStateNormTol = 1e-12;

bool finite(cx z);

// 2x2 complex matrix, row-major storage.
struct Matrix2 {
  std::array<cx, 4> e{};

  cx& operator()(int r, int c) { return e[2 * r + c]; }
  const cx& operator()(int r, int c) const { return e[2 * r + c]; }

  static Matrix2 identity();
  static Matrix2 zero();
  static Matrix2 pauli_x();
  static Matrix2 pauli_y();
  static Matrix2 pauli_z();

  Matrix2 adjoint() const;
  bool all_finite() const;

  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(cx s, const Matrix2& a);
};

// Largest elementwise |a - b|.
double max_abs_diff(const Matrix2& a, const Matrix2& b);

// Normalized two-level state (|a|^2 + |b|^2 = 1). Slot a is the |0> basis
// amplitude, slot b the |1> amplitude.
class QubitState {
 public:
  QubitState(cx a, cx b);  // throws std::invalid_argument unless unit norm

  // Rescales (a, b) to unit norm; throws std::invalid_argument on the zero
  // vector or non-finite input.
  static QubitState normalized(cx a, cx b);

  static QubitState basis0() { return QubitState(cx(1, 0), cx(0, 0)); }
  static QubitState basis1() { return QubitState(cx(0, 0), cx(1, 0)); }

  cx a() const { return a_; }
  cx b() const { return b_; }

 private:
  cx a_, b_;
};

// Hermitian 2x2 operator. Construction validates m == m^dagger elementwise
// within tol and rejects violations instead of symmetrizing.
class HermitianOperator2 {
 public:
  explicit HermitianOperator2(const Matrix2& m, double tol = kHermitianTol);

  const Matrix2& matrix() const { return m_; }

  static double hermiticity_residual(const Matrix2& m);

 private:
  Matrix2 m_;
};

// Unitary 2x2 operator. Public construction validates u^dagger u == I within
// tol; spectral reconstruction uses the unchecked path (unitary by
// construction).
class UnitaryOperator2 {
 public:
  explicit UnitaryOperator2(const Matrix2& m, double tol = kUnitaryTol);

  const Matrix2& matrix() const { return m_; }

  static double unitarity_residual(const Matrix2& m);

 private:
  struct Unchecked {};
  UnitaryOperator2(const Matrix2& m, Unchecked) : m_(m) {}
  friend UnitaryOperator2 expm_from_spectrum(const struct EigenSystem2& s,
                                             double t);
  Matrix2 m_;
};

struct EigenSystem2 {
  double eigenvalue_low;
  double eigenvalue_high;
  QubitState eigvec_low;
  QubitState eigvec_high;
};

// Closed-form eigendecomposition (trace/determinant, no iteration).
// eigenvalue_low <= eigenvalue_high; eigenvectors orthonormal, phase fixed so
// the first nonzero component is real positive. Degenerate spectra return the
// computational basis.
EigenSystem2 eig_hermitian(const HermitianOperator2& h);

// exp(-i h t) assembled from a precomputed eigendecomposition.
UnitaryOperator2 expm_from_spectrum(const EigenSystem2& s, double t);

// exp(-i h t) via spectral decomposition.
UnitaryOperator2 expm_hermitian(const HermitianOperator2& h, double t);

QubitState apply(const UnitaryOperator2& u, const QubitState& s);

// <s1|s2> with conjugation on the first argument.
cx inner(const QubitState& s1, const QubitState& s2);

}  // namespace gatetime
