#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <ostream>

#include "lfmsemi/errors.hpp"

namespace lfmsemi {

using Complex = std::complex<double>;

namespace tol {
// |det| below singular * ||m||^3 counts as non-invertible.
inline constexpr double singular = 1e-12;
// Eigenvalue clustering distance, relative to ||m||_F.
inline constexpr double cluster = 1e-7;
// Kernel pivot threshold for (m - lambda I)^k, relative to ||m||_F^k.
inline constexpr double rank = 1e-8;
// Jordan reconstruction ceiling, relative to ||m||_F.
inline constexpr double recon = 1e-6;
// Width of the ball-boundary band when classifying fixed points.
inline constexpr double boundary = 1e-7;
}  // namespace tol

inline bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Principal power w^t = exp(t Log w), Log the principal branch (arg in (-pi, pi]).
inline Complex principal_pow(Complex w, double t) {
  if (t == 0.0) return Complex(1.0, 0.0);
  if (t == 1.0) return w;
  return std::exp(t * std::log(w));
}

struct Vec2 {
  Complex x{}, y{};

  Vec2() = default;
  Vec2(Complex x_, Complex y_) : x(x_), y(y_) {
    if (!finite(x) || !finite(y)) fail(Errc::Precondition, "non-finite vector entry");
  }

  double norm_sq() const { return std::norm(x) + std::norm(y); }
  double norm() const { return std::sqrt(norm_sq()); }

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Complex s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

// Standard Hermitian product <z, c> = z1 conj(c1) + z2 conj(c2).
inline Complex inner(const Vec2& z, const Vec2& c) {
  return z.x * std::conj(c.x) + z.y * std::conj(c.y);
}

struct Vec3 {
  std::array<Complex, 3> e{};

  Vec3() = default;
  Vec3(Complex a, Complex b, Complex c) : e{a, b, c} {
    for (const auto& v : e)
      if (!finite(v)) fail(Errc::Precondition, "non-finite vector entry");
  }

  Complex& operator[](int i) { return e[static_cast<size_t>(i)]; }
  const Complex& operator[](int i) const { return e[static_cast<size_t>(i)]; }

  double norm_sq() const { return std::norm(e[0]) + std::norm(e[1]) + std::norm(e[2]); }
  double norm() const { return std::sqrt(norm_sq()); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]};
  }
  friend Vec3 operator*(Complex s, const Vec3& v) { return {s * v.e[0], s * v.e[1], s * v.e[2]}; }
};

inline Complex inner(const Vec3& a, const Vec3& b) {
  return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) + a[2] * std::conj(b[2]);
}

struct Mat2 {
  std::array<Complex, 4> e{};  // row-major

  Mat2() = default;
  Mat2(Complex a, Complex b, Complex c, Complex d) : e{a, b, c, d} {
    for (const auto& v : e)
      if (!finite(v)) fail(Errc::Precondition, "non-finite matrix entry");
  }

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex& operator()(int i, int j) { return e[static_cast<size_t>(2 * i + j)]; }
  const Complex& operator()(int i, int j) const { return e[static_cast<size_t>(2 * i + j)]; }

  friend Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y, m(1, 0) * v.x + m(1, 1) * v.y};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
  }

  Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
};

struct Mat3 {
  std::array<Complex, 9> e{};  // row-major

  Mat3() = default;
  Mat3(std::initializer_list<Complex> v) {
    if (v.size() != 9) fail(Errc::Precondition, "Mat3 needs 9 entries");
    int i = 0;
    for (const auto& x : v) {
      if (!finite(x)) fail(Errc::Precondition, "non-finite matrix entry");
      e[static_cast<size_t>(i++)] = x;
    }
  }

  static Mat3 identity() {
    Mat3 m;
    m.e[0] = m.e[4] = m.e[8] = 1.0;
    return m;
  }

  Complex& operator()(int i, int j) { return e[static_cast<size_t>(3 * i + j)]; }
  const Complex& operator()(int i, int j) const { return e[static_cast<size_t>(3 * i + j)]; }

  Vec3 col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }
  void set_col(int j, const Vec3& v) {
    for (int i = 0; i < 3; ++i) (*this)(i, j) = v[i];
  }

  Complex trace() const { return e[0] + e[4] + e[8]; }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : e) s += std::norm(v);
    return std::sqrt(s);
  }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend Mat3 operator*(Complex s, const Mat3& m) {
    Mat3 r;
    for (size_t i = 0; i < 9; ++i) r.e[i] = s * m.e[i];
    return r;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
  }
  friend Vec3 operator*(const Mat3& m, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return r;
  }

  Mat3 adjoint() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }
};

inline Complex det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) { return a * b; }

// Adjugate inverse; throws SingularMatrix when |det| <= tol::singular * ||m||^3.
inline Mat3 mat_inverse(const Mat3& m) {
  const Complex d = det3(m);
  const double n = m.frobenius_norm();
  if (std::abs(d) <= tol::singular * n * n * n)
    fail(Errc::SingularMatrix, "determinant below threshold");
  const Complex inv_d = 1.0 / d;
  Mat3 r;
  r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) * inv_d;
  r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) * inv_d;
  r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) * inv_d;
  r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) * inv_d;
  r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) * inv_d;
  r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) * inv_d;
  r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) * inv_d;
  r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) * inv_d;
  r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) * inv_d;
  return r;
}

inline Mat3 mat_pow_int(const Mat3& m, int n) {
  if (n < 0) return mat_pow_int(mat_inverse(m), -n);
  Mat3 r = Mat3::identity();
  Mat3 base = m;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const Mat3& m) {
  for (int i = 0; i < 3; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < 3; ++j) os << m(i, j) << (j < 2 ? ", " : "");
    os << (i == 2 ? "]" : "\n");
  }
  return os;
}

}  // namespace lfmsemi
