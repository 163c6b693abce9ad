#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>

#include "umeb/rational.hpp"

namespace umeb {

/// An element of the cyclotomic field Q(zeta), zeta = exp(i*pi/12), stored as
/// coordinates over the power basis {1, zeta, ..., zeta^7} of Q[x]/(Phi_24),
/// Phi_24(x) = x^8 - x^4 + 1.
///
/// The field contains i = zeta^6, sqrt(2) = zeta^3 + zeta^-3 and
/// sqrt(3) = zeta^2 + zeta^-2, so every phase exp(i*k*pi/12) and every
/// normalisation 1/sqrt(2), 1/sqrt(3), 1/sqrt(6) is representable exactly.
/// The representation is canonical: two values are equal iff their
/// coefficient arrays are equal.
class Cyclo {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kOrder = 24;
  using Coefficients = std::array<Rational, kDegree>;

  Cyclo() = default;
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclo(Rational value);
  explicit Cyclo(Coefficients coeffs) : coeffs_(std::move(coeffs)) {}

  /// zeta^k for any integer k.
  static Cyclo zeta(long k);
  static Cyclo i() { return zeta(6); }
  static Cyclo sqrt2();
  static Cyclo sqrt3();
  static Cyclo sqrt6();

  const Coefficients& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True iff the value lies in the real subfield (fixed by conjugation).
  bool is_real() const;
  /// The value as a rational number, if it is one.
  std::optional<Rational> as_rational() const;

  /// Complex conjugation, zeta^k -> zeta^(24-k).
  Cyclo conj() const;
  /// Multiplicative inverse via extended Euclid against Phi_24.
  /// Throws DivisionByZero for zero.
  Cyclo inv() const;

  std::complex<double> to_complex() const;

  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator*=(const Rational& rhs);
  Cyclo& operator/=(const Cyclo& rhs) { return *this *= rhs.inv(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, const Rational& b) { return a *= b; }
  friend Cyclo operator*(const Rational& a, Cyclo b) { return b *= a; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b) = default;

 private:
  Coefficients coeffs_{};
};

inline Cyclo conj(const Cyclo& a) { return a.conj(); }
inline Cyclo inv(const Cyclo& a) { return a.inv(); }
/// a * conj(a); always in the real subfield.
inline Cyclo abs2(const Cyclo& a) { return a * a.conj(); }

std::ostream& operator<<(std::ostream& os, const Cyclo& value);

}  // namespace umeb
