#pragma once

#include <optional>
#include <string>
#include <variant>

#include "umeb/rational.hpp"

namespace umeb {

/// A real angle, canonicalised into [0, 2*pi).
///
/// Exact angles are stored as a reduced rational multiple of pi (p/q); they
/// embed into the cyclotomic field iff q divides 12. Float angles carry a
/// radian value and always select the float backend.
class Angle {
 public:
  Angle() : value_(Rational(0)) {}

  static Angle pi_frac(Rational multiple);
  static Angle pi_frac(long num, long den) { return pi_frac(Rational(num, den)); }
  static Angle radians(double value);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// The multiple of pi; throws NotRepresentable for float angles.
  const Rational& pi_multiple() const;
  double to_radians() const;

  /// k such that exp(i*theta) = zeta^k (zeta = exp(i*pi/12)), when it exists.
  std::optional<int> zeta_exponent() const;
  bool exact_embeddable() const { return zeta_exponent().has_value(); }

  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b);
  Angle operator-() const;

  /// Exact angles compare exactly; float angles compare their stored radians.
  friend bool operator==(const Angle& a, const Angle& b) = default;

 private:
  explicit Angle(std::variant<Rational, double> v) : value_(std::move(v)) {}
  std::variant<Rational, double> value_;
};

/// Distance on the circle, in radians, within [0, pi].
double circular_distance(const Angle& a, const Angle& b);

/// "p/q" for exact angles (multiple of pi), "<value>rad" otherwise.
std::string to_string(const Angle& a);

/// Inverse of to_string: "p/q" or "p" is a multiple of pi, a "rad" suffix
/// marks radians.
Angle parse_angle(const std::string& text);

}  // namespace umeb
