#pragma once

#include <complex>
#include <string_view>
#include <variant>

#include "umeb/angle.hpp"
#include "umeb/cyclo.hpp"
#include "umeb/errors.hpp"

namespace umeb {

using Complex = std::complex<double>;

enum class Backend { Exact, Float };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view text);

/// Equality threshold for the float backend. Ignored by the exact backend.
struct Tolerance {
  double eq = 1e-10;
};

/// Backend-tagged scalar: exact cyclotomic value or a double-precision complex.
class Scalar {
 public:
  Scalar() : value_(Cyclo()) {}
  Scalar(Cyclo v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Complex v) : value_(v) {}           // NOLINT(google-explicit-constructor)

  Backend backend() const {
    return std::holds_alternative<Cyclo>(value_) ? Backend::Exact : Backend::Float;
  }
  bool is_exact() const { return backend() == Backend::Exact; }
  const Cyclo& exact() const { return std::get<Cyclo>(value_); }
  Complex to_complex() const;

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

 private:
  std::variant<Cyclo, Complex> value_;
};

/// exp(i*theta). Exact when theta is a multiple of pi/12, float otherwise.
Scalar phase(const Angle& theta);

/// a * conj(a); exact inputs give a real-subfield cyclotomic value.
Scalar abs2(const Scalar& a);

inline Complex to_complex(const Cyclo& v) { return v.to_complex(); }
inline Complex to_complex(const Complex& v) { return v; }

inline Complex conj(const Complex& v) { return std::conj(v); }

/// Per-backend constants and comparisons used by the generic linear algebra.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Cyclo> {
  static constexpr Backend backend = Backend::Exact;
  static Cyclo from_rational(const Rational& r) { return Cyclo(r); }
  static Cyclo sqrt2() { return Cyclo::sqrt2(); }
  static Cyclo sqrt3() { return Cyclo::sqrt3(); }
  static Cyclo i() { return Cyclo::i(); }
  static Cyclo inv(const Cyclo& v) { return v.inv(); }
  /// Throws NotRepresentable if theta is not a multiple of pi/12.
  static Cyclo phase(const Angle& theta);
  static bool is_zero(const Cyclo& v, Tolerance) { return v.is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Backend backend = Backend::Float;
  static Complex from_rational(const Rational& r) { return {to_double(r), 0.0}; }
  static Complex sqrt2();
  static Complex sqrt3();
  static Complex i() { return {0.0, 1.0}; }
  static Complex inv(const Complex& v);
  static Complex phase(const Angle& theta);
  static bool is_zero(const Complex& v, Tolerance tol) { return std::abs(v) < tol.eq; }
};

/// Exact equality, or |a - b| < tol for floats.
template <class T>
bool approx_equal(const T& a, const T& b, Tolerance tol) {
  return ScalarTraits<T>::is_zero(a - b, tol);
}

/// |a - b| evaluated in double precision; exactly 0 when exact values agree.
template <class T>
double deviation(const T& a, const T& b) {
  return std::abs(to_complex(a - b));
}

/// Re(a * conj(b)) == 0, i.e. a and b perpendicular as plane vectors.
template <class T>
T perpendicularity_defect(const T& a, const T& b) {
  using std::conj;
  using umeb::conj;
  const T p = a * conj(b);
  return (p + conj(p)) * ScalarTraits<T>::from_rational(Rational(1, 2));
}

}  // namespace umeb
