#include "umeb/scalar.hpp"

#include <cmath>
#include <string>

namespace umeb {

std::string_view to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::Exact;
  if (text == "float") return Backend::Float;
  throw ParseError("unknown backend '" + std::string(text) + "'");
}

Complex Scalar::to_complex() const {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->to_complex();
  return std::get<Complex>(value_);
}

Scalar phase(const Angle& theta) {
  if (auto k = theta.zeta_exponent()) return Cyclo::zeta(*k);
  return ScalarTraits<Complex>::phase(theta);
}

Scalar abs2(const Scalar& a) {
  if (a.is_exact()) return umeb::abs2(a.exact());
  const Complex v = a.to_complex();
  return Complex(std::norm(v), 0.0);
}

Cyclo ScalarTraits<Cyclo>::phase(const Angle& theta) {
  if (auto k = theta.zeta_exponent()) return Cyclo::zeta(*k);
  throw NotRepresentable("angle " + to_string(theta) +
                         " is not a multiple of pi/12; use the float backend");
}

Complex ScalarTraits<Complex>::sqrt2() { return {std::sqrt(2.0), 0.0}; }

Complex ScalarTraits<Complex>::sqrt3() { return {std::sqrt(3.0), 0.0}; }

Complex ScalarTraits<Complex>::inv(const Complex& v) {
  if (v == Complex(0.0, 0.0)) throw DivisionByZero();
  return 1.0 / v;
}

Complex ScalarTraits<Complex>::phase(const Angle& theta) {
  return std::polar(1.0, theta.to_radians());
}

}  // namespace umeb
