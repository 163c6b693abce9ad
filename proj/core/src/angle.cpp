#include "umeb/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "umeb/errors.hpp"

namespace umeb {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Rational wrap_pi_multiple(Rational r) {
  // Into [0, 2).
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  const BigInt period = 2 * den;
  BigInt rem = num % period;
  if (rem < 0) rem += period;
  return Rational(rem, den);
}

double wrap_radians(double v) {
  double r = std::fmod(v, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

Angle Angle::pi_frac(Rational multiple) { return Angle(wrap_pi_multiple(std::move(multiple))); }

Angle Angle::radians(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("angle must be finite");
  return Angle(wrap_radians(value));
}

const Rational& Angle::pi_multiple() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw NotRepresentable("angle " + to_string(*this) + " is not a rational multiple of pi");
}

double Angle::to_radians() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return to_double(*r) * std::numbers::pi;
  return std::get<double>(value_);
}

std::optional<int> Angle::zeta_exponent() const {
  const auto* r = std::get_if<Rational>(&value_);
  if (r == nullptr) return std::nullopt;
  const Rational scaled = *r * 12;
  if (boost::multiprecision::denominator(scaled) != 1) return std::nullopt;
  return boost::multiprecision::numerator(scaled).convert_to<int>();
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) return Angle::pi_frac(a.pi_multiple() + b.pi_multiple());
  return Angle::radians(a.to_radians() + b.to_radians());
}

Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }

Angle Angle::operator-() const {
  if (is_exact()) return pi_frac(-pi_multiple());
  return radians(-to_radians());
}

double circular_distance(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) {
    Rational d = (a - b).pi_multiple();
    if (d > 1) d = 2 - d;
    return to_double(d) * std::numbers::pi;
  }
  const double d = wrap_radians(a.to_radians() - b.to_radians());
  return d > std::numbers::pi ? kTwoPi - d : d;
}

std::string to_string(const Angle& a) {
  if (a.is_exact()) return to_string(a.pi_multiple());
  std::ostringstream os;
  os.precision(17);
  os << a.to_radians() << "rad";
  return os.str();
}

Angle parse_angle(const std::string& text) {
  constexpr std::string_view kSuffix = "rad";
  if (text.size() > kSuffix.size() &&
      text.compare(text.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    const std::string number = text.substr(0, text.size() - kSuffix.size());
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw ParseError("invalid radian angle '" + text + "'");
    }
    return Angle::radians(value);
  }
  return Angle::pi_frac(parse_rational(text));
}

}  // namespace umeb
