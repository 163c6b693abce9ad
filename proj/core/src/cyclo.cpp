#include "umeb/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <vector>

#include "umeb/errors.hpp"

namespace umeb {
namespace {

constexpr int kN = Cyclo::kDegree;

// Coefficients of x^k mod Phi_24 for k = 0..23, from x^8 = x^4 - 1.
using PowerTable = std::array<std::array<int, kN>, Cyclo::kOrder>;

PowerTable make_power_table() {
  PowerTable table{};
  std::array<int, kN + 1> cur{};
  cur[0] = 1;
  for (int k = 0; k < Cyclo::kOrder; ++k) {
    for (int j = 0; j < kN; ++j) table[k][j] = cur[j];
    // multiply by x, then fold x^8
    for (int j = kN; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    const int top = cur[kN];
    cur[kN] = 0;
    cur[4] += top;
    cur[0] -= top;
  }
  return table;
}

const PowerTable& power_table() {
  static const PowerTable table = make_power_table();
  return table;
}

// Dense polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  // a - q*b
  Poly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  const Rational& lead = den.back();
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const Rational factor = rem.back() / lead;
    quot[shift] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= factor * den[j];
    trim(rem);
  }
  trim(quot);
}

}  // namespace

Cyclo::Cyclo(long value) { coeffs_[0] = value; }

Cyclo::Cyclo(Rational value) { coeffs_[0] = std::move(value); }

Cyclo Cyclo::zeta(long k) {
  long r = k % kOrder;
  if (r < 0) r += kOrder;
  Coefficients c{};
  const auto& row = power_table()[static_cast<std::size_t>(r)];
  for (int j = 0; j < kN; ++j) c[j] = row[j];
  return Cyclo(std::move(c));
}

Cyclo Cyclo::sqrt2() { return zeta(3) + zeta(-3); }

Cyclo Cyclo::sqrt3() { return zeta(2) + zeta(-2); }

Cyclo Cyclo::sqrt6() { return sqrt2() * sqrt3(); }

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_real() const { return conj() == *this; }

std::optional<Rational> Cyclo::as_rational() const {
  for (int j = 1; j < kN; ++j) {
    if (coeffs_[j] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclo Cyclo::conj() const {
  Coefficients out{};
  const auto& table = power_table();
  for (int k = 0; k < kN; ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& row = table[(kOrder - k) % kOrder];
    for (int j = 0; j < kN; ++j) {
      if (row[j] != 0) out[j] += coeffs_[k] * row[j];
    }
  }
  return Cyclo(std::move(out));
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw DivisionByZero();
  // Phi_24 = x^8 - x^4 + 1
  Poly r0{1, 0, 0, 0, -1, 0, 0, 0, 1};
  Poly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  Poly s0;  // Bezout coefficient of r0 w.r.t. this element
  Poly s1{1};
  Poly quot, rem;
  while (!r1.empty()) {
    divmod(r0, r1, quot, rem);
    Poly s2 = sub_mul(s0, quot, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_24 is irreducible, so the gcd is a nonzero constant.
  const Rational g = r0.front();
  Coefficients out{};
  for (std::size_t j = 0; j < s0.size(); ++j) out[j] = s0[j] / g;
  return Cyclo(std::move(out));
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < kN; ++k) {
    if (coeffs_[k] == 0) continue;
    const double angle = k * std::numbers::pi / 12.0;
    sum += to_double(coeffs_[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  for (int j = 0; j < kN; ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
  for (int j = 0; j < kN; ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  std::array<Rational, 2 * kN - 1> prod{};
  for (int a = 0; a < kN; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; b < kN; ++b) {
      if (rhs.coeffs_[b] == 0) continue;
      prod[a + b] += coeffs_[a] * rhs.coeffs_[b];
    }
  }
  // x^k = x^(k-4) - x^(k-8) for k >= 8; fold from the top down.
  for (int k = 2 * kN - 2; k >= kN; --k) {
    if (prod[k] == 0) continue;
    prod[k - 4] += prod[k];
    prod[k - 8] -= prod[k];
  }
  for (int j = 0; j < kN; ++j) coeffs_[j] = std::move(prod[j]);
  return *this;
}

Cyclo& Cyclo::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& value) {
  bool first = true;
  for (int k = 0; k < Cyclo::kDegree; ++k) {
    const auto& c = value.coeffs()[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")";
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace umeb
