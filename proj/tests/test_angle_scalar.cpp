#include <doctest.h>

#include <cmath>
#include <numbers>

#include "umeb/scalar.hpp"

using namespace umeb;

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("exact angles are canonical in [0, 2)") {
  CHECK(Angle::pi_frac(25, 12) == Angle::pi_frac(1, 12));
  CHECK(Angle::pi_frac(-1, 3) == Angle::pi_frac(5, 3));
  CHECK(Angle::pi_frac(2, 1) == Angle::pi_frac(0, 1));
  CHECK(Angle::pi_frac(1, 3) + Angle::pi_frac(5, 3) == Angle::pi_frac(0, 1));
  CHECK(Angle::pi_frac(1, 3) - Angle::pi_frac(1, 2) == Angle::pi_frac(11, 6));
  CHECK(-Angle::pi_frac(1, 4) == Angle::pi_frac(7, 4));
  CHECK(Angle::pi_frac(1, 3).pi_multiple() == Rational(1, 3));
}

TEST_CASE("pi/12 embedding") {
  CHECK(Angle::pi_frac(1, 3).zeta_exponent() == 4);
  CHECK(Angle::pi_frac(11, 6).zeta_exponent() == 22);
  CHECK(Angle::pi_frac(1, 12).exact_embeddable());
  CHECK_FALSE(Angle::pi_frac(1, 5).exact_embeddable());
  CHECK_FALSE(Angle::pi_frac(1, 24).exact_embeddable());
  CHECK_FALSE(Angle::radians(0.5).exact_embeddable());
  CHECK_THROWS_AS(Angle::radians(0.5).pi_multiple(), NotRepresentable);
}

TEST_CASE("radian angles") {
  const Angle a = Angle::radians(-0.5);
  CHECK(a.to_radians() == doctest::Approx(2 * std::numbers::pi - 0.5));
  CHECK_THROWS_AS(Angle::radians(std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(Angle::radians(INFINITY), InvalidArgument);
  // mixing exact and float falls back to float
  const Angle m = Angle::pi_frac(1, 2) + Angle::radians(0.25);
  CHECK_FALSE(m.is_exact());
  CHECK(m.to_radians() == doctest::Approx(std::numbers::pi / 2 + 0.25));
}

TEST_CASE("angle parsing") {
  CHECK(parse_angle("1/3") == Angle::pi_frac(1, 3));
  CHECK(parse_angle("-1/3") == Angle::pi_frac(5, 3));
  CHECK(parse_angle("0.25rad").to_radians() == doctest::Approx(0.25));
  CHECK(to_string(Angle::pi_frac(1, 3)) == "1/3");
  CHECK_THROWS_AS(parse_angle("pi/3"), ParseError);
  CHECK_THROWS_AS(parse_angle("rad"), ParseError);
}

TEST_CASE("circular distance") {
  CHECK(circular_distance(Angle::pi_frac(1, 12), Angle::pi_frac(23, 12)) ==
        doctest::Approx(std::numbers::pi / 6));
  CHECK(circular_distance(Angle::pi_frac(0, 1), Angle::pi_frac(1, 1)) ==
        doctest::Approx(std::numbers::pi));
  CHECK(circular_distance(Angle::pi_frac(1, 3), Angle::pi_frac(1, 3)) == 0.0);
}

TEST_CASE("phases") {
  for (int k = 0; k < 24; ++k) {
    const Angle t = Angle::pi_frac(k, 12);
    const Cyclo exact = ScalarTraits<Cyclo>::phase(t);
    CHECK(exact == Cyclo::zeta(k));
    const Complex f = ScalarTraits<Complex>::phase(t);
    CHECK(std::abs(f - std::polar(1.0, k * std::numbers::pi / 12)) < 1e-15);
    CHECK(phase(t).is_exact());
  }
  CHECK_THROWS_AS(ScalarTraits<Cyclo>::phase(Angle::pi_frac(1, 5)), NotRepresentable);
  CHECK_FALSE(phase(Angle::radians(1.0)).is_exact());
  CHECK(std::abs(phase(Angle::radians(1.0)).to_complex() - std::polar(1.0, 1.0)) < 1e-15);
}

TEST_CASE("scalar variant") {
  const Scalar e = Cyclo::i();
  const Scalar f = Complex(0.0, 1.0);
  CHECK(e.backend() == Backend::Exact);
  CHECK(f.backend() == Backend::Float);
  CHECK(abs2(e) == Scalar(Cyclo(1)));
  CHECK(abs2(f).to_complex() == Complex(1.0, 0.0));
  CHECK(parse_backend("exact") == Backend::Exact);
  CHECK(to_string(Backend::Float) == "float");
  CHECK_THROWS(parse_backend("quad"));
}

TEST_CASE("tolerant comparisons") {
  const Tolerance tol{1e-10};
  CHECK(approx_equal(Complex(1.0, 0.0), Complex(1.0 + 1e-12, 0.0), tol));
  CHECK_FALSE(approx_equal(Complex(1.0, 0.0), Complex(1.0 + 1e-8, 0.0), tol));
  CHECK(approx_equal(Cyclo::sqrt6(), Cyclo::sqrt2() * Cyclo::sqrt3(), tol));
  CHECK(deviation(Cyclo::sqrt2(), Cyclo::sqrt2()) == 0.0);
  // 1 and i are perpendicular; 1 and 1 + i are not
  CHECK(perpendicularity_defect(Cyclo(1), Cyclo::i()).is_zero());
  CHECK_FALSE(perpendicularity_defect(Cyclo(1), Cyclo(1) + Cyclo::i()).is_zero());
}
