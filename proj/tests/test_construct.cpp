#include <doctest.h>

#include <numbers>
#include <random>
#include <set>
#include <tuple>

#include "umeb/construct.hpp"

using namespace umeb;

namespace {

Angle k12(int k) { return Angle::pi_frac(k, 12); }

std::array<Angle, 6> theta_of(std::array<int, 6> k) {
  std::array<Angle, 6> t;
  for (std::size_t j = 0; j < 6; ++j) t[j] = k12(k[j]);
  return t;
}

template <class T>
bool orthonormal(const Basis<T>& b) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const T expected = ScalarTraits<T>::from_rational(Rational(i == j ? 1 : 0));
      if (!approx_equal(inner(b[i], b[j]), expected, Tolerance{1e-12})) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure agrees with brute-force enumeration on the pi/12 grid") {
  // All (theta2, theta5, theta6) that make W unitary, for a few fixed (theta1, theta3, theta4).
  const std::array<std::array<int, 3>, 5> triples{{{0, 0, 0}, {3, 7, 20}, {12, 1, 5}, {23, 17, 9}, {4, 0, 12}}};
  for (const auto& [k1, k3, k4] : triples) {
    std::set<std::tuple<int, int, int>> brute;
    for (int k2 = 0; k2 < 24; ++k2) {
      for (int k5 = 0; k5 < 24; ++k5) {
        for (int k6 = 0; k6 < 24; ++k6) {
          const auto w = build_W<Complex>(theta_of({k1, k2, k3, k4, k5, k6}));
          if (is_unitary(w, Tolerance{1e-9}).unitary) brute.insert({k2, k5, k6});
        }
      }
    }
    std::set<std::tuple<int, int, int>> derived;
    for (ClosureBranch b : {ClosureBranch::Plus, ClosureBranch::Minus}) {
      const auto p = close_theta(k12(k1), k12(k3), k12(k4), b, {k12(0), k12(0)}, Sign::Plus);
      derived.insert({*p.theta[1].zeta_exponent(), *p.theta[4].zeta_exponent(),
                      *p.theta[5].zeta_exponent()});
    }
    CHECK(brute == derived);
  }
}

TEST_CASE("closure gives unitary W for continuous angles") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  for (int n = 0; n < 50; ++n) {
    for (ClosureBranch b : {ClosureBranch::Plus, ClosureBranch::Minus}) {
      const auto p = close_theta(Angle::radians(u(rng)), Angle::radians(u(rng)),
                                 Angle::radians(u(rng)), b, {k12(0), k12(0)}, Sign::Plus);
      CHECK(is_unitary(build_W<Complex>(p.theta), Tolerance{1e-12}).unitary);
      CHECK(closure_branch(p.theta) == b);
    }
  }
}

TEST_CASE("closure is exact on the pi/12 grid") {
  const auto p = close_theta(k12(5), k12(2), k12(9), ClosureBranch::Minus, {k12(1), k12(7)},
                             Sign::Minus);
  CHECK(p.exact_embeddable());
  CHECK(is_unitary(build_W<Cyclo>(p.theta)).unitary);
  CHECK(closure_branch(p.theta) == ClosureBranch::Minus);
  // the plus-branch sixth angle paired with a minus-branch second angle is not unitary
  auto mixed = p.theta;
  mixed[5] = close_theta(k12(5), k12(2), k12(9), ClosureBranch::Plus, {}, Sign::Plus).theta[5];
  CHECK_FALSE(closure_branch(mixed).has_value());
  CHECK_FALSE(is_unitary(build_W<Cyclo>(mixed)).unitary);
}

TEST_CASE("W template entries") {
  const auto t = theta_of({0, 4, 0, 12, 0, 4});
  const auto w = build_W<Cyclo>(t);
  const Cyclo s = Cyclo::sqrt3().inv();
  CHECK(w(0, 0) == s);
  CHECK(w(0, 1) == Cyclo::zeta(4 + 6) * s);  // e^{i(t2 + pi/2)}
  CHECK(w(2, 1) == Cyclo::zeta(-6) * s);     // e^{i(t3 - pi/2)}
  CHECK(w(0, 2) == -s);
}

TEST_CASE("S template is unitary for both signs") {
  for (int a = 0; a < 24; a += 5) {
    for (int b = 0; b < 24; b += 7) {
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        CHECK(is_unitary(build_S<Cyclo>({k12(a), k12(b)}, sign)).unitary);
      }
    }
  }
  CHECK(is_unitary(build_S<Complex>({Angle::radians(0.3), Angle::radians(2.0)}, Sign::Minus),
                   Tolerance{1e-12})
            .unitary);
}

TEST_CASE("first bases") {
  for (const auto& spec : {FirstBasisSpec<Cyclo>::standard(), FirstBasisSpec<Cyclo>::chen()}) {
    const auto b = build_first_basis(spec);
    CHECK(orthonormal(b));
    CHECK(is_unitary(build_F(spec)).unitary);
    CHECK(b[4] == product_state(spec.c, basis_ket<Cyclo, 3>(2)));
  }
  CHECK(classify(FirstBasisSpec<Cyclo>::standard()) == FirstBasisVariant::Standard);
  CHECK(classify(FirstBasisSpec<Cyclo>::chen()) == FirstBasisVariant::Chen);
  const FirstBasisSpec<Cyclo> swapped{FirstBasisSpec<Cyclo>::standard().d,
                                      FirstBasisSpec<Cyclo>::standard().c};
  CHECK(classify(swapped) == FirstBasisVariant::Other);
  const FirstBasisSpec<Cyclo> bad{{Cyclo(1), Cyclo(0)}, {Cyclo(1), Cyclo(0)}};
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  CHECK_THROWS_AS(build_first_basis(bad), InvalidArgument);
}

TEST_CASE("completion operator") {
  const auto s = build_S<Cyclo>({k12(3), k12(8)}, Sign::Plus);
  CHECK(completion_operator(s, FirstBasisSpec<Cyclo>::standard()) == s);
  const auto chen = FirstBasisSpec<Cyclo>::chen();
  const auto op = completion_operator(s, chen);
  // sends c to the first column of S and d to the second
  const auto sc = umeb::apply(op, chen.c);
  const auto sd = umeb::apply(op, chen.d);
  CHECK(sc == column_of<Cyclo, 2>(s, 0));
  CHECK(sd == column_of<Cyclo, 2>(s, 1));
}

TEST_CASE("identity transforms reproduce the first basis") {
  const auto first = build_first_basis(FirstBasisSpec<Cyclo>::chen());
  const auto second =
      build_second_basis(first, Matrix<Cyclo>::identity(3), Matrix<Cyclo>::identity(2));
  CHECK(second == first);
}

TEST_CASE("closure-valid pairs are orthonormal bases") {
  const auto params = sample_valid_params(3, 10, SampleMode::PiOver12);
  for (const auto& p : params) {
    for (const auto& spec : {FirstBasisSpec<Cyclo>::standard(), FirstBasisSpec<Cyclo>::chen()}) {
      const auto pair = construct_pair(p, spec);
      CHECK(orthonormal(pair.second));
      CHECK(pair.params == p);
    }
  }
}

TEST_CASE("exact and float construction agree") {
  const auto p = sample_valid_params(4, 1, SampleMode::PiOver12).front();
  const auto exact = construct_pair(p, FirstBasisSpec<Cyclo>::chen());
  const auto fl = construct_pair(p, FirstBasisSpec<Complex>::chen());
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      CHECK(std::abs(exact.second[i][j].to_complex() - fl.second[i][j]) < 1e-14);
    }
  }
}

TEST_CASE("exact construction refuses non-embeddable angles") {
  auto p = sample_valid_params(1, 1, SampleMode::Continuous).front();
  CHECK_FALSE(p.exact_embeddable());
  CHECK_THROWS_AS(construct_pair(p, FirstBasisSpec<Cyclo>::standard()), NotRepresentable);
}

TEST_CASE("sampling is deterministic and closure-valid") {
  const auto a = sample_valid_params(42, 20, SampleMode::Continuous);
  const auto b = sample_valid_params(42, 20, SampleMode::Continuous);
  const auto c = sample_valid_params(43, 20, SampleMode::Continuous);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  // sample k does not depend on how many samples are drawn
  CHECK(sample_valid_params(42, 5, SampleMode::Continuous)[4] == a[4]);
  bool plus = false;
  bool minus = false;
  for (const auto& p : a) {
    const auto branch = closure_branch(p.theta);
    REQUIRE(branch.has_value());
    (*branch == ClosureBranch::Plus ? plus : minus) = true;
  }
  CHECK(plus);
  CHECK(minus);
  for (const auto& p : sample_valid_params(42, 20, SampleMode::PiOver12)) {
    CHECK(p.exact_embeddable());
  }
}
