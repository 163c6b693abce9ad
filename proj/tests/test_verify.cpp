#include <doctest.h>

#include <cmath>
#include <numbers>

#include "umeb/verify.hpp"

using namespace umeb;

namespace {

Angle k12(int k) { return Angle::pi_frac(k, 12); }

// Printed parameters of the worked example with the (c, d) first basis.
ThetaParams example_one() {
  return {{k12(0), k12(4), k12(0), k12(12), k12(0), k12(4)}, {k12(4), k12(22)}, Sign::Minus};
}

template <class T>
StateVector<Complex> grid_point(const ComplementSubspace<T>& c, double t, double phi) {
  StateVector<Complex> out{};
  const auto v1 = to_complex(c.v1);
  const auto v2 = to_complex(c.v2);
  for (std::size_t k = 0; k < kDim; ++k) out[k] = std::cos(t) * v1[k] + std::polar(std::sin(t), phi) * v2[k];
  return out;
}

}  // namespace

TEST_CASE("orthonormality failure carries a reproducible witness") {
  auto b = build_first_basis(FirstBasisSpec<Cyclo>::standard());
  b[5] = b[4];
  const auto r = check_orthonormal(b);
  CHECK_FALSE(r.pass);
  const std::size_t i = r.witness.at("i");
  const std::size_t j = r.witness.at("j");
  const Cyclo expected = i == j ? Cyclo(1) : Cyclo(0);
  CHECK(deviation(inner(b[i], b[j]), expected) == doctest::Approx(r.residual));
  CHECK(check_orthonormal(build_first_basis(FirstBasisSpec<Cyclo>::chen())).pass);
}

TEST_CASE("maximal entanglement") {
  const auto b = build_first_basis(FirstBasisSpec<Cyclo>::chen());
  for (int k = 0; k < 4; ++k) CHECK(check_max_entangled(b[k]).pass);
  const auto r = check_max_entangled(b[4]);
  CHECK_FALSE(r.pass);
  CHECK(r.residual == doctest::Approx(max_entanglement_defect(b[4])));
  CHECK(r.witness.at("rank") == 1);
}

TEST_CASE("first bases are unextendible, certified both ways") {
  for (const auto& spec : {FirstBasisSpec<Cyclo>::standard(), FirstBasisSpec<Cyclo>::chen()}) {
    const auto b = build_first_basis(spec);
    const ComplementSubspace<Cyclo> comp{b[4], b[5]};
    CHECK(complement_is_product_subspace(comp));
    const auto exact = check_unextendible({b[0], b[1], b[2], b[3]}, comp, GridOptions{});
    CHECK(exact.pass);
    CHECK(exact.witness.at("method") == "product-subspace");
    const auto grid = check_unextendible_grid(comp, GridOptions{});
    CHECK(grid.pass);
    CHECK(grid.residual <= 1e-9);
  }
}

TEST_CASE("a maximally entangled state in the complement is found by the grid") {
  // Swap member 0 with the completion |1>|2'>: the complement now holds the Bell state.
  auto b = build_first_basis(FirstBasisSpec<Cyclo>::standard());
  const auto injected = b[0];
  const ComplementSubspace<Cyclo> comp{b[4], injected};
  CHECK_FALSE(complement_is_product_subspace(comp));
  const auto r = check_unextendible({b[5], b[1], b[2], b[3]}, comp, GridOptions{});
  CHECK_FALSE(r.pass);
  CHECK(r.residual == doctest::Approx(1 / std::sqrt(2.0)));
  const double t = r.witness.at("t");
  const double phi = r.witness.at("phi");
  const auto psi = grid_point(comp, t, phi);
  CHECK(std::norm(inner(to_complex(injected), psi)) == doctest::Approx(1.0));
  // the witness reproduces the residual
  CHECK(min_singular_value_at(to_complex(comp.v1), to_complex(comp.v2), t, phi) ==
        doctest::Approx(r.residual));
}

TEST_CASE("complement preconditions") {
  const auto b = build_first_basis(FirstBasisSpec<Cyclo>::standard());
  CHECK_THROWS_AS(check_unextendible({b[0], b[1], b[2], b[3]}, ComplementSubspace<Cyclo>{b[4], b[4]},
                                     GridOptions{}),
                  InvalidArgument);
  CHECK_THROWS_AS(check_unextendible({b[0], b[1], b[2], b[3]}, ComplementSubspace<Cyclo>{b[4], b[0]},
                                     GridOptions{}),
                  InvalidArgument);
}

TEST_CASE("grid ties keep the lowest index") {
  const auto b = build_first_basis(FirstBasisSpec<Cyclo>::standard());
  GridOptions g;
  g.refine = false;
  const auto scan = scan_complement(to_complex(b[4]), to_complex(b[5]), g);
  CHECK(scan.max_min_singular_value < 1e-15);
  CHECK(scan.grid_t == 0);
  CHECK(scan.grid_phi == 0);
}

TEST_CASE("the worked example is a mutually unbiased pair") {
  const auto pair = construct_pair(example_one(), FirstBasisSpec<Cyclo>::chen());
  const auto r = check_mutually_unbiased(pair.first, pair.second);
  CHECK(r.pass);
  CHECK(r.residual == 0.0);
  const auto report = verify_pair(pair);
  CHECK(report.overall());
  for (const char* name : {"first.orthonormal", "second.max_entangled", "second.unextendible",
                           "mutually_unbiased", "theta.unitarity_ground_truth", "perpendicularity",
                           "modulus_pattern"}) {
    const auto* c = report.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->pass);
  }
}

TEST_CASE("perturbing theta3 breaks mutual unbiasedness") {
  auto p = example_one();
  p.theta[2] = p.theta[2] + Angle::radians(0.1);
  const auto pair = construct_pair(p, FirstBasisSpec<Complex>::chen());
  const auto r = check_mutually_unbiased(pair.first, pair.second, Tolerance{1e-10});
  CHECK_FALSE(r.pass);
  CHECK(r.residual > 1e-3);
  CHECK_FALSE(verify_pair(pair).overall());
}

TEST_CASE("perturbing theta4 breaks the overlap moduli") {
  auto p = example_one();
  p.theta[3] = p.theta[3] + Angle::radians(0.01);
  const auto pair = construct_pair(p, FirstBasisSpec<Complex>::chen());
  const auto r = check_overlap_moduli(pair.first, pair.second, Tolerance{1e-10});
  CHECK_FALSE(r.pass);
  CHECK(r.residual > 1e-4);
}

TEST_CASE("equal overlap moduli without orthonormality is not unbiasedness") {
  // theta2 on the minus branch with the plus-branch theta6: W is not unitary.
  const ThetaParams p{{k12(12), k12(8), k12(0), k12(0), k12(12), k12(4)}, {k12(0), k12(6)},
                      Sign::Plus};
  const auto pair = construct_pair(p, FirstBasisSpec<Cyclo>::standard());
  CHECK(check_overlap_moduli(pair.first, pair.second).pass);
  const auto r = check_mutually_unbiased(pair.first, pair.second);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.at("kind") == "orthonormality");
  CHECK(r.residual == doctest::Approx(1 / std::sqrt(3.0)));
}

TEST_CASE("theta conditions are reported separately") {
  const ThetaParams p{{k12(12), k12(8), k12(0), k12(0), k12(12), k12(4)}, {k12(0), k12(6)},
                      Sign::Plus};
  const auto checks = check_theta_conditions(p);
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].name == "theta.diff_1_2");
  CHECK(checks[1].name == "theta.diff_4_5");
  CHECK(checks[2].name == "theta.phase_relation");
  CHECK(checks[3].name == "theta.unitarity_ground_truth");
  CHECK(checks[2].pass);
  CHECK_FALSE(checks[3].pass);
  for (const auto& c : checks) CHECK_FALSE(c.mandatory);
}

TEST_CASE("closure families satisfy the perpendicularity relations") {
  for (const auto& p : sample_valid_params(12, 10, SampleMode::PiOver12)) {
    for (const auto& spec : {FirstBasisSpec<Cyclo>::standard(), FirstBasisSpec<Cyclo>::chen()}) {
      const auto w = build_W<Cyclo>(p.theta);
      const auto s = completion_operator(build_S<Cyclo>(p.theta_prime, p.s_branch), spec);
      const auto r = check_perpendicularity(w, s, classify(spec));
      REQUIRE(r.has_value());
      CHECK(r->pass);
      CHECK(check_modulus_pattern(build_F(spec), w, s).pass);
    }
  }
  CHECK_FALSE(check_perpendicularity(Matrix<Cyclo>::identity(3), Matrix<Cyclo>::identity(2),
                                     FirstBasisVariant::Other)
                  .has_value());
}

TEST_CASE("exact and float verdicts agree") {
  for (const auto& p : sample_valid_params(99, 3, SampleMode::PiOver12)) {
    const auto pair = construct_pair(p, FirstBasisSpec<Cyclo>::standard());
    VerifyOptions o;
    o.run_grid_oracle = false;
    const auto exact = verify_pair(pair, o);
    const auto fl = verify_pair(to_float(pair), o);
    CHECK(exact.overall());
    CHECK(fl.overall());
    CHECK(exact.checks().size() == fl.checks().size());
  }
}

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.append({"a", Backend::Exact, true, 0.0, nullptr, true});
  r.append({"b", Backend::Float, false, 1.0, nullptr, false});
  CHECK(r.overall());
  r.append({"a", Backend::Float, false, 1.0, nullptr, true});
  CHECK_FALSE(r.overall());
  CHECK(r.find("a")->backend == Backend::Exact);
  CHECK(r.find("a", Backend::Float)->pass == false);
  CHECK(r.find("zzz") == nullptr);
}
