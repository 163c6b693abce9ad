#include <doctest.h>

#include "umeb/serialize.hpp"

using namespace umeb;

namespace {

Angle k12(int k) { return Angle::pi_frac(k, 12); }

BasisPair<Cyclo> sample_pair() {
  const auto p = sample_valid_params(5, 1, SampleMode::PiOver12).front();
  return construct_pair(p, FirstBasisSpec<Cyclo>::chen());
}

}  // namespace

TEST_CASE("scalars") {
  const Cyclo x = Cyclo::zeta(5) + Cyclo(Rational(-2, 3));
  const json j = encode(x);
  REQUIRE(j.at("cyclo").size() == 8);
  CHECK(j.at("cyclo")[0] == "-2/3");
  CHECK(decode_as<Cyclo>(j) == x);
  CHECK(decode_as<Complex>(encode(Complex(0.5, -1.25))) == Complex(0.5, -1.25));
  CHECK_THROWS_AS(decode_as<Complex>(j), ParseError);
  CHECK_THROWS_AS(decode_as<Cyclo>(encode(Complex(1, 0))), ParseError);
  CHECK_THROWS_AS(decode_scalar(json{{"cyclo", {"1"}}}), ParseError);
  CHECK_THROWS_AS(decode_scalar(json{{"re", "x"}, {"im", 0}}), ParseError);
  CHECK_THROWS_AS(decode_scalar(json(3)), ParseError);
}

TEST_CASE("angles and parameters") {
  CHECK(decode_angle(encode(k12(7))) == k12(7));
  CHECK(decode_angle(encode(Angle::radians(0.75))) == Angle::radians(0.75));
  const ThetaParams p{{k12(0), k12(4), k12(1), k12(2), k12(14), k12(3)}, {k12(5), k12(9)}, Sign::Minus};
  CHECK(decode_params(encode(p)) == p);
  json bad = encode(p);
  bad["s_branch"] = "*";
  CHECK_THROWS_AS(decode_params(bad), ParseError);
  bad = encode(p);
  bad["theta"].erase(0);
  CHECK_THROWS_AS(decode_params(bad), ParseError);
}

TEST_CASE("matrices") {
  const auto s = build_S<Cyclo>({k12(1), k12(2)}, Sign::Plus);
  CHECK(decode_matrix<Cyclo>(encode(s)) == s);
  json ragged = encode(s);
  ragged[1].erase(0);
  CHECK_THROWS_AS(decode_matrix<Cyclo>(ragged), ParseError);
  CHECK_THROWS_AS(decode_matrix<Cyclo>(json::array()), ParseError);
}

TEST_CASE("exact pair round-trips exactly") {
  const auto pair = sample_pair();
  const json doc = encode(pair);
  CHECK(doc.at("backend") == "exact");
  CHECK(doc.at("first")[0].at("ordering") == std::string(kStateOrdering));
  const auto back = std::get<BasisPair<Cyclo>>(decode_basis_pair(doc));
  CHECK(back.first == pair.first);
  CHECK(back.second == pair.second);
  CHECK(back.params == pair.params);
  CHECK(back.first_spec == pair.first_spec);
  CHECK(encode(back) == doc);
  // text round trip
  const auto again = std::get<BasisPair<Cyclo>>(parse_basis_pair(doc.dump()));
  CHECK(again.second == pair.second);
}

TEST_CASE("float pair round-trips") {
  const auto pair = to_float(sample_pair());
  const auto back = std::get<BasisPair<Complex>>(decode_basis_pair(encode(pair)));
  CHECK(back.second == pair.second);
  CHECK(back.params == pair.params);
}

TEST_CASE("malformed documents are rejected") {
  const json good = encode(sample_pair());

  json five = good;
  five["second"].erase(5);
  CHECK_THROWS_AS(decode_basis_pair(five), ParseError);

  json zero = good;
  for (auto& a : zero["first"][2]["amplitudes"]) a = encode(Cyclo(0));
  CHECK_THROWS_AS(decode_basis_pair(zero), ParseError);

  json unnormalised = good;
  unnormalised["first"][0]["amplitudes"][0] = encode(Cyclo(1));
  CHECK_THROWS_AS(decode_basis_pair(unnormalised), ParseError);

  json ordering = good;
  ordering["first"][0]["ordering"] = "column-major";
  CHECK_THROWS_AS(decode_basis_pair(ordering), ParseError);

  json backend = good;
  backend["backend"] = "quad";
  CHECK_THROWS_AS(decode_basis_pair(backend), ParseError);

  json no_backend = good;
  no_backend.erase("backend");
  CHECK_THROWS_AS(decode_basis_pair(no_backend), ParseError);

  json radians = good;
  radians["params"]["theta"][0] = encode(Angle::radians(0.1));
  CHECK_THROWS_AS(decode_basis_pair(radians), ParseError);

  json bad_spec = good;
  bad_spec["first_basis_spec"]["d"] = bad_spec["first_basis_spec"]["c"];
  CHECK_THROWS_AS(decode_basis_pair(bad_spec), ParseError);

  CHECK_THROWS_AS(parse_basis_pair("{not json"), ParseError);
  CHECK_THROWS_AS(parse_basis_pair("[]"), ParseError);
}

TEST_CASE("float normalisation uses the tolerance") {
  json doc = encode(to_float(sample_pair()));
  const double re = doc["first"][0]["amplitudes"][0]["re"];
  doc["first"][0]["amplitudes"][0]["re"] = re + 1e-13;
  CHECK_NOTHROW(decode_basis_pair(doc, Tolerance{1e-10}));
  doc["first"][0]["amplitudes"][0]["re"] = re + 1e-3;
  CHECK_THROWS_AS(decode_basis_pair(doc, Tolerance{1e-10}), ParseError);
}

TEST_CASE("report document") {
  VerificationReport r;
  r.append({"mutually_unbiased", Backend::Exact, false, 0.5, json{{"i", 0}, {"j", 1}}, true});
  const json j = encode(r, "1.2.3", "abc");
  CHECK(j.at("overall") == false);
  CHECK(j.at("tool_version") == "1.2.3");
  CHECK(j.at("input_hash") == "abc");
  REQUIRE(j.at("checks").size() == 1);
  const json& c = j.at("checks")[0];
  CHECK(c.at("name") == "mutually_unbiased");
  CHECK(c.at("backend") == "exact");
  CHECK(c.at("pass") == false);
  CHECK(c.at("residual") == 0.5);
  CHECK(c.at("witness").at("j") == 1);
}
