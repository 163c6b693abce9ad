#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "audit.hpp"
#include "commands.hpp"
#include "fixtures.hpp"
#include "formula.hpp"
#include "umeb/serialize.hpp"

using namespace umeb;
using namespace umeb::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("umeb_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class Opts, class Fn>
Run run(Fn fn, const Opts& opts) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fn(opts, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("formula evaluation") {
  CHECK(eval_formula("1") == Cyclo(1));
  CHECK(eval_formula("-i") == -Cyclo::i());
  CHECK(eval_formula("(1+sqrt3*i)/2") == Cyclo::zeta(4));
  CHECK(eval_formula("(-sqrt3+i)/2") == Cyclo::zeta(10));
  CHECK(eval_formula("1/sqrt2") * Cyclo::sqrt2() == Cyclo(1));
  CHECK(eval_formula("sqrt6 - sqrt2*sqrt3") == Cyclo(0));
  CHECK(eval_formula("2*(3-1)/-4") == Cyclo(-1));
  CHECK_THROWS_AS(eval_formula("sqrt5"), ParseError);
  CHECK_THROWS_AS(eval_formula("(1+i"), ParseError);
  CHECK_THROWS_AS(eval_formula("1/0"), DivisionByZero);
  CHECK_THROWS_AS(eval_formula(""), ParseError);
}

TEST_CASE("option parsing") {
  const auto g = parse_grid("10x20");
  CHECK(g.nt == 10);
  CHECK(g.nphi == 20);
  CHECK_THROWS_AS(parse_grid("10"), InvalidArgument);
  CHECK_THROWS_AS(parse_grid("10x"), InvalidArgument);
  CHECK_THROWS_AS(parse_grid("1x5"), InvalidArgument);
  CHECK_THROWS_AS(parse_grid("3x5y"), InvalidArgument);
  CHECK(parse_backend_choice("both") == BackendChoice::Both);
  CHECK_THROWS_AS(parse_backend_choice("fast"), InvalidArgument);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("printed matrices match the templates") {
  for (int n = 1; n <= 3; ++n) {
    const auto& ex = printed_example(n);
    CHECK(build_W<Cyclo>(printed_theta(ex)) == printed_W(ex));
    const auto res = resolve_example(n);
    REQUIRE(res.resolved);
    CHECK(completion_operator(build_S<Cyclo>(res.params.theta_prime, res.params.s_branch),
                              first_spec_named(ex.first_basis)) == printed_S(ex));
  }
  CHECK_THROWS_AS(printed_example(4), InvalidArgument);
}

TEST_CASE("construct then verify round trip") {
  TempDir tmp;
  ConstructOptions c;
  c.example = 1;
  c.out_path = tmp.file("ex1.json");
  const auto built = run(cmd_construct, c);
  REQUIRE(built.code == kExitPass);

  // second basis equals the printed one entry-exact
  const auto pair = std::get<BasisPair<Cyclo>>(parse_basis_pair(slurp(*c.out_path)));
  CHECK(pair.second == printed_second_basis(printed_example(1)));

  VerifyCommandOptions v;
  v.in_path = *c.out_path;
  v.report_path = tmp.file("report.json");
  v.backend = BackendChoice::Both;
  const auto verified = run(cmd_verify, v);
  CHECK(verified.code == kExitPass);
  CHECK(verified.out.find("overall: PASS") != std::string::npos);
  const json report = json::parse(slurp(*v.report_path));
  CHECK(report.at("overall") == true);
  CHECK(report.at("tool_version") == tool_version());
  CHECK(report.at("input_hash") == sha256_hex(slurp(*c.out_path)));
  bool saw_float = false;
  for (const auto& check : report.at("checks")) saw_float |= check.at("backend") == "float";
  CHECK(saw_float);
}

TEST_CASE("construct is deterministic") {
  ConstructOptions c;
  c.theta = {"1/12", "5/12", "1/3", "1/6", "7/6", "7/4"};
  const auto a = run(cmd_construct, c);
  const auto b = run(cmd_construct, c);
  REQUIRE(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out).at("provenance").at("source") == "parameters");
}

TEST_CASE("construct validates its inputs") {
  ConstructOptions c;
  c.theta = {"0", "0", "0", "0", "0", "0"};
  CHECK(run(cmd_construct, c).code == kExitUsage);  // not unitary
  c.unchecked = true;
  CHECK(run(cmd_construct, c).code == kExitPass);

  ConstructOptions r;
  r.theta = {"0.1rad", "0.2rad", "0.3rad"};
  r.closure = "plus";
  r.backend = BackendChoice::Exact;
  const auto refused = run(cmd_construct, r);
  CHECK(refused.code == kExitUsage);
  CHECK(refused.err.find("pi/12") != std::string::npos);
  r.backend.reset();
  const auto fl = run(cmd_construct, r);
  CHECK(fl.code == kExitPass);
  CHECK(json::parse(fl.out).at("backend") == "float");

  ConstructOptions none;
  CHECK(run(cmd_construct, none).code == kExitUsage);
  ConstructOptions two;
  two.example = 1;
  two.theta = {"0"};
  CHECK(run(cmd_construct, two).code == kExitUsage);

  ConstructOptions ex3;
  ex3.example = 3;
  CHECK(run(cmd_construct, ex3).code == kExitUsage);  // printed angles fail the closure
}

TEST_CASE("example 3 with the standard basis matches its printed states") {
  ConstructOptions c;
  c.example = 3;
  c.unchecked = true;
  const auto r = run(cmd_construct, c);
  REQUIRE(r.code == kExitPass);
  const auto pair = std::get<BasisPair<Cyclo>>(parse_basis_pair(r.out));
  CHECK(pair.second == printed_second_basis(printed_example(3)));
  CHECK(pair.first == build_first_basis(FirstBasisSpec<Cyclo>::standard()));
}

TEST_CASE("identity transform gives second = first") {
  TempDir tmp;
  const json t = {{"W", encode(Matrix<Cyclo>::identity(3))}, {"S", encode(Matrix<Cyclo>::identity(2))}};
  spit(tmp.file("t.json"), t.dump());
  ConstructOptions c;
  c.transform_path = tmp.file("t.json");
  CHECK(run(cmd_construct, c).code == kExitUsage);  // needs --unchecked
  c.unchecked = true;
  const auto r = run(cmd_construct, c);
  REQUIRE(r.code == kExitPass);
  const json doc = json::parse(r.out);
  CHECK(doc.at("first") == doc.at("second"));
  CHECK_FALSE(doc.contains("params"));
}

TEST_CASE("verify exit codes") {
  TempDir tmp;
  ConstructOptions c;
  c.example = 1;
  const json good = json::parse(run(cmd_construct, c).out);

  json five = good;
  five["second"].erase(4);
  spit(tmp.file("five.json"), five.dump());
  VerifyCommandOptions v;
  v.in_path = tmp.file("five.json");
  const auto parse_fail = run(cmd_verify, v);
  CHECK(parse_fail.code == kExitUsage);
  CHECK(parse_fail.err.find("second") != std::string::npos);

  v.in_path = tmp.file("missing.json");
  CHECK(run(cmd_verify, v).code == kExitUsage);

  // a float file whose theta3 is off by 0.1 rad
  auto p = resolve_example(1).params;
  p.theta[2] = p.theta[2] + Angle::radians(0.1);
  const auto perturbed = construct_pair(p, FirstBasisSpec<Complex>::chen());
  spit(tmp.file("perturbed.json"), encode(perturbed).dump());
  v.in_path = tmp.file("perturbed.json");
  const auto fail = run(cmd_verify, v);
  CHECK(fail.code == kExitFail);
  CHECK(fail.out.find("worst witness: ") != std::string::npos);
  v.backend = BackendChoice::Exact;
  CHECK(run(cmd_verify, v).code == kExitUsage);

  v.backend.reset();
  v.tol = 0.0;
  CHECK(run(cmd_verify, v).code == kExitUsage);
  v.tol = 1e-10;
  v.grid = "bad";
  CHECK(run(cmd_verify, v).code == kExitUsage);
}

TEST_CASE("sweep") {
  SweepOptions s;
  s.seed = 7;
  s.count = 5;
  s.grid_oracle = false;
  const auto a = run(cmd_sweep, s);
  const auto b = run(cmd_sweep, s);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(a.out.find("passed: 5/5") != std::string::npos);

  SweepOptions e;
  e.seed = 7;
  e.count = 1;
  e.backend = BackendChoice::Exact;
  const auto exact = run(cmd_sweep, e);
  CHECK(exact.code == kExitPass);
  CHECK(exact.out.find("worst mandatory residual: 0.000e+00") != std::string::npos);

  TempDir tmp;
  s.report_path = tmp.file("sweep.json");
  s.first_basis = "chen";
  REQUIRE(run(cmd_sweep, s).code == kExitPass);
  const json report = json::parse(slurp(*s.report_path));
  CHECK(report.at("samples").size() == 5);
  CHECK(report.at("overall") == true);

  s.count = 0;
  CHECK(run(cmd_sweep, s).code == kExitUsage);
}

TEST_CASE("audit") {
  AuditOptions a;
  a.grid_oracle = false;
  a.example = 1;
  const auto one = run(cmd_audit, a);
  CHECK(one.code == kExitPass);
  CHECK(one.out.find("MISMATCH") == std::string::npos);

  for (int n : {2, 3}) {
    TempDir tmp;
    a.example = n;
    a.report_path = tmp.file("audit.json");
    const auto r = run(cmd_audit, a);
    CHECK(r.code == kExitFail);
    const json doc = json::parse(slurp(*a.report_path));
    CHECK(doc.at("reconstruction_clean") == true);
    CHECK(doc.at("verdict").at("reproduced") == false);
    CHECK(doc.at("pairings").size() == 2);
  }

  a.backend = BackendChoice::Float;
  CHECK(run(cmd_audit, a).code == kExitUsage);
}
