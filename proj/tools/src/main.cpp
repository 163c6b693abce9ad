#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "umeb/errors.hpp"

namespace {

using umeb::cli::BackendChoice;

void add_backend(CLI::App* cmd, std::optional<BackendChoice>& target, std::string& raw) {
  cmd->add_option("--backend", raw, "exact | float | both")
      ->check(CLI::IsMember({"exact", "float", "both"}))
      ->each([&target](const std::string& v) { target = umeb::cli::parse_backend_choice(v); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify mutually unbiased UMEB pairs in C^2 (x) C^3"};
  app.set_version_flag("--version", umeb::cli::tool_version());
  app.require_subcommand(1);

  std::string backend_raw;

  umeb::cli::ConstructOptions construct;
  std::optional<std::string> closure;
  auto* c = app.add_subcommand("construct", "Build a basis pair and write it as JSON");
  c->add_option("--example", construct.example, "Printed example 1, 2 or 3")
      ->check(CLI::Range(1, 3));
  c->add_option("--theta", construct.theta, "theta1..theta6 as pi-fractions (p/q) or radians (Xrad)")
      ->delimiter(',');
  c->add_option("--closure", construct.closure,
                "Complete theta1,theta3,theta4 to a unitary W on this branch")
      ->check(CLI::IsMember({"plus", "minus"}));
  c->add_option("--theta-prime", construct.theta_prime, "theta'1,theta'2")->delimiter(',');
  c->add_option("--s-branch", construct.s_branch, "Sign of the S template row 2 (+ or -)");
  c->add_option("--first-basis", construct.first_basis, "standard | chen")
      ->check(CLI::IsMember({"standard", "chen"}));
  c->add_option("--transform", construct.transform_path, "JSON file {\"W\": ..., \"S\": ...}");
  c->add_flag("--unchecked", construct.unchecked, "Skip the unitarity closure requirement");
  add_backend(c, construct.backend, backend_raw);
  c->add_option("--out", construct.out_path, "Output file (stdout if omitted)");

  umeb::cli::VerifyCommandOptions verify;
  auto* v = app.add_subcommand("verify", "Verify a basis pair file");
  v->add_option("file", verify.in_path, "BasisPair JSON")->required();
  add_backend(v, verify.backend, backend_raw);
  v->add_option("--tol", verify.tol, "Float equality tolerance")->capture_default_str();
  v->add_option("--grid", verify.grid, "Unextendibility grid NtxNphi")->capture_default_str();
  v->add_flag("!--no-grid-oracle", verify.grid_oracle, "Skip the advisory grid scan");
  v->add_option("--report", verify.report_path, "Write the JSON report here");

  umeb::cli::SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "Verify randomly sampled closure-valid parameters");
  s->add_option("--seed", sweep.seed)->capture_default_str();
  s->add_option("--count", sweep.count)->capture_default_str()->check(CLI::PositiveNumber);
  add_backend(s, sweep.backend, backend_raw);
  s->add_option("--tol", sweep.tol)->capture_default_str();
  s->add_option("--grid", sweep.grid)->capture_default_str();
  s->add_flag("!--no-grid-oracle", sweep.grid_oracle);
  s->add_option("--first-basis", sweep.first_basis)
      ->check(CLI::IsMember({"standard", "chen"}))
      ->capture_default_str();
  s->add_option("--report", sweep.report_path);

  umeb::cli::AuditOptions audit;
  auto* a = app.add_subcommand("audit", "Rebuild and verify a printed example");
  a->add_option("--example", audit.example)->check(CLI::Range(1, 3))->capture_default_str();
  add_backend(a, audit.backend, backend_raw);
  a->add_option("--tol", audit.tol)->capture_default_str();
  a->add_option("--grid", audit.grid)->capture_default_str();
  a->add_flag("!--no-grid-oracle", audit.grid_oracle);
  a->add_option("--report", audit.report_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : umeb::cli::kExitUsage;
  }

  try {
    if (c->parsed()) return umeb::cli::cmd_construct(construct, std::cout, std::cerr);
    if (v->parsed()) return umeb::cli::cmd_verify(verify, std::cout, std::cerr);
    if (s->parsed()) return umeb::cli::cmd_sweep(sweep, std::cout, std::cerr);
    if (a->parsed()) return umeb::cli::cmd_audit(audit, std::cout, std::cerr);
  } catch (const umeb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return umeb::cli::kExitUsage;
  }
  return umeb::cli::kExitUsage;
}
