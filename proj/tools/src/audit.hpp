#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "umeb/verify.hpp"

namespace umeb::cli {

struct ReconstructionItem {
  std::string item;
  bool match = false;
  double max_deviation = 0.0;
  nlohmann::json detail;
};

struct PairingOutcome {
  std::string label;
  bool primary = false;
  VerificationReport report;
};

struct AuditOutcome {
  int example = 0;
  ThetaParams params;
  std::vector<ReconstructionItem> reconstruction;
  std::vector<PairingOutcome> pairings;
  std::vector<std::string> notes;

  bool reconstruction_clean() const;
  /// Overall verdict of the pairing the example is built on.
  bool verified() const;
  nlohmann::json to_json() const;
};

/// theta'/sign pairs on the pi/12 grid for which completion_operator(build_S) equals
/// the printed S exactly (or build_S itself, when through_completion is false).
std::vector<std::pair<std::array<Angle, 2>, Sign>> search_theta_prime(
    const Matrix<Cyclo>& printed_s, const FirstBasisSpec<Cyclo>& spec, bool through_completion);

/// Printed angles of an example together with the theta'/sign that reproduce its printed S.
struct ExampleResolution {
  ThetaParams params;
  bool resolved = false;  // false if no theta'/sign reproduces the printed S
  std::vector<std::string> notes;
};
ExampleResolution resolve_example(int example);

/// Rebuilds a printed example from its angles, diffs it against the printed matrices and
/// states, then verifies it in exact arithmetic (plus float when requested).
AuditOutcome run_audit(int example, const VerifyOptions& options, bool with_float);

}  // namespace umeb::cli
