#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "umeb/verify.hpp"

namespace umeb::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// exact | float | both. Unset means "exact when representable".
enum class BackendChoice { Exact, Float, Both };
BackendChoice parse_backend_choice(const std::string& text);

/// "181x360" -> (181, 360). Throws InvalidArgument.
GridOptions parse_grid(const std::string& text);

std::string sha256_hex(const std::string& bytes);
std::string tool_version();

struct ConstructOptions {
  std::optional<int> example;
  std::vector<std::string> theta;        // 6 angles, or 3 (theta1, theta3, theta4) with closure
  std::optional<std::string> closure;    // "plus" | "minus"
  std::vector<std::string> theta_prime;  // 2 angles
  std::string s_branch = "+";
  std::optional<std::string> first_basis;  // "standard" | "chen"
  std::optional<std::string> transform_path;
  bool unchecked = false;
  std::optional<BackendChoice> backend;
  std::optional<std::string> out_path;
};

struct VerifyCommandOptions {
  std::string in_path;
  std::optional<BackendChoice> backend;
  double tol = 1e-10;
  std::string grid = "181x360";
  bool grid_oracle = true;
  std::optional<std::string> report_path;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::optional<BackendChoice> backend;  // default float over continuous angles
  double tol = 1e-10;
  std::string grid = "181x360";
  bool grid_oracle = true;
  std::string first_basis = "standard";
  std::optional<std::string> report_path;
};

struct AuditOptions {
  int example = 1;
  std::optional<BackendChoice> backend;  // default exact; both adds a float pass
  double tol = 1e-10;
  std::string grid = "181x360";
  bool grid_oracle = true;
  std::optional<std::string> report_path;
};

// Each command writes a human-readable summary to `out`, diagnostics to `err`, and
// returns the process exit code.
int cmd_construct(const ConstructOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyCommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_audit(const AuditOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace umeb::cli
