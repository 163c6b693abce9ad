#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "audit.hpp"
#include "fixtures.hpp"
#include "umeb/serialize.hpp"

#ifndef UMEB_VERSION
#define UMEB_VERSION "0.0.0"
#endif

namespace umeb::cli {
namespace {

/// Thrown for anything that maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("error while writing '" + path + "'");
}

VerifyOptions make_verify_options(double tol, const std::string& grid, bool grid_oracle) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("tolerance must be positive");
  VerifyOptions options;
  options.tol.eq = tol;
  options.grid = parse_grid(grid);
  options.run_grid_oracle = grid_oracle;
  return options;
}

std::vector<Angle> parse_angles(const std::vector<std::string>& items) {
  std::vector<Angle> out;
  for (const auto& s : items) out.push_back(parse_angle(s));
  return out;
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw UsageError("S sign must be + or -, got '" + s + "'");
}

void print_check(std::ostream& out, const CheckResult& c) {
  out << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << to_string(c.backend) << "]"
      << (c.mandatory ? "" : " (advisory)") << " residual=" << sci(c.residual) << '\n';
}

const CheckResult* worst_failure(const VerificationReport& report) {
  const CheckResult* worst = nullptr;
  for (const auto& c : report.checks()) {
    if (!c.mandatory || c.pass) continue;
    if (!worst || c.residual > worst->residual) worst = &c;
  }
  return worst;
}

void print_report(std::ostream& out, const VerificationReport& report) {
  for (const auto& c : report.checks()) print_check(out, c);
  out << "overall: " << (report.overall() ? "PASS" : "FAIL") << '\n';
  if (const CheckResult* w = worst_failure(report)) {
    out << "worst witness: " << w->name << " [" << to_string(w->backend)
        << "] residual=" << sci(w->residual) << " witness=" << w->witness.dump() << '\n';
  }
}

double max_mandatory_residual(const VerificationReport& report) {
  double worst = 0.0;
  for (const auto& c : report.checks()) {
    if (c.mandatory) worst = std::max(worst, c.residual);
  }
  return worst;
}

// construct --------------------------------------------------------------------------------

struct Built {
  json document;
  std::string summary;
};

template <class T>
json pair_document(const BasisPair<T>& pair, const std::string& source, bool unchecked) {
  json doc = encode(pair);
  doc["provenance"] = {{"tool", "umeb construct"},
                       {"tool_version", tool_version()},
                       {"source", source},
                       {"unchecked", unchecked}};
  return doc;
}

Built construct_from_params(const ThetaParams& params, const std::string& spec_name,
                            std::optional<BackendChoice> choice, bool unchecked,
                            const std::string& source) {
  if (choice == BackendChoice::Both) throw UsageError("construct takes --backend exact or float");
  const bool embeddable = params.exact_embeddable();
  if (choice == BackendChoice::Exact && !embeddable) {
    throw UsageError("exact backend needs every angle to be a multiple of pi/12");
  }
  const bool exact = choice ? *choice == BackendChoice::Exact : embeddable;
  if (!unchecked && !closure_branch(params.theta)) {
    throw UsageError("theta does not satisfy the unitarity closure; pass --unchecked to build anyway");
  }
  Built b;
  if (exact) {
    b.document = pair_document(construct_pair(params, first_spec_named(spec_name)), source, unchecked);
  } else {
    const auto spec = spec_name == "chen" ? FirstBasisSpec<Complex>::chen()
                                          : FirstBasisSpec<Complex>::standard();
    b.document = pair_document(construct_pair(params, spec), source, unchecked);
  }
  b.summary = std::string("constructed ") + (exact ? "exact" : "float") + " pair from " + source +
              " (first basis: " + spec_name + ")";
  return b;
}

template <class T>
Built construct_from_transform(const Matrix<T>& w, const Matrix<T>& s, const std::string& spec_name,
                               const std::string& source) {
  if (w.rows() != 3 || w.cols() != 3) throw UsageError("W must be 3x3");
  if (s.rows() != 2 || s.cols() != 2) throw UsageError("S must be 2x2");
  FirstBasisSpec<T> spec = spec_name == "chen" ? FirstBasisSpec<T>::chen()
                                               : FirstBasisSpec<T>::standard();
  BasisPair<T> pair;
  pair.first = build_first_basis(spec);
  pair.second = build_second_basis(pair.first, w, s);
  pair.first_spec = spec;
  return {pair_document(pair, source, true),
          std::string("constructed ") + std::string(to_string(ScalarTraits<T>::backend)) +
              " pair from " + source + " (first basis: " + spec_name + ")"};
}

Built construct_transform(const ConstructOptions& opts, const std::string& spec_name) {
  if (!opts.unchecked) throw UsageError("--transform requires --unchecked");
  const std::string source = "transform file";
  json j;
  try {
    j = json::parse(read_file(*opts.transform_path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("transform file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("W") || !j.contains("S")) {
    throw ParseError("transform file must be {\"W\": matrix, \"S\": matrix}");
  }
  if (opts.backend == BackendChoice::Both) throw UsageError("construct takes --backend exact or float");
  std::optional<Matrix<Cyclo>> w_exact;
  std::optional<Matrix<Cyclo>> s_exact;
  try {
    w_exact = decode_matrix<Cyclo>(j.at("W"));
    s_exact = decode_matrix<Cyclo>(j.at("S"));
  } catch (const ParseError&) {
    w_exact.reset();
  }
  if (w_exact && opts.backend != BackendChoice::Float) {
    return construct_from_transform(*w_exact, *s_exact, spec_name, source);
  }
  if (!w_exact && opts.backend == BackendChoice::Exact) {
    throw UsageError("exact backend needs exact matrix entries");
  }
  const Matrix<Complex> w = w_exact ? to_complex(*w_exact) : decode_matrix<Complex>(j.at("W"));
  const Matrix<Complex> s = w_exact ? to_complex(*s_exact) : decode_matrix<Complex>(j.at("S"));
  return construct_from_transform(w, s, spec_name, source);
}

// sweep ------------------------------------------------------------------------------------

// Decade bins: "0", then "[1e-k, 1e-k+1)" with everything below 1e-17 pooled.
std::string decade_bin(double r) {
  if (r == 0.0) return "0";
  if (r >= 1.0) return ">=1";
  int e = static_cast<int>(std::floor(std::log10(r)));
  if (e < -17) return "<1e-17";
  char buf[32];
  std::snprintf(buf, sizeof buf, "[1e%d,1e%d)", e, e + 1);
  return buf;
}

int decade_order(const std::string& bin) {
  if (bin == "0") return -100;
  if (bin == "<1e-17") return -99;
  if (bin == ">=1") return 100;
  return std::stoi(bin.substr(3));
}

}  // namespace

BackendChoice parse_backend_choice(const std::string& text) {
  if (text == "exact") return BackendChoice::Exact;
  if (text == "float") return BackendChoice::Float;
  if (text == "both") return BackendChoice::Both;
  throw InvalidArgument("backend must be exact, float or both, got '" + text + "'");
}

GridOptions parse_grid(const std::string& text) {
  const auto x = text.find('x');
  GridOptions grid;
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    std::size_t used_t = 0;
    std::size_t used_phi = 0;
    const std::string nt = text.substr(0, x);
    const std::string nphi = text.substr(x + 1);
    grid.nt = std::stoi(nt, &used_t);
    grid.nphi = std::stoi(nphi, &used_phi);
    if (used_t != nt.size() || used_phi != nphi.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidArgument("grid must look like 181x360, got '" + text + "'");
  }
  if (grid.nt < 2 || grid.nphi < 1) throw InvalidArgument("grid needs Nt >= 2 and Nphi >= 1");
  return grid;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

std::string tool_version() { return UMEB_VERSION; }

int cmd_construct(const ConstructOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const int sources = int(opts.example.has_value()) + int(!opts.theta.empty()) +
                        int(opts.transform_path.has_value());
    if (sources != 1) throw UsageError("give exactly one of --example, --theta, --transform");

    Built built;
    if (opts.transform_path) {
      built = construct_transform(opts, opts.first_basis.value_or("standard"));
    } else if (opts.example) {
      const ExampleResolution res = resolve_example(*opts.example);
      if (!res.resolved) throw UsageError("example S matrix could not be resolved");
      const std::string spec = opts.first_basis.value_or(printed_example(*opts.example).first_basis);
      built = construct_from_params(res.params, spec, opts.backend, opts.unchecked,
                                    "example " + std::to_string(*opts.example));
    } else {
      const auto angles = parse_angles(opts.theta);
      const auto tp_items = opts.theta_prime.empty() ? std::vector<std::string>{"0", "0"}
                                                     : opts.theta_prime;
      const auto tp = parse_angles(tp_items);
      if (tp.size() != 2) throw UsageError("--theta-prime takes 2 angles");
      const Sign sign = parse_sign(opts.s_branch);
      ThetaParams params;
      if (opts.closure) {
        if (angles.size() != 3) throw UsageError("with --closure, --theta takes theta1,theta3,theta4");
        const ClosureBranch branch =
            *opts.closure == "plus"    ? ClosureBranch::Plus
            : *opts.closure == "minus" ? ClosureBranch::Minus
                                       : throw UsageError("--closure must be plus or minus");
        params = close_theta(angles[0], angles[1], angles[2], branch, {tp[0], tp[1]}, sign);
      } else {
        if (angles.size() != 6) throw UsageError("--theta takes 6 angles");
        std::copy(angles.begin(), angles.end(), params.theta.begin());
        params.theta_prime = {tp[0], tp[1]};
        params.s_branch = sign;
      }
      built = construct_from_params(params, opts.first_basis.value_or("standard"), opts.backend,
                                    opts.unchecked, "parameters");
    }
    const std::string text = built.document.dump(2) + "\n";
    if (opts.out_path) {
      write_file(*opts.out_path, text);
      out << built.summary << " -> " << *opts.out_path << '\n';
    } else {
      out << text;
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyCommandOptions& opts, std::ostream& out, std::ostream& err) {
  std::string text;
  AnyBasisPair pair;
  VerifyOptions options;
  try {
    options = make_verify_options(opts.tol, opts.grid, opts.grid_oracle);
    text = read_file(opts.in_path);
    pair = parse_basis_pair(text, options.tol);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  VerificationReport report;
  if (const auto* exact = std::get_if<BasisPair<Cyclo>>(&pair)) {
    const BackendChoice choice = opts.backend.value_or(BackendChoice::Exact);
    if (choice != BackendChoice::Float) report.append(verify_pair(*exact, options));
    if (choice != BackendChoice::Exact) report.append(verify_pair(to_float(*exact), options));
  } else {
    if (opts.backend && *opts.backend != BackendChoice::Float) {
      err << "error: '" << opts.in_path << "' holds float amplitudes; only --backend float applies\n";
      return kExitUsage;
    }
    report.append(verify_pair(std::get<BasisPair<Complex>>(pair), options));
  }

  print_report(out, report);
  if (opts.report_path) {
    try {
      write_file(*opts.report_path, encode(report, tool_version(), sha256_hex(text)).dump(2) + "\n");
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return report.overall() ? kExitPass : kExitFail;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  try {
    options = make_verify_options(opts.tol, opts.grid, opts.grid_oracle);
    if (opts.count < 1) throw UsageError("count must be at least 1");
    if (opts.first_basis != "standard" && opts.first_basis != "chen") {
      throw UsageError("first basis must be standard or chen");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const BackendChoice choice = opts.backend.value_or(BackendChoice::Float);
  const SampleMode mode = choice == BackendChoice::Float ? SampleMode::Continuous : SampleMode::PiOver12;
  const auto samples = sample_valid_params(opts.seed, opts.count, mode);
  const auto spec_exact = first_spec_named(opts.first_basis);
  const auto spec_float = opts.first_basis == "chen" ? FirstBasisSpec<Complex>::chen()
                                                     : FirstBasisSpec<Complex>::standard();

  std::size_t passed = 0;
  double worst = 0.0;
  std::size_t worst_index = 0;
  std::string worst_check = "none";
  std::map<int, std::pair<std::string, std::size_t>> histogram;
  json sample_log = json::array();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    VerificationReport report;
    if (choice != BackendChoice::Float) report.append(verify_pair(construct_pair(samples[k], spec_exact), options));
    if (choice != BackendChoice::Exact) report.append(verify_pair(construct_pair(samples[k], spec_float), options));
    if (report.overall()) ++passed;
    double mu = 0.0;
    for (const auto& c : report.checks()) {
      if (c.name == "mutually_unbiased") mu = std::max(mu, c.residual);
      if (c.mandatory && (worst_check == "none" || c.residual > worst)) {
        worst = c.residual;
        worst_index = k;
        worst_check = c.name + " [" + std::string(to_string(c.backend)) + "]";
      }
    }
    const std::string bin = decade_bin(mu);
    auto& slot = histogram[decade_order(bin)];
    slot.first = bin;
    ++slot.second;
    sample_log.push_back({{"index", k},
                          {"params", encode(samples[k])},
                          {"overall", report.overall()},
                          {"mu_residual", mu},
                          {"max_mandatory_residual", max_mandatory_residual(report)}});
  }

  const std::string backend_name = choice == BackendChoice::Exact   ? "exact"
                                   : choice == BackendChoice::Float ? "float"
                                                                    : "both";
  out << "sweep seed=" << opts.seed << " count=" << opts.count << " backend=" << backend_name
      << " angles=" << (mode == SampleMode::Continuous ? "continuous" : "pi/12 grid")
      << " first_basis=" << opts.first_basis << '\n';
  out << "passed: " << passed << "/" << samples.size() << '\n';
  out << "worst mandatory residual: " << sci(worst) << " (sample " << worst_index << ", "
      << worst_check << ")\n";
  out << "mutual unbiasedness residual histogram:\n";
  json hist = json::object();
  for (const auto& [order, entry] : histogram) {
    char line[64];
    std::snprintf(line, sizeof line, "  %-14s %zu\n", entry.first.c_str(), entry.second);
    out << line;
    hist[entry.first] = entry.second;
  }

  if (opts.report_path) {
    const std::string input = "seed=" + std::to_string(opts.seed) + ";count=" +
                              std::to_string(opts.count) + ";backend=" + backend_name +
                              ";first_basis=" + opts.first_basis;
    const json doc = {{"seed", opts.seed},
                      {"count", opts.count},
                      {"backend", backend_name},
                      {"passed", passed},
                      {"worst_residual", worst},
                      {"histogram", hist},
                      {"samples", sample_log},
                      {"overall", passed == samples.size()},
                      {"tool_version", tool_version()},
                      {"input_hash", sha256_hex(input)}};
    try {
      write_file(*opts.report_path, doc.dump(2) + "\n");
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return passed == samples.size() ? kExitPass : kExitFail;
}

int cmd_audit(const AuditOptions& opts, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  try {
    options = make_verify_options(opts.tol, opts.grid, opts.grid_oracle);
    printed_example(opts.example);
    if (opts.backend == BackendChoice::Float) throw UsageError("audit runs exact; use --backend both to add float");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const AuditOutcome audit = run_audit(opts.example, options, opts.backend == BackendChoice::Both);

  out << "audit of example " << audit.example << '\n';
  out << "reconstruction:\n";
  for (const auto& r : audit.reconstruction) {
    out << "  " << (r.match ? "MATCH    " : "MISMATCH ") << r.item;
    if (!r.match) out << " (max deviation " << sci(r.max_deviation) << ")";
    out << '\n';
  }
  for (const auto& p : audit.pairings) {
    out << "verification, " << p.label << (p.primary ? "" : " [supplementary]") << ":\n";
    for (const auto& c : p.report.checks()) {
      out << "  ";
      print_check(out, c);
    }
    out << "  overall: " << (p.report.overall() ? "PASS" : "FAIL") << '\n';
  }
  out << "notes:\n";
  for (const auto& n : audit.notes) out << "  - " << n << '\n';
  out << "verdict: claim " << (audit.verified() ? "REPRODUCED" : "NOT REPRODUCED")
      << " (exact arithmetic)\n";

  if (opts.report_path) {
    json doc = audit.to_json();
    doc["tool_version"] = tool_version();
    doc["input_hash"] = sha256_hex("audit:example=" + std::to_string(opts.example));
    try {
      write_file(*opts.report_path, doc.dump(2) + "\n");
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return audit.verified() ? kExitPass : kExitFail;
}

}  // namespace umeb::cli
