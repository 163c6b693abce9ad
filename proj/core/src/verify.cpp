#include "umeb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace umeb {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

template <class T>
constexpr Backend backend_of() {
  return ScalarTraits<T>::backend;
}

template <class T>
T rational(long num, long den = 1) {
  return ScalarTraits<T>::from_rational(Rational(num, den));
}

struct Worst {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  bool any = false;

  void offer(double v, std::size_t a, std::size_t b) {
    if (!any || v > value) {
      value = v;
      i = a;
      j = b;
      any = true;
    }
  }
};

template <class T>
Matrix<T> gram_of(const Basis<T>& states) {
  Matrix<T> g(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) g(i, j) = inner(states[i], states[j]);
  }
  return g;
}

// Pass flag plus worst entry of (G - I).
template <class T>
std::pair<bool, Worst> orthonormality(const Basis<T>& states, Tolerance tol) {
  const Matrix<T> g = gram_of(states);
  const Matrix<T> id = Matrix<T>::identity(kDim);
  bool ok = true;
  Worst worst;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      ok = ok && approx_equal(g(i, j), id(i, j), tol);
      worst.offer(deviation(g(i, j), id(i, j)), i, j);
    }
  }
  return {ok, worst};
}

template <class T>
std::pair<bool, Worst> overlap_moduli(const Basis<T>& first, const Basis<T>& second,
                                      Tolerance tol) {
  const T sixth = rational<T>(1, 6);
  bool ok = true;
  Worst worst;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const T ov = inner(first[i], second[j]);
      const T a2 = ov * conj(ov);
      ok = ok && approx_equal(a2, sixth, tol);
      worst.offer(deviation(a2, sixth), i, j);
    }
  }
  return {ok, worst};
}

nlohmann::json pair_witness(const Worst& w) { return {{"i", w.i}, {"j", w.j}}; }

// Rows of the stacked 4x3 matrix [M1; M2] are pairwise parallel.
template <class T>
bool rows_rank_at_most_one(const std::array<std::array<T, kDimB>, 4>& rows, Tolerance tol) {
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      for (std::size_t j = 0; j < kDimB; ++j) {
        for (std::size_t k = j + 1; k < kDimB; ++k) {
          const T minor = rows[a][j] * rows[b][k] - rows[a][k] * rows[b][j];
          if (!ScalarTraits<T>::is_zero(minor, tol)) return false;
        }
      }
    }
  }
  return true;
}

template <class T>
void validate_complement(const std::array<StateVector<T>, 4>& members,
                         const ComplementSubspace<T>& complement, Tolerance tol) {
  const T one = rational<T>(1);
  if (!approx_equal(norm2(complement.v1), one, tol) ||
      !approx_equal(norm2(complement.v2), one, tol) ||
      !ScalarTraits<T>::is_zero(inner(complement.v1, complement.v2), tol)) {
    throw InvalidArgument("complement generators are not orthonormal");
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const auto* v : {&complement.v1, &complement.v2}) {
      if (!ScalarTraits<T>::is_zero(inner(members[k], *v), tol)) {
        throw InvalidArgument("complement generator " + std::string(v == &complement.v1 ? "1" : "2") +
                              " is not orthogonal to member " + std::to_string(k));
      }
    }
  }
}

// Largest violation of the complement preconditions: Gram deviation of the generators and
// overlap with the members.
template <class T>
double complement_defect(const std::array<StateVector<T>, 4>& members,
                         const ComplementSubspace<T>& complement) {
  const T zero = rational<T>(0);
  const T one = rational<T>(1);
  double worst = std::max({deviation(norm2(complement.v1), one), deviation(norm2(complement.v2), one),
                           deviation(inner(complement.v1, complement.v2), zero)});
  for (const auto& m : members) {
    worst = std::max({worst, deviation(inner(m, complement.v1), zero),
                      deviation(inner(m, complement.v2), zero)});
  }
  return worst;
}

CheckResult grid_entry(const GridScan& scan, const GridOptions& grid, Backend backend) {
  CheckResult r;
  r.backend = backend;
  r.residual = scan.max_min_singular_value;
  r.pass = scan.max_min_singular_value < kInvSqrt2 - grid.epsilon;
  r.witness = {{"method", "grid"},
               {"t", scan.t},
               {"phi", scan.phi},
               {"min_singular_value", scan.max_min_singular_value},
               {"grid_index", {scan.grid_t, scan.grid_phi}}};
  return r;
}

template <class T>
ComplementSubspace<Complex> complement_to_complex(const ComplementSubspace<T>& c) {
  return {to_complex(c.v1), to_complex(c.v2)};
}

template <class T>
FirstBasisSpec<T> spec_of(const BasisPair<T>& pair) {
  if (pair.first_spec) return *pair.first_spec;
  // Completion members are c (x) |2'> and d (x) |2'>.
  return {{pair.first[4][2], pair.first[4][5]}, {pair.first[5][2], pair.first[5][5]}};
}

}  // namespace

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks()) checks_.push_back(c);
}

bool VerificationReport::overall() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return !c.mandatory || c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view name,
                                            std::optional<Backend> backend) const {
  for (const auto& c : checks_) {
    if (c.name == name && (!backend || c.backend == *backend)) return &c;
  }
  return nullptr;
}

double min_singular_value_at(const StateVector<Complex>& v1, const StateVector<Complex>& v2,
                             double t, double phi) {
  const double ct = std::cos(t);
  const Complex sp = std::polar(std::sin(t), phi);
  StateVector<Complex> psi{};
  for (std::size_t k = 0; k < kDim; ++k) psi[k] = ct * v1[k] + sp * v2[k];
  return min_singular_value(reshape_2x3(psi));
}

GridScan scan_complement(const StateVector<Complex>& v1, const StateVector<Complex>& v2,
                         const GridOptions& grid) {
  if (grid.nt < 2 || grid.nphi < 1) throw InvalidArgument("grid needs nt >= 2 and nphi >= 1");
  const double dt = (std::numbers::pi / 2) / (grid.nt - 1);
  const double dphi = 2 * std::numbers::pi / grid.nphi;
  GridScan best;
  bool have = false;
  for (int it = 0; it < grid.nt; ++it) {
    const double t = it * dt;
    for (int ip = 0; ip < grid.nphi; ++ip) {
      const double phi = ip * dphi;
      const double v = min_singular_value_at(v1, v2, t, phi);
      if (!have || v > best.max_min_singular_value) {
        best = {v, t, phi, it, ip};
        have = true;
      }
    }
  }
  if (!grid.refine) return best;

  // Compass search around the best grid point, t clamped to [0, pi/2].
  double step_t = dt;
  double step_phi = dphi;
  for (int iter = 0; iter < 200 && (step_t > 1e-12 || step_phi > 1e-12); ++iter) {
    bool moved = false;
    const std::array<std::pair<double, double>, 4> moves{
        {{step_t, 0.0}, {-step_t, 0.0}, {0.0, step_phi}, {0.0, -step_phi}}};
    for (const auto& [mt, mp] : moves) {
      const double t = std::clamp(best.t + mt, 0.0, std::numbers::pi / 2);
      const double phi = best.phi + mp;
      const double v = min_singular_value_at(v1, v2, t, phi);
      if (v > best.max_min_singular_value) {
        best.max_min_singular_value = v;
        best.t = t;
        best.phi = phi;
        moved = true;
        break;
      }
    }
    if (!moved) {
      step_t /= 2;
      step_phi /= 2;
    }
  }
  best.phi = std::fmod(best.phi, 2 * std::numbers::pi);
  if (best.phi < 0) best.phi += 2 * std::numbers::pi;
  return best;
}

template <class T>
bool complement_is_product_subspace(const ComplementSubspace<T>& complement, Tolerance tol) {
  std::array<std::array<T, kDimB>, 4> rows{};
  for (std::size_t j = 0; j < kDimB; ++j) {
    rows[0][j] = complement.v1[j];
    rows[1][j] = complement.v1[kDimB + j];
    rows[2][j] = complement.v2[j];
    rows[3][j] = complement.v2[kDimB + j];
  }
  return rows_rank_at_most_one(rows, tol);
}

template <class T>
CheckResult check_orthonormal(const Basis<T>& states, Tolerance tol) {
  const auto [ok, worst] = orthonormality(states, tol);
  CheckResult r{"orthonormal", backend_of<T>(), ok, worst.value, nullptr, true};
  if (worst.value > 0.0 || !ok) r.witness = pair_witness(worst);
  return r;
}

template <class T>
CheckResult check_max_entangled(const StateVector<T>& v, Tolerance tol) {
  CheckResult r{"max_entangled", backend_of<T>(), is_maximally_entangled(v, tol),
                max_entanglement_defect(v), nullptr, true};
  if (!r.pass) {
    const auto profile = schmidt_profile(v, tol);
    r.witness = {{"schmidt_coefficients", profile.coefficients}, {"rank", profile.rank}};
  }
  return r;
}

template <class T>
CheckResult check_unextendible(const std::array<StateVector<T>, 4>& members,
                               const ComplementSubspace<T>& complement, const GridOptions& grid,
                               Tolerance tol) {
  validate_complement(members, complement, tol);
  if (complement_is_product_subspace(complement, tol)) {
    return {"unextendible", backend_of<T>(), true, 0.0,
            nlohmann::json{{"method", "product-subspace"}}, true};
  }
  CheckResult r = check_unextendible_grid(complement, grid);
  r.backend = backend_of<T>();
  r.mandatory = true;
  return r;
}

template <class T>
CheckResult check_unextendible_grid(const ComplementSubspace<T>& complement,
                                    const GridOptions& grid) {
  const auto c = complement_to_complex(complement);
  CheckResult r = grid_entry(scan_complement(c.v1, c.v2, grid), grid, Backend::Float);
  r.name = "unextendible_grid_oracle";
  return r;
}

template <class T>
CheckResult check_mutually_unbiased(const Basis<T>& first, const Basis<T>& second,
                                    Tolerance tol) {
  const auto [ok1, w1] = orthonormality(first, tol);
  const auto [ok2, w2] = orthonormality(second, tol);
  const auto [ok_ov, wov] = overlap_moduli(first, second, tol);
  CheckResult r{"mutually_unbiased", backend_of<T>(), ok1 && ok2 && ok_ov, 0.0, nullptr, true};
  struct Term {
    const char* kind;
    const char* basis;
    const Worst* worst;
  };
  const std::array<Term, 3> terms{{{"overlap", nullptr, &wov},
                                   {"orthonormality", "first", &w1},
                                   {"orthonormality", "second", &w2}}};
  const Term* top = &terms[0];
  for (const auto& term : terms) {
    if (term.worst->value > top->worst->value) top = &term;
  }
  r.residual = top->worst->value;
  if (!r.pass || r.residual > 0.0) {
    r.witness = pair_witness(*top->worst);
    r.witness["kind"] = top->kind;
    if (top->basis != nullptr) r.witness["basis"] = top->basis;
    r.witness["overlap_residual"] = wov.value;
  }
  return r;
}

template <class T>
CheckResult check_overlap_moduli(const Basis<T>& first, const Basis<T>& second, Tolerance tol) {
  const auto [ok, worst] = overlap_moduli(first, second, tol);
  CheckResult r{"overlap_moduli", backend_of<T>(), ok, worst.value, nullptr, false};
  if (!ok || worst.value > 0.0) r.witness = pair_witness(worst);
  return r;
}

template <class T>
CheckResult check_modulus_pattern(const Matrix<T>& f, const Matrix<T>& w, const Matrix<T>& s,
                                  Tolerance tol) {
  const Matrix<T> fd = adjoint(f);
  const Matrix<T> entangled = fd * kron(Matrix<T>::identity(kDimA), w) * f;
  const Matrix<T> completion = fd * kron(s, w) * f;
  const T sixth = rational<T>(1, 6);
  bool ok = true;
  Worst worst;
  std::string worst_matrix;
  const auto scan = [&](const Matrix<T>& m, std::size_t col_begin, std::size_t col_end,
                        const char* label) {
    for (std::size_t r = 0; r < kDim; ++r) {
      for (std::size_t c = col_begin; c < col_end; ++c) {
        const T a2 = m(r, c) * conj(m(r, c));
        ok = ok && approx_equal(a2, sixth, tol);
        const double d = deviation(a2, sixth);
        if (!worst.any || d > worst.value) worst_matrix = label;
        worst.offer(d, r, c);
      }
    }
  };
  scan(entangled, 0, 4, "F^dagger (I2 (x) W) F");
  scan(completion, 4, 6, "F^dagger (S (x) W) F");
  CheckResult r{"modulus_pattern", backend_of<T>(), ok, worst.value, nullptr, false};
  if (!ok || worst.value > 0.0) {
    r.witness = {{"matrix", worst_matrix}, {"row", worst.i}, {"col", worst.j}};
  }
  return r;
}

std::vector<CheckResult> check_theta_conditions(const ThetaParams& params, Tolerance tol) {
  const auto& th = params.theta;
  const bool exact_angles = std::all_of(th.begin(), th.end(), [](const Angle& a) {
    return a.is_exact();
  });
  const bool embeddable = std::all_of(th.begin(), th.end(), [](const Angle& a) {
    return a.exact_embeddable();
  });
  const Backend angle_backend = exact_angles ? Backend::Exact : Backend::Float;
  std::vector<CheckResult> out;

  const auto circular = [&](const char* name, const Angle& a, const Angle& b,
                            const Rational& target_multiple, const char* relation) {
    const double target = to_double(target_multiple) * std::numbers::pi;
    const double d = circular_distance(a, b);
    bool ok = false;
    if (exact_angles) {
      const Rational diff = (a - b).pi_multiple();
      ok = diff == target_multiple || diff == 2 - target_multiple;
    } else {
      ok = std::abs(d - target) < tol.eq;
    }
    CheckResult r{name, angle_backend, ok, std::abs(d - target), nullptr, false};
    if (!ok) r.witness = {{"relation", relation}, {"circular_difference", d}, {"target", target}};
    out.push_back(std::move(r));
  };
  circular("theta.diff_1_2", th[0], th[1], Rational(1, 3), "|theta1 - theta2| = pi/3");
  circular("theta.diff_4_5", th[3], th[4], Rational(1), "|theta4 - theta5| = pi");

  // e^{i(t1 - t4)} e^{-i pi/3} + e^{i(t3 - t6)} = 0
  const Angle lhs_angle = th[0] - th[3] - Angle::pi_frac(1, 3);
  const Angle rhs_angle = th[2] - th[5];
  {
    CheckResult r{"theta.phase_relation", Backend::Float, false, 0.0, nullptr, false};
    if (embeddable) {
      const Cyclo sum = ScalarTraits<Cyclo>::phase(lhs_angle) + ScalarTraits<Cyclo>::phase(rhs_angle);
      r.backend = Backend::Exact;
      r.pass = sum.is_zero();
      r.residual = std::abs(sum.to_complex());
    } else {
      const Complex sum = ScalarTraits<Complex>::phase(lhs_angle) +
                          ScalarTraits<Complex>::phase(rhs_angle);
      r.residual = std::abs(sum);
      r.pass = r.residual < tol.eq;
    }
    if (!r.pass) {
      r.witness = {{"relation", "e^{i(theta1-theta4)} e^{-i pi/3} + e^{i(theta3-theta6)} = 0"},
                   {"modulus", r.residual}};
    }
    out.push_back(std::move(r));
  }

  {
    CheckResult r{"theta.unitarity_ground_truth", Backend::Float, false, 0.0, nullptr, false};
    UnitarityResult u;
    if (embeddable) {
      u = is_unitary(build_W<Cyclo>(th), tol);
      r.backend = Backend::Exact;
    } else {
      u = is_unitary(build_W<Complex>(th), tol);
    }
    r.pass = u.unitary;
    r.residual = u.residual;
    if (!r.pass) {
      r.witness = {{"matrix", "W^dagger W - I"}, {"max_entry_deviation", u.residual}};
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
std::optional<CheckResult> check_perpendicularity(const Matrix<T>& w, const Matrix<T>& s,
                                                  FirstBasisVariant variant, Tolerance tol) {
  if (variant == FirstBasisVariant::Other) return std::nullopt;
  // 1-based accessors matching the usual w_ij / s_ij labels.
  const auto W = [&](int i, int j) { return w(i - 1, j - 1); };
  const auto S = [&](int i, int j) { return s(i - 1, j - 1); };
  const T r3 = ScalarTraits<T>::sqrt3();

  bool ok = true;
  double worst = 0.0;
  std::string worst_label;
  const auto consider = [&](const T& defect, const std::string& label) {
    ok = ok && ScalarTraits<T>::is_zero(defect, tol);
    const double d = std::abs(to_complex(defect));
    if (d > worst || worst_label.empty()) {
      worst = d;
      worst_label = label;
    }
  };
  const auto perp = [&](const T& a, const T& b, const std::string& label) {
    consider(perpendicularity_defect(a, b), label);
  };

  const T third = rational<T>(1, 3);
  const T half = rational<T>(1, 2);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      consider(W(i, j) * conj(W(i, j)) - third,
               "|w" + std::to_string(i) + std::to_string(j) + "|^2 = 1/3");
    }
  }
  // The states |a>, |b> are the columns of S for the standard completion and of S*C for (c, d).
  const Matrix<T> ab = variant == FirstBasisVariant::Standard
                           ? s
                           : s * columns_matrix(std::array{FirstBasisSpec<T>::chen().c,
                                                           FirstBasisSpec<T>::chen().d});
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      consider(ab(i, j) * conj(ab(i, j)) - half,
               std::string(j == 0 ? "|a" : "|b") + std::to_string(i) + "|^2 = 1/2");
    }
  }
  perp(W(1, 1), W(2, 2), "w11 perp w22");
  perp(W(2, 1), W(1, 2), "w21 perp w12");
  if (variant == FirstBasisVariant::Standard) {
    perp(W(1, 3) * S(1, 1), W(2, 3) * S(2, 1), "w13 s11 perp w23 s21");
    perp(W(2, 3) * S(1, 1), W(1, 3) * S(2, 1), "w23 s11 perp w13 s21");
    perp(W(1, 3) * S(1, 2), W(2, 3) * S(2, 2), "w13 s12 perp w23 s22");
    perp(W(2, 3) * S(1, 2), W(1, 3) * S(2, 2), "w23 s12 perp w13 s22");
  } else {
    perp(W(3, 1), W(3, 2), "w31 perp w32");
    perp(S(1, 1) + r3 * S(1, 2), S(2, 1) + r3 * S(2, 2),
         "(s11 + sqrt3 s12) perp (s21 + sqrt3 s22)");
    perp(r3 * S(1, 1) - S(1, 2), r3 * S(2, 1) - S(2, 2),
         "(sqrt3 s11 - s12) perp (sqrt3 s21 - s22)");
  }
  CheckResult r{"perpendicularity", backend_of<T>(), ok, worst, nullptr, false};
  r.witness = {{"variant", variant == FirstBasisVariant::Standard ? "standard" : "chen"}};
  if (!ok || worst > 0.0) r.witness["worst_relation"] = worst_label;
  return r;
}

template <class T>
VerificationReport verify_pair(const BasisPair<T>& pair, const VerifyOptions& options) {
  const Tolerance tol = options.tol;
  VerificationReport report;
  const auto prefixed = [](CheckResult r, const std::string& prefix) {
    r.name = prefix + "." + r.name;
    return r;
  };

  for (const auto& [label, basis] : {std::pair<std::string, const Basis<T>*>{"first", &pair.first},
                                     {"second", &pair.second}}) {
    report.append(prefixed(check_orthonormal(*basis, tol), label));

    CheckResult ent{label + ".max_entangled", backend_of<T>(), true, 0.0, nullptr, true};
    for (std::size_t k = 0; k < 4; ++k) {
      const CheckResult member = check_max_entangled((*basis)[k], tol);
      if (!member.pass && ent.pass) {
        ent.pass = false;
        ent.witness = member.witness;
        ent.witness["member"] = k;
      }
      ent.residual = std::max(ent.residual, member.residual);
    }
    report.append(std::move(ent));

    const std::array<StateVector<T>, 4> members{(*basis)[0], (*basis)[1], (*basis)[2],
                                                (*basis)[3]};
    const ComplementSubspace<T> complement{(*basis)[4], (*basis)[5]};
    try {
      report.append(prefixed(check_unextendible(members, complement, options.grid, tol), label));
    } catch (const InvalidArgument& e) {
      report.append({label + ".unextendible", backend_of<T>(), false,
                     complement_defect(members, complement),
                     nlohmann::json{{"error", e.what()}}, true});
    }
    if (options.run_grid_oracle) {
      report.append(prefixed(check_unextendible_grid(complement, options.grid), label));
    }
  }

  report.append(check_mutually_unbiased(pair.first, pair.second, tol));
  report.append(check_overlap_moduli(pair.first, pair.second, tol));

  if (pair.params) {
    for (auto& c : check_theta_conditions(*pair.params, tol)) report.append(std::move(c));
    const FirstBasisSpec<T> spec = spec_of(pair);
    const Matrix<T> w = build_W<T>(pair.params->theta);
    const Matrix<T> s =
        completion_operator(build_S<T>(pair.params->theta_prime, pair.params->s_branch), spec);
    if (auto perp = check_perpendicularity(w, s, classify(spec, tol), tol)) {
      report.append(std::move(*perp));
    }
    report.append(check_modulus_pattern(columns_matrix(pair.first), w, s, tol));
  }
  return report;
}

BasisPair<Complex> to_float(const BasisPair<Cyclo>& pair) {
  BasisPair<Complex> out;
  for (std::size_t k = 0; k < kDim; ++k) {
    out.first[k] = to_complex(pair.first[k]);
    out.second[k] = to_complex(pair.second[k]);
  }
  out.params = pair.params;
  if (pair.first_spec) out.first_spec = FirstBasisSpec<Complex>{to_complex(pair.first_spec->c),
                                                                to_complex(pair.first_spec->d)};
  return out;
}

#define UMEB_INSTANTIATE_VERIFY(T)                                                               \
  template bool complement_is_product_subspace(const ComplementSubspace<T>&, Tolerance);         \
  template CheckResult check_orthonormal(const Basis<T>&, Tolerance);                            \
  template CheckResult check_max_entangled(const StateVector<T>&, Tolerance);                    \
  template CheckResult check_unextendible(const std::array<StateVector<T>, 4>&,                  \
                                          const ComplementSubspace<T>&, const GridOptions&,      \
                                          Tolerance);                                            \
  template CheckResult check_unextendible_grid(const ComplementSubspace<T>&, const GridOptions&); \
  template CheckResult check_mutually_unbiased(const Basis<T>&, const Basis<T>&, Tolerance);     \
  template CheckResult check_overlap_moduli(const Basis<T>&, const Basis<T>&, Tolerance);        \
  template CheckResult check_modulus_pattern(const Matrix<T>&, const Matrix<T>&,                 \
                                             const Matrix<T>&, Tolerance);                       \
  template std::optional<CheckResult> check_perpendicularity(                                    \
      const Matrix<T>&, const Matrix<T>&, FirstBasisVariant, Tolerance);                         \
  template VerificationReport verify_pair(const BasisPair<T>&, const VerifyOptions&);

UMEB_INSTANTIATE_VERIFY(Cyclo)
UMEB_INSTANTIATE_VERIFY(Complex)

#undef UMEB_INSTANTIATE_VERIFY

}  // namespace umeb
