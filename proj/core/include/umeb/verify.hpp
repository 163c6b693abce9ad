#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "umeb/construct.hpp"
#include "umeb/schmidt.hpp"

namespace umeb {

/// One line of a verification report. Failed checks always carry a witness.
struct CheckResult {
  std::string name;
  Backend backend = Backend::Exact;
  bool pass = false;
  double residual = 0.0;
  nlohmann::json witness;  // null when there is nothing to point at
  bool mandatory = false;
};

/// Append-only list of checks. overall() is true iff every mandatory check passed.
class VerificationReport {
 public:
  void append(CheckResult check) { checks_.push_back(std::move(check)); }
  void append(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool overall() const;

  /// First check with this name (and backend, if given).
  const CheckResult* find(std::string_view name,
                          std::optional<Backend> backend = std::nullopt) const;

 private:
  std::vector<CheckResult> checks_;
};

/// Two orthonormal states spanning the complement of the four entangled members.
template <class T>
struct ComplementSubspace {
  StateVector<T> v1;
  StateVector<T> v2;
};

struct GridOptions {
  int nt = 181;     // t in [0, pi/2], endpoints included
  int nphi = 360;   // phi in [0, 2pi)
  bool refine = true;
  double epsilon = 1e-6;  // pass iff max min-singular-value < 1/sqrt2 - epsilon
};

/// Best point of the scan over psi(t, phi) = cos t v1 + e^{i phi} sin t v2.
struct GridScan {
  double max_min_singular_value = 0.0;
  double t = 0.0;
  double phi = 0.0;
  int grid_t = 0;    // grid indices of the best grid point before refinement
  int grid_phi = 0;
};

/// Smallest Schmidt coefficient of cos t v1 + e^{i phi} sin t v2.
double min_singular_value_at(const StateVector<Complex>& v1, const StateVector<Complex>& v2,
                             double t, double phi);

/// Grid search plus local refinement. Ties keep the lowest (t, phi) index.
GridScan scan_complement(const StateVector<Complex>& v1, const StateVector<Complex>& v2,
                         const GridOptions& grid);

/// Both generators are product states with a common second factor (up to phase),
/// so every state in their span is a product state.
template <class T>
bool complement_is_product_subspace(const ComplementSubspace<T>& complement, Tolerance tol = {});

struct VerifyOptions {
  Tolerance tol;
  GridOptions grid;
  bool run_grid_oracle = true;
};

template <class T>
CheckResult check_orthonormal(const Basis<T>& states, Tolerance tol = {});

template <class T>
CheckResult check_max_entangled(const StateVector<T>& v, Tolerance tol = {});

/// Throws InvalidArgument if the complement is not orthonormal or not orthogonal to the members.
/// Uses the product-subspace certificate when it applies, the grid scan otherwise.
template <class T>
CheckResult check_unextendible(const std::array<StateVector<T>, 4>& members,
                               const ComplementSubspace<T>& complement, const GridOptions& grid,
                               Tolerance tol = {});

/// The grid scan alone, independent of the product-subspace certificate.
template <class T>
CheckResult check_unextendible_grid(const ComplementSubspace<T>& complement,
                                    const GridOptions& grid);

/// Both inputs orthonormal and every |<first_i|second_j>|^2 == 1/6. The residual is the larger
/// of the overlap deviation and the Gram deviation of either input.
template <class T>
CheckResult check_mutually_unbiased(const Basis<T>& first, const Basis<T>& second,
                                    Tolerance tol = {});

/// The 36 overlap moduli alone, without the orthonormality precondition.
template <class T>
CheckResult check_overlap_moduli(const Basis<T>& first, const Basis<T>& second,
                                 Tolerance tol = {});

/// Columns 0-3 of F^dagger (I2 (x) W) F and columns 4-5 of F^dagger (S (x) W) F
/// have all entry moduli 1/sqrt6.
template <class T>
CheckResult check_modulus_pattern(const Matrix<T>& f, const Matrix<T>& w, const Matrix<T>& s,
                                  Tolerance tol = {});

/// The three printed angle conditions (circular differences), then unitarity of build_W
/// as a fourth, independent entry.
std::vector<CheckResult> check_theta_conditions(const ThetaParams& params, Tolerance tol = {});

/// Entry moduli of W (1/sqrt3) and of |a>, |b> (1/sqrt2) plus the perpendicularity relations
/// for the given completion variant. S is the operator applied to the completion members, so
/// |a>, |b> are the columns of S, or of S*C for the (c, d) completion.
/// z1 perp z2 means Re(z1 conj(z2)) == 0. nullopt for
/// FirstBasisVariant::Other, which has no relation list.
template <class T>
std::optional<CheckResult> check_perpendicularity(const Matrix<T>& w, const Matrix<T>& s,
                                                  FirstBasisVariant variant, Tolerance tol = {});

/// Mandatory: orthonormality, maximal entanglement of members 0-3 and unextendibility for both
/// bases, plus mutual unbiasedness. Advisory (when params are present): theta conditions,
/// perpendicularity, modulus pattern; also the grid oracle and raw overlap moduli.
template <class T>
VerificationReport verify_pair(const BasisPair<T>& pair, const VerifyOptions& options = {});

BasisPair<Complex> to_float(const BasisPair<Cyclo>& pair);

}  // namespace umeb
