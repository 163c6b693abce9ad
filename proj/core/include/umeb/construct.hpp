#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "umeb/angle.hpp"
#include "umeb/state.hpp"

namespace umeb {

/// Row sign of the S template: row 2 is (+/-) e^{i(t'1+pi/2)}, (-/+) e^{i(t'2+pi/2)}.
enum class Sign { Plus, Minus };

/// Which solution of |theta1 - theta2| = pi/3 the W template sits on.
enum class ClosureBranch { Plus, Minus };  // theta2 = theta1 +/- pi/3

/// Free parameters of the W and S templates.
struct ThetaParams {
  std::array<Angle, 6> theta;
  std::array<Angle, 2> theta_prime;
  Sign s_branch = Sign::Plus;

  /// Every angle is a multiple of pi/12.
  bool exact_embeddable() const;

  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;
};

/// The completion pair (c, d): members 4 and 5 of the first basis are c(x)|2'> and d(x)|2'>.
template <class T>
struct FirstBasisSpec {
  Qubit<T> c;
  Qubit<T> d;

  /// c = |0>, d = |1>.
  static FirstBasisSpec standard();
  /// c = (|0> + sqrt3|1>)/2, d = (sqrt3|0> - |1>)/2.
  static FirstBasisSpec chen();

  friend bool operator==(const FirstBasisSpec&, const FirstBasisSpec&) = default;
};

enum class FirstBasisVariant { Standard, Chen, Other };

template <class T>
FirstBasisVariant classify(const FirstBasisSpec<T>& spec, Tolerance tol = {});

/// Throws InvalidArgument unless c, d are orthonormal.
template <class T>
void validate(const FirstBasisSpec<T>& spec, Tolerance tol = {});

template <class T>
using Basis = std::array<StateVector<T>, kDim>;

enum class MemberRole { MaximallyEntangled, Completion };

/// Members 0-3 are the maximally entangled ones, 4-5 the product completion.
constexpr MemberRole member_role(std::size_t index) {
  return index < 4 ? MemberRole::MaximallyEntangled : MemberRole::Completion;
}

template <class T>
struct BasisPair {
  Basis<T> first;
  Basis<T> second;
  std::optional<ThetaParams> params;
  std::optional<FirstBasisSpec<T>> first_spec;
};

/// (sigma_i (x) I3)(|00'> + |11'>)/sqrt2 for i = 0..3, then c(x)|2'>, d(x)|2'>.
template <class T>
Basis<T> build_first_basis(const FirstBasisSpec<T>& spec, Tolerance tol = {});

/// Unitary whose columns are the first-basis members.
template <class T>
Matrix<T> build_F(const FirstBasisSpec<T>& spec, Tolerance tol = {});

/// W = (1/sqrt3) [[e^{it1}, e^{i(t2+pi/2)}, e^{it4}],
///                [e^{it2}, e^{i(t1+pi/2)}, e^{it5}],
///                [e^{it3}, e^{i(t3-pi/2)}, e^{it6}]].
/// Not necessarily unitary; see closure_branch().
template <class T>
Matrix<T> build_W(const std::array<Angle, 6>& theta);

/// S = (1/sqrt2) [[e^{it'1}, e^{it'2}], [+/- e^{i(t'1+pi/2)}, -/+ e^{i(t'2+pi/2)}]].
/// Unitary for every input. Its columns are the states |a>, |b>.
template <class T>
Matrix<T> build_S(const std::array<Angle, 2>& theta_prime, Sign branch);

/// The operator that sends the completion pair (c, d) to the columns of S: S * C^dagger
/// with C = [c d]. Equals S for the standard completion.
template <class T>
Matrix<T> completion_operator(const Matrix<T>& s_template, const FirstBasisSpec<T>& spec);

/// psi_j = (I2 (x) W) phi_j for j = 0..3, psi_j = (S (x) W) phi_j for j = 4, 5.
template <class T>
Basis<T> build_second_basis(const Basis<T>& first, const Matrix<T>& w, const Matrix<T>& s);

/// First basis from spec, W and S from params, then the second basis.
template <class T>
BasisPair<T> construct_pair(const ThetaParams& params, const FirstBasisSpec<T>& spec,
                            Tolerance tol = {});

/// Completes (theta1, theta3, theta4) to a unitary W:
///   theta5 = theta4 + pi,
///   theta2 = theta1 +/- pi/3,
///   theta6 = theta3 - theta1 + theta4 -/+ 2pi/3.
ThetaParams close_theta(const Angle& theta1, const Angle& theta3, const Angle& theta4,
                        ClosureBranch branch, const std::array<Angle, 2>& theta_prime,
                        Sign s_branch);

/// The closure branch the six angles satisfy (exactly for pi-fractions, within
/// tolerance otherwise), or nullopt if they satisfy neither.
std::optional<ClosureBranch> closure_branch(const std::array<Angle, 6>& theta, Tolerance tol = {});

enum class SampleMode { Continuous, PiOver12 };

/// Closure-valid parameter sets. Free angles theta1, theta3, theta4, theta'1, theta'2 are
/// uniform on [0, 2pi) (Continuous) or on multiples of pi/12; both branches uniform.
/// Sample k uses its own PRNG stream seeded from (seed, k).
std::vector<ThetaParams> sample_valid_params(std::uint64_t seed, std::size_t count,
                                             SampleMode mode);

}  // namespace umeb
