#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "umeb/construct.hpp"
#include "umeb/verify.hpp"

namespace umeb {

using json = nlohmann::json;

inline constexpr std::string_view kStateOrdering = "row-major A⊗B";

// Scalars: exact -> {"cyclo": [8 x "p/q"]}, float -> {"re": x, "im": y}.
json encode(const Cyclo& v);
json encode(const Complex& v);
json encode(const Scalar& v);
Scalar decode_scalar(const json& j);

template <class T>
T decode_as(const json& j);
template <>
Cyclo decode_as<Cyclo>(const json& j);
template <>
Complex decode_as<Complex>(const json& j);

// Angles: {"pi_frac": "p/q"} or {"radians": x}.
json encode(const Angle& a);
Angle decode_angle(const json& j);

// {"theta": [6 angles], "theta_prime": [2 angles], "s_branch": "+" | "-"}
json encode(const ThetaParams& p);
ThetaParams decode_params(const json& j);

template <class T>
json encode(const Matrix<T>& m);

template <class T>
Matrix<T> decode_matrix(const json& j);

// {"ordering": "row-major A(x)B", "amplitudes": [6 scalars]}
template <class T>
json encode_state(const StateVector<T>& v);

/// Rejects wrong lengths, zero vectors and states whose squared norm is not 1
/// (exactly, or within tolerance for floats).
template <class T>
StateVector<T> decode_state(const json& j, Tolerance tol = {});

// {"c": [2 scalars], "d": [2 scalars]}
template <class T>
json encode(const FirstBasisSpec<T>& spec);

template <class T>
FirstBasisSpec<T> decode_first_spec(const json& j);

/// {"backend", "params"?, "first_basis_spec"?, "first": [6 states], "second": [6 states]}
template <class T>
json encode(const BasisPair<T>& pair);

using AnyBasisPair = std::variant<BasisPair<Cyclo>, BasisPair<Complex>>;

/// Throws ParseError on any malformed or degenerate input.
AnyBasisPair decode_basis_pair(const json& j, Tolerance tol = {});
AnyBasisPair parse_basis_pair(std::string_view text, Tolerance tol = {});

json encode(const CheckResult& c);

/// {"checks": [...], "overall": bool, "tool_version": ..., "input_hash": ...}
json encode(const VerificationReport& report, std::string_view tool_version,
            std::string_view input_hash);

}  // namespace umeb
