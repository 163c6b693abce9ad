#include "umeb/serialize.hpp"

#include <cmath>

namespace umeb {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

const json& array_of(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    throw ParseError(std::string(what) + ": expected an array of " + std::to_string(size) +
                     " entries, got " + (j.is_array() ? std::to_string(j.size()) : j.type_name()));
  }
  return j;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

template <class T>
Backend expected_backend() {
  return ScalarTraits<T>::backend;
}

}  // namespace

json encode(const Cyclo& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_string(c));
  return {{"cyclo", coeffs}};
}

json encode(const Complex& v) { return {{"re", v.real()}, {"im", v.imag()}}; }

json encode(const Scalar& v) {
  return v.is_exact() ? encode(v.exact()) : encode(v.to_complex());
}

Scalar decode_scalar(const json& j) {
  if (j.is_object() && j.contains("cyclo")) {
    const json& arr = array_of(j.at("cyclo"), Cyclo::kDegree, "cyclo");
    Cyclo::Coefficients c{};
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = parse_rational(string_of(arr[k], "cyclo coefficient"));
    return Cyclo(std::move(c));
  }
  if (j.is_object() && j.contains("re") && j.contains("im")) {
    return Complex(finite_number(j.at("re"), "re"), finite_number(j.at("im"), "im"));
  }
  throw ParseError("scalar must be {\"cyclo\": [...]} or {\"re\": x, \"im\": y}");
}

template <>
Cyclo decode_as<Cyclo>(const json& j) {
  const Scalar s = decode_scalar(j);
  if (!s.is_exact()) throw ParseError("float scalar in an exact document");
  return s.exact();
}

template <>
Complex decode_as<Complex>(const json& j) {
  const Scalar s = decode_scalar(j);
  if (s.is_exact()) throw ParseError("exact scalar in a float document");
  return s.to_complex();
}

json encode(const Angle& a) {
  if (a.is_exact()) return {{"pi_frac", to_string(a.pi_multiple())}};
  return {{"radians", a.to_radians()}};
}

Angle decode_angle(const json& j) {
  if (j.is_object() && j.contains("pi_frac")) {
    return Angle::pi_frac(parse_rational(string_of(j.at("pi_frac"), "pi_frac")));
  }
  if (j.is_object() && j.contains("radians")) {
    return Angle::radians(finite_number(j.at("radians"), "radians"));
  }
  throw ParseError("angle must be {\"pi_frac\": \"p/q\"} or {\"radians\": x}");
}

json encode(const ThetaParams& p) {
  json theta = json::array();
  for (const auto& a : p.theta) theta.push_back(encode(a));
  json theta_prime = json::array();
  for (const auto& a : p.theta_prime) theta_prime.push_back(encode(a));
  return {{"theta", theta},
          {"theta_prime", theta_prime},
          {"s_branch", p.s_branch == Sign::Plus ? "+" : "-"}};
}

ThetaParams decode_params(const json& j) {
  ThetaParams p;
  const json& theta = array_of(field(j, "theta"), 6, "theta");
  for (std::size_t k = 0; k < 6; ++k) p.theta[k] = decode_angle(theta[k]);
  const json& tp = array_of(field(j, "theta_prime"), 2, "theta_prime");
  for (std::size_t k = 0; k < 2; ++k) p.theta_prime[k] = decode_angle(tp[k]);
  const std::string sign = string_of(field(j, "s_branch"), "s_branch");
  if (sign == "+") {
    p.s_branch = Sign::Plus;
  } else if (sign == "-") {
    p.s_branch = Sign::Minus;
  } else {
    throw ParseError("s_branch must be \"+\" or \"-\"");
  }
  return p;
}

template <class T>
json encode(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <class T>
Matrix<T> decode_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    throw ParseError("matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  std::vector<T> entries;
  for (const auto& row : j) {
    array_of(row, cols, "matrix row");
    for (const auto& e : row) entries.push_back(decode_as<T>(e));
  }
  return Matrix<T>(rows, cols, std::move(entries));
}

template <class T>
json encode_state(const StateVector<T>& v) {
  json amps = json::array();
  for (const auto& a : v) amps.push_back(encode(a));
  return {{"ordering", std::string(kStateOrdering)}, {"amplitudes", amps}};
}

template <class T>
StateVector<T> decode_state(const json& j, Tolerance tol) {
  const std::string ordering = string_of(field(j, "ordering"), "ordering");
  if (ordering != kStateOrdering) throw ParseError("unsupported state ordering '" + ordering + "'");
  const json& amps = array_of(field(j, "amplitudes"), kDim, "amplitudes");
  StateVector<T> v{};
  for (std::size_t k = 0; k < kDim; ++k) v[k] = decode_as<T>(amps[k]);
  const T n2 = norm2(v);
  if (ScalarTraits<T>::is_zero(n2, tol)) throw ParseError("zero state vector");
  if (!approx_equal(n2, ScalarTraits<T>::from_rational(Rational(1)), tol)) {
    throw ParseError("state is not normalised (squared norm " +
                     std::to_string(std::abs(to_complex(n2))) + ")");
  }
  return v;
}

template <class T>
json encode(const FirstBasisSpec<T>& spec) {
  return {{"c", {encode(spec.c[0]), encode(spec.c[1])}},
          {"d", {encode(spec.d[0]), encode(spec.d[1])}}};
}

template <class T>
FirstBasisSpec<T> decode_first_spec(const json& j) {
  const json& c = array_of(field(j, "c"), 2, "c");
  const json& d = array_of(field(j, "d"), 2, "d");
  return {{decode_as<T>(c[0]), decode_as<T>(c[1])}, {decode_as<T>(d[0]), decode_as<T>(d[1])}};
}

template <class T>
json encode(const BasisPair<T>& pair) {
  json out;
  out["backend"] = std::string(to_string(expected_backend<T>()));
  if (pair.params) out["params"] = encode(*pair.params);
  if (pair.first_spec) out["first_basis_spec"] = encode(*pair.first_spec);
  json first = json::array();
  json second = json::array();
  for (const auto& s : pair.first) first.push_back(encode_state(s));
  for (const auto& s : pair.second) second.push_back(encode_state(s));
  out["first"] = first;
  out["second"] = second;
  return out;
}

namespace {

template <class T>
BasisPair<T> decode_pair_as(const json& j, Tolerance tol) {
  BasisPair<T> pair;
  const json& first = array_of(field(j, "first"), kDim, "first");
  const json& second = array_of(field(j, "second"), kDim, "second");
  for (std::size_t k = 0; k < kDim; ++k) {
    try {
      pair.first[k] = decode_state<T>(first[k], tol);
      pair.second[k] = decode_state<T>(second[k], tol);
    } catch (const ParseError& e) {
      throw ParseError("member " + std::to_string(k) + ": " + e.what());
    }
  }
  if (j.contains("params")) {
    pair.params = decode_params(j.at("params"));
    if (expected_backend<T>() == Backend::Exact && !pair.params->exact_embeddable()) {
      throw ParseError("exact document with angles that are not multiples of pi/12");
    }
  }
  if (j.contains("first_basis_spec")) {
    pair.first_spec = decode_first_spec<T>(j.at("first_basis_spec"));
    try {
      validate(*pair.first_spec, tol);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("first_basis_spec: ") + e.what());
    }
  }
  return pair;
}

}  // namespace

AnyBasisPair decode_basis_pair(const json& j, Tolerance tol) {
  try {
    const Backend backend = parse_backend(string_of(field(j, "backend"), "backend"));
    if (backend == Backend::Exact) return decode_pair_as<Cyclo>(j, tol);
    return decode_pair_as<Complex>(j, tol);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

AnyBasisPair parse_basis_pair(std::string_view text, Tolerance tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return decode_basis_pair(j, tol);
}

json encode(const CheckResult& c) {
  return {{"name", c.name},
          {"backend", std::string(to_string(c.backend))},
          {"pass", c.pass},
          {"residual", c.residual},
          {"witness", c.witness},
          {"mandatory", c.mandatory}};
}

json encode(const VerificationReport& report, std::string_view tool_version,
            std::string_view input_hash) {
  json checks = json::array();
  for (const auto& c : report.checks()) checks.push_back(encode(c));
  return {{"checks", checks},
          {"overall", report.overall()},
          {"tool_version", std::string(tool_version)},
          {"input_hash", std::string(input_hash)}};
}

#define UMEB_INSTANTIATE_SERIALIZE(T)                                 \
  template json encode(const Matrix<T>&);                             \
  template Matrix<T> decode_matrix<T>(const json&);                   \
  template json encode_state(const StateVector<T>&);                  \
  template StateVector<T> decode_state<T>(const json&, Tolerance);    \
  template json encode(const FirstBasisSpec<T>&);                     \
  template FirstBasisSpec<T> decode_first_spec<T>(const json&);       \
  template json encode(const BasisPair<T>&);

UMEB_INSTANTIATE_SERIALIZE(Cyclo)
UMEB_INSTANTIATE_SERIALIZE(Complex)

#undef UMEB_INSTANTIATE_SERIALIZE

}  // namespace umeb
