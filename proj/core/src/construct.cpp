#include "umeb/construct.hpp"

#include <algorithm>
#include <numbers>
#include <random>

namespace umeb {
namespace {

template <class T>
T inv_sqrt2() {
  return ScalarTraits<T>::sqrt2() * ScalarTraits<T>::from_rational(Rational(1, 2));
}

template <class T>
T inv_sqrt3() {
  return ScalarTraits<T>::sqrt3() * ScalarTraits<T>::from_rational(Rational(1, 3));
}

template <class T>
T phase_of(const Angle& a) {
  return ScalarTraits<T>::phase(a);
}

const Angle kHalfPi = Angle::pi_frac(1, 2);
const Angle kPi = Angle::pi_frac(1, 1);
const Angle kThirdPi = Angle::pi_frac(1, 3);
const Angle kTwoThirdsPi = Angle::pi_frac(2, 3);

bool angles_match(const Angle& a, const Angle& b, Tolerance tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return circular_distance(a, b) < tol.eq;
}

}  // namespace

bool ThetaParams::exact_embeddable() const {
  const auto ok = [](const Angle& a) { return a.exact_embeddable(); };
  return std::all_of(theta.begin(), theta.end(), ok) &&
         std::all_of(theta_prime.begin(), theta_prime.end(), ok);
}

template <class T>
FirstBasisSpec<T> FirstBasisSpec<T>::standard() {
  return {basis_ket<T, kDimA>(0), basis_ket<T, kDimA>(1)};
}

template <class T>
FirstBasisSpec<T> FirstBasisSpec<T>::chen() {
  using Tr = ScalarTraits<T>;
  const T half = Tr::from_rational(Rational(1, 2));
  const T root3_half = Tr::sqrt3() * half;
  return {{half, root3_half}, {root3_half, -half}};
}

template <class T>
FirstBasisVariant classify(const FirstBasisSpec<T>& spec, Tolerance tol) {
  const auto same = [&](const FirstBasisSpec<T>& ref) {
    for (std::size_t k = 0; k < kDimA; ++k) {
      if (!approx_equal(spec.c[k], ref.c[k], tol) || !approx_equal(spec.d[k], ref.d[k], tol)) {
        return false;
      }
    }
    return true;
  };
  if (same(FirstBasisSpec<T>::standard())) return FirstBasisVariant::Standard;
  if (same(FirstBasisSpec<T>::chen())) return FirstBasisVariant::Chen;
  return FirstBasisVariant::Other;
}

template <class T>
void validate(const FirstBasisSpec<T>& spec, Tolerance tol) {
  const T one = ScalarTraits<T>::from_rational(Rational(1));
  if (!approx_equal(norm2(spec.c), one, tol) || !approx_equal(norm2(spec.d), one, tol)) {
    throw InvalidArgument("completion pair (c, d) must have unit norm");
  }
  if (!ScalarTraits<T>::is_zero(inner(spec.c, spec.d), tol)) {
    throw InvalidArgument("completion pair (c, d) must be orthogonal");
  }
}

template <class T>
Basis<T> build_first_basis(const FirstBasisSpec<T>& spec, Tolerance tol) {
  validate(spec, tol);
  StateVector<T> bell{};
  bell[0] = inv_sqrt2<T>();  // |00'>
  bell[4] = inv_sqrt2<T>();  // |11'>
  const Matrix<T> id3 = Matrix<T>::identity(kDimB);
  Basis<T> out{};
  for (int i = 0; i < 4; ++i) out[i] = umeb::apply(kron(pauli<T>(i), id3), bell);
  const auto ket2 = basis_ket<T, kDimB>(2);
  out[4] = product_state(spec.c, ket2);
  out[5] = product_state(spec.d, ket2);
  return out;
}

template <class T>
Matrix<T> build_F(const FirstBasisSpec<T>& spec, Tolerance tol) {
  return columns_matrix(build_first_basis(spec, tol));
}

template <class T>
Matrix<T> build_W(const std::array<Angle, 6>& theta) {
  const auto& [t1, t2, t3, t4, t5, t6] = theta;
  const Matrix<T> raw(3, 3,
                      {phase_of<T>(t1), phase_of<T>(t2 + kHalfPi), phase_of<T>(t4),
                       phase_of<T>(t2), phase_of<T>(t1 + kHalfPi), phase_of<T>(t5),
                       phase_of<T>(t3), phase_of<T>(t3 - kHalfPi), phase_of<T>(t6)});
  return scaled(raw, inv_sqrt3<T>());
}

template <class T>
Matrix<T> build_S(const std::array<Angle, 2>& theta_prime, Sign branch) {
  const auto& [p1, p2] = theta_prime;
  const T lower1 = phase_of<T>(p1 + kHalfPi);
  const T lower2 = phase_of<T>(p2 + kHalfPi);
  const bool plus = branch == Sign::Plus;
  const Matrix<T> raw(2, 2, {phase_of<T>(p1), phase_of<T>(p2), plus ? lower1 : -lower1,
                             plus ? -lower2 : lower2});
  return scaled(raw, inv_sqrt2<T>());
}

template <class T>
Matrix<T> completion_operator(const Matrix<T>& s_template, const FirstBasisSpec<T>& spec) {
  const Matrix<T> c = columns_matrix(std::array<Qubit<T>, 2>{spec.c, spec.d});
  return s_template * adjoint(c);
}

template <class T>
Basis<T> build_second_basis(const Basis<T>& first, const Matrix<T>& w, const Matrix<T>& s) {
  if (w.rows() != kDimB || w.cols() != kDimB) throw ShapeError("W must be 3x3");
  if (s.rows() != kDimA || s.cols() != kDimA) throw ShapeError("S must be 2x2");
  const Matrix<T> entangled_op = kron(Matrix<T>::identity(kDimA), w);
  const Matrix<T> completion_op = kron(s, w);
  Basis<T> out{};
  for (std::size_t j = 0; j < kDim; ++j) {
    out[j] = umeb::apply(member_role(j) == MemberRole::MaximallyEntangled ? entangled_op : completion_op,
                   first[j]);
  }
  return out;
}

template <class T>
BasisPair<T> construct_pair(const ThetaParams& params, const FirstBasisSpec<T>& spec,
                            Tolerance tol) {
  BasisPair<T> pair;
  pair.first = build_first_basis(spec, tol);
  const Matrix<T> w = build_W<T>(params.theta);
  const Matrix<T> s = completion_operator(build_S<T>(params.theta_prime, params.s_branch), spec);
  pair.second = build_second_basis(pair.first, w, s);
  pair.params = params;
  pair.first_spec = spec;
  return pair;
}

ThetaParams close_theta(const Angle& theta1, const Angle& theta3, const Angle& theta4,
                        ClosureBranch branch, const std::array<Angle, 2>& theta_prime,
                        Sign s_branch) {
  const bool plus = branch == ClosureBranch::Plus;
  ThetaParams p;
  p.theta[0] = theta1;
  p.theta[1] = plus ? theta1 + kThirdPi : theta1 - kThirdPi;
  p.theta[2] = theta3;
  p.theta[3] = theta4;
  p.theta[4] = theta4 + kPi;
  const Angle base = theta3 - theta1 + theta4;
  p.theta[5] = plus ? base - kTwoThirdsPi : base + kTwoThirdsPi;
  p.theta_prime = theta_prime;
  p.s_branch = s_branch;
  return p;
}

std::optional<ClosureBranch> closure_branch(const std::array<Angle, 6>& theta, Tolerance tol) {
  for (ClosureBranch b : {ClosureBranch::Plus, ClosureBranch::Minus}) {
    const ThetaParams closed = close_theta(theta[0], theta[2], theta[3], b, {}, Sign::Plus);
    bool ok = true;
    for (std::size_t k = 0; k < 6 && ok; ++k) ok = angles_match(theta[k], closed.theta[k], tol);
    if (ok) return b;
  }
  return std::nullopt;
}

std::vector<ThetaParams> sample_valid_params(std::uint64_t seed, std::size_t count,
                                             SampleMode mode) {
  std::vector<ThetaParams> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_int_distribution<int> step(0, 23);
    std::bernoulli_distribution coin(0.5);
    const auto draw = [&]() {
      return mode == SampleMode::Continuous ? Angle::radians(angle(rng))
                                            : Angle::pi_frac(step(rng), 12);
    };
    const Angle t1 = draw();
    const Angle t3 = draw();
    const Angle t4 = draw();
    const std::array<Angle, 2> tp{draw(), draw()};
    const ClosureBranch branch = coin(rng) ? ClosureBranch::Plus : ClosureBranch::Minus;
    const Sign sign = coin(rng) ? Sign::Plus : Sign::Minus;
    out.push_back(close_theta(t1, t3, t4, branch, tp, sign));
  }
  return out;
}

#define UMEB_INSTANTIATE_CONSTRUCT(T)                                                          \
  template struct FirstBasisSpec<T>;                                                           \
  template FirstBasisVariant classify(const FirstBasisSpec<T>&, Tolerance);                    \
  template void validate(const FirstBasisSpec<T>&, Tolerance);                                 \
  template Basis<T> build_first_basis(const FirstBasisSpec<T>&, Tolerance);                    \
  template Matrix<T> build_F(const FirstBasisSpec<T>&, Tolerance);                             \
  template Matrix<T> build_W<T>(const std::array<Angle, 6>&);                                  \
  template Matrix<T> build_S<T>(const std::array<Angle, 2>&, Sign);                            \
  template Matrix<T> completion_operator(const Matrix<T>&, const FirstBasisSpec<T>&);          \
  template Basis<T> build_second_basis(const Basis<T>&, const Matrix<T>&, const Matrix<T>&);   \
  template BasisPair<T> construct_pair(const ThetaParams&, const FirstBasisSpec<T>&, Tolerance);

UMEB_INSTANTIATE_CONSTRUCT(Cyclo)
UMEB_INSTANTIATE_CONSTRUCT(Complex)

#undef UMEB_INSTANTIATE_CONSTRUCT

}  // namespace umeb
