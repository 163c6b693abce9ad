#pragma once

#include <array>

#include "umeb/state.hpp"

namespace umeb {

/// Coefficient matrix M with v = sum_ij M_ij |i>|j'>.
template <class T>
Matrix<T> reshape_2x3(const StateVector<T>& v) {
  return Matrix<T>(kDimA, kDimB, std::vector<T>(v.begin(), v.end()));
}

struct SchmidtProfile {
  std::array<double, 2> coefficients{};  // descending
  int rank = 0;
};

/// Trace and determinant of M M^dagger for a 2x3 coefficient matrix.
/// det is the sum of squared 2x2 minors (Cauchy-Binet).
template <class T>
struct ReducedGram {
  T trace{};
  T det{};
};

template <class T>
ReducedGram<T> reduced_gram(const Matrix<T>& m) {
  using umeb::conj;
  ReducedGram<T> g;
  for (std::size_t r = 0; r < kDimA; ++r) {
    for (std::size_t c = 0; c < kDimB; ++c) g.trace += m(r, c) * conj(m(r, c));
  }
  for (std::size_t j = 0; j < kDimB; ++j) {
    for (std::size_t k = j + 1; k < kDimB; ++k) {
      const T minor = m(0, j) * m(1, k) - m(0, k) * m(1, j);
      g.det += minor * conj(minor);
    }
  }
  return g;
}

/// Smallest singular value of a 2x3 coefficient matrix,
/// sqrt(lambda_-) with lambda_- = 2D / (T + sqrt(T^2 - 4D)).
double min_singular_value(const Matrix<Complex>& m);

/// Both singular values, descending.
std::array<double, 2> singular_values(const Matrix<Complex>& m);

/// Singular values of reshape_2x3(v). The rank is decided exactly for the
/// exact backend (D == 0, T == 0) and against the tolerance for floats.
template <class T>
SchmidtProfile schmidt_profile(const StateVector<T>& v, Tolerance tol = {}) {
  const Matrix<T> m = reshape_2x3(v);
  SchmidtProfile p;
  p.coefficients = singular_values(to_complex(m));
  if constexpr (ScalarTraits<T>::backend == Backend::Exact) {
    const auto g = reduced_gram(m);
    p.rank = g.trace.is_zero() ? 0 : (g.det.is_zero() ? 1 : 2);
  } else {
    p.rank = 0;
    for (double s : p.coefficients) {
      if (s > tol.eq) ++p.rank;
    }
  }
  return p;
}

/// M M^dagger == I/2, i.e. Schmidt coefficients (1/sqrt2, 1/sqrt2).
/// Exact decision for the exact backend; entry-wise within tolerance otherwise.
template <class T>
bool is_maximally_entangled(const StateVector<T>& v, Tolerance tol = {}) {
  const Matrix<T> m = reshape_2x3(v);
  const Matrix<T> mmd = m * adjoint(m);
  const Matrix<T> half = scaled(Matrix<T>::identity(kDimA),
                                ScalarTraits<T>::from_rational(Rational(1, 2)));
  for (std::size_t r = 0; r < kDimA; ++r) {
    for (std::size_t c = 0; c < kDimA; ++c) {
      if (!approx_equal(mmd(r, c), half(r, c), tol)) return false;
    }
  }
  return true;
}

/// max |(M M^dagger - I/2)_{rc}|.
template <class T>
double max_entanglement_defect(const StateVector<T>& v) {
  const Matrix<T> m = reshape_2x3(v);
  const Matrix<T> half = scaled(Matrix<T>::identity(kDimA),
                                ScalarTraits<T>::from_rational(Rational(1, 2)));
  return max_deviation(m * adjoint(m), half).value;
}

}  // namespace umeb
