#pragma once

#include <array>
#include <cstddef>

#include "umeb/matrix.hpp"

namespace umeb {

inline constexpr std::size_t kDimA = 2;
inline constexpr std::size_t kDimB = 3;
inline constexpr std::size_t kDim = kDimA * kDimB;

/// Amplitudes in the computational product basis
/// |00'>, |01'>, |02'>, |10'>, |11'>, |12'> (row-major A (x) B).
template <class T>
using StateVector = std::array<T, kDim>;

template <class T>
using Qubit = std::array<T, kDimA>;

template <class T>
using Qutrit = std::array<T, kDimB>;

/// <a|b>, antilinear in the first argument.
template <class T, std::size_t N>
T inner(const std::array<T, N>& a, const std::array<T, N>& b) {
  using umeb::conj;
  T sum{};
  for (std::size_t k = 0; k < N; ++k) sum += conj(a[k]) * b[k];
  return sum;
}

template <class T, std::size_t N>
T norm2(const std::array<T, N>& a) {
  return inner(a, a);
}

template <class T, std::size_t N>
std::array<T, N> apply(const Matrix<T>& m, const std::array<T, N>& v) {
  if (m.rows() != N || m.cols() != N) throw ShapeError("apply: operator does not match vector");
  std::array<T, N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

template <class T>
StateVector<T> product_state(const Qubit<T>& a, const Qutrit<T>& b) {
  StateVector<T> out{};
  for (std::size_t i = 0; i < kDimA; ++i) {
    for (std::size_t j = 0; j < kDimB; ++j) out[i * kDimB + j] = a[i] * b[j];
  }
  return out;
}

template <class T, std::size_t N>
std::array<T, N> basis_ket(std::size_t k) {
  std::array<T, N> out{};
  out.at(k) = ScalarTraits<T>::from_rational(Rational(1));
  return out;
}

template <class T, std::size_t N>
std::array<T, N> scaled(std::array<T, N> v, const T& factor) {
  for (auto& x : v) x *= factor;
  return v;
}

template <class T, std::size_t N>
std::array<Complex, N> to_complex(const std::array<T, N>& v) {
  std::array<Complex, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = to_complex(v[k]);
  return out;
}

/// Matrix whose columns are the given vectors.
template <class T, std::size_t N, std::size_t M>
Matrix<T> columns_matrix(const std::array<std::array<T, N>, M>& cols) {
  Matrix<T> out(N, M);
  for (std::size_t c = 0; c < M; ++c) {
    for (std::size_t r = 0; r < N; ++r) out(r, c) = cols[c][r];
  }
  return out;
}

template <class T, std::size_t N>
std::array<T, N> column_of(const Matrix<T>& m, std::size_t c) {
  if (m.rows() != N) throw ShapeError("column_of: row count mismatch");
  std::array<T, N> out{};
  for (std::size_t r = 0; r < N; ++r) out[r] = m(r, c);
  return out;
}

}  // namespace umeb
