#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "umeb/scalar.hpp"

namespace umeb {

/// Dense row-major matrix over one scalar backend.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
      throw ShapeError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                       std::to_string(rows * cols) + " entries, got " +
                       std::to_string(data_.size()));
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(ScalarTraits<T>::from_rational(Rational(1)));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> entries() const { return data_; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& lhs = a(r, k);
      if (lhs == T{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return matmul(a, b);
}

template <class T>
Matrix<T> adjoint(const Matrix<T>& a) {
  using umeb::conj;
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = conj(a(r, c));
  }
  return out;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const T& scale = a(ar, ac);
      if (scale == T{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
        }
      }
    }
  }
  return out;
}

template <class T>
Matrix<T> scaled(Matrix<T> m, const T& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= factor;
  }
  return m;
}

template <class T>
Matrix<Complex> to_complex(const Matrix<T>& m) {
  std::vector<Complex> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& v : m.entries()) out.push_back(to_complex(v));
  return Matrix<Complex>(m.rows(), m.cols(), std::move(out));
}

/// Largest |m(r,c) - target(r,c)| in double precision, with its position.
struct EntryDeviation {
  double value = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

template <class T>
EntryDeviation max_deviation(const Matrix<T>& m, const Matrix<T>& target) {
  if (m.rows() != target.rows() || m.cols() != target.cols()) {
    throw ShapeError("max_deviation: shape mismatch");
  }
  EntryDeviation worst;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double d = deviation(m(r, c), target(r, c));
      if (d > worst.value) worst = {d, r, c};
    }
  }
  return worst;
}

struct UnitarityResult {
  bool unitary = false;
  double residual = 0.0;  // max |(A^dagger A - I)_{rc}|
};

/// A^dagger A == I exactly (exact backend) or entry-wise within tolerance.
template <class T>
UnitarityResult is_unitary(const Matrix<T>& a, Tolerance tol = {}) {
  if (!a.square()) throw ShapeError("is_unitary: matrix is not square");
  const Matrix<T> gram = adjoint(a) * a;
  const Matrix<T> id = Matrix<T>::identity(a.rows());
  bool ok = true;
  for (std::size_t r = 0; r < a.rows() && ok; ++r) {
    for (std::size_t c = 0; c < a.cols() && ok; ++c) ok = approx_equal(gram(r, c), id(r, c), tol);
  }
  return {ok, max_deviation(gram, id).value};
}

/// Pauli matrices sigma_0..sigma_3 (sigma_2 = [[0,-i],[i,0]]).
template <class T>
Matrix<T> pauli(int index) {
  using Tr = ScalarTraits<T>;
  const T one = Tr::from_rational(Rational(1));
  const T zero{};
  switch (index) {
    case 0: return Matrix<T>(2, 2, {one, zero, zero, one});
    case 1: return Matrix<T>(2, 2, {zero, one, one, zero});
    case 2: return Matrix<T>(2, 2, {zero, -Tr::i(), Tr::i(), zero});
    case 3: return Matrix<T>(2, 2, {one, zero, zero, -one});
    default: throw InvalidArgument("pauli index must be 0..3");
  }
}

}  // namespace umeb
