#include "umeb/schmidt.hpp"

#include <algorithm>
#include <cmath>

namespace umeb {
namespace {

struct Eigen2 {
  double small = 0.0;
  double large = 0.0;
};

// Eigenvalues of the 2x2 Hermitian M M^dagger.
Eigen2 gram_eigenvalues(const Matrix<Complex>& m) {
  const auto g = reduced_gram(m);
  const double trace = g.trace.real();
  const double det = std::max(0.0, g.det.real());
  const double disc = std::sqrt(std::max(0.0, trace * trace - 4.0 * det));
  const double large = 0.5 * (trace + disc);
  const double small = large > 0.0 ? det / large : 0.0;
  return {small, large};
}

}  // namespace

double min_singular_value(const Matrix<Complex>& m) {
  if (m.rows() != kDimA || m.cols() != kDimB) throw ShapeError("expected a 2x3 matrix");
  return std::sqrt(gram_eigenvalues(m).small);
}

std::array<double, 2> singular_values(const Matrix<Complex>& m) {
  if (m.rows() != kDimA || m.cols() != kDimB) throw ShapeError("expected a 2x3 matrix");
  const auto e = gram_eigenvalues(m);
  return {std::sqrt(e.large), std::sqrt(e.small)};
}

}  // namespace umeb
