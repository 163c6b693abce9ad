#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "umeb/construct.hpp"

namespace umeb::cli {

/// One worked example, stored the way it is printed: angle lists as pi-fractions and
/// every matrix or vector entry as a closed-form string with an overall prefactor.
struct PrintedExample {
  int number = 0;
  std::string first_basis;  // "chen" or "standard"
  std::array<std::string, 6> theta;
  std::optional<std::array<std::string, 2>> theta_prime;  // not printed for example 1
  std::string w_prefactor;
  std::array<std::string, 9> w;  // row-major
  std::string s_prefactor;
  std::array<std::string, 4> s;  // row-major
  std::string qutrit_prefactor;
  std::array<std::array<std::string, 3>, 3> xyz;  // |x'>, |y'>, |z'>
  std::string qubit_prefactor;
  std::array<std::array<std::string, 2>, 2> ab;  // |a>, |b>
  std::string w_label;
  std::string s_label;
  std::string states_label;
};

const PrintedExample& printed_example(int number);

/// F for the standard completion and for the (c, d) completion, as printed.
struct PrintedF {
  std::string label;
  std::string first_basis;
  std::array<std::string, 36> entries;
};
const std::vector<PrintedF>& printed_f_matrices();

Matrix<Cyclo> printed_W(const PrintedExample& ex);
Matrix<Cyclo> printed_S(const PrintedExample& ex);
Matrix<Cyclo> printed_F(const PrintedF& f);
ThetaParams printed_params(const PrintedExample& ex, std::array<Angle, 2> theta_prime, Sign s);
std::array<Angle, 6> printed_theta(const PrintedExample& ex);

/// The second basis assembled from the printed |x'>, |y'>, |z'>, |a>, |b>:
/// (sigma_j (x) I3)(|0 x'> + |1 y'>)/sqrt2 for j = 0..3, then |a>|z'>, |b>|z'>.
Basis<Cyclo> printed_second_basis(const PrintedExample& ex);

FirstBasisSpec<Cyclo> first_spec_named(const std::string& name);

}  // namespace umeb::cli
