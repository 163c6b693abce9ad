#include "fixtures.hpp"

#include "formula.hpp"
#include "umeb/errors.hpp"

namespace umeb::cli {
namespace {

// clang-format off
const std::array<PrintedExample, 3> kExamples{{
    {1, "chen",
     {"0", "1/3", "0", "1", "0", "1/3"},
     std::nullopt,
     "1/sqrt3",
     {"1", "(-sqrt3+i)/2", "-1",
      "(1+sqrt3*i)/2", "i", "1",
      "1", "-i", "(1+sqrt3*i)/2"},
     "1/sqrt2",
     {"1", "i",
      "(sqrt3+i)/2", "(1-sqrt3*i)/2"},
     "1/sqrt3",
     {{{"1", "(1+sqrt3*i)/2", "1"},
       {"(-sqrt3+i)/2", "i", "-i"},
       {"-1", "1", "(1+sqrt3*i)/2"}}},
     "1/sqrt2",
     {{{"(1+sqrt3*i)/2", "(sqrt3-i)/2"},
       {"(sqrt3-i)/2", "(1+sqrt3*i)/2"}}},
     "W of example 1", "S of example 1", "second basis of example 1"},
    {2, "standard",
     {"1", "2/3", "0", "0", "1", "1/3"},
     std::array<std::string, 2>{"0", "1/2"},
     "1/sqrt3",
     {"-1", "(-sqrt3-i)/2", "1",
      "(-1+sqrt3*i)/2", "-i", "-1",
      "1", "-i", "(1+sqrt3*i)/2"},
     "1/sqrt2",
     {"1", "i",
      "i", "1"},
     "1/sqrt3",
     {{{"-1", "(-1+sqrt3*i)/2", "1"},
       {"(-sqrt3-i)/2", "-i", "-i"},
       {"1", "-1", "(1+sqrt3*i)/2"}}},
     "1/sqrt2",
     {{{"1", "i"},
       {"i", "1"}}},
     "W of example 2", "S of example 2", "second basis of example 2"},
    {3, "standard",
     {"4/3", "1", "0", "1", "0", "1"},
     std::array<std::string, 2>{"1/3", "1/6"},
     "1/sqrt3",
     {"(-1-sqrt3*i)/2", "-i", "-1",
      "-1", "(sqrt3-i)/2", "1",
      "1", "-i", "-1"},
     "1/sqrt2",
     {"(1+sqrt3*i)/2", "(sqrt3+i)/2",
      "(-sqrt3+i)/2", "(1-sqrt3*i)/2"},
     "1/sqrt3",
     {{{"(-1-sqrt3*i)/2", "-1", "1"},
       {"-i", "(sqrt3-i)/2", "-i"},
       {"-1", "1", "-1"}}},
     "1/sqrt2",
     {{{"(1+sqrt3*i)/2", "(-sqrt3+i)/2"},
       {"(sqrt3+i)/2", "(1-sqrt3*i)/2"}}},
     "W of example 3", "S of example 3", "second basis of example 3"},
}};

const std::vector<PrintedF> kFMatrices{
    {"F (standard completion)", "standard",
     {"1/sqrt2", "0", "0", "1/sqrt2", "0", "0",
      "0", "1/sqrt2", "-1/sqrt2", "0", "0", "0",
      "0", "0", "0", "0", "1", "0",
      "0", "1/sqrt2", "1/sqrt2", "0", "0", "0",
      "1/sqrt2", "0", "0", "-1/sqrt2", "0", "0",
      "0", "0", "0", "0", "0", "1"}},
    {"F (c, d completion)", "chen",
     {"1/sqrt2", "0", "0", "1/sqrt2", "0", "0",
      "0", "1/sqrt2", "-1/sqrt2", "0", "0", "0",
      "0", "0", "0", "0", "1/2", "sqrt3/2",
      "0", "1/sqrt2", "1/sqrt2", "0", "0", "0",
      "1/sqrt2", "0", "0", "-1/sqrt2", "0", "0",
      "0", "0", "0", "0", "sqrt3/2", "-1/2"}},
};
// clang-format on

template <std::size_t N>
std::array<Cyclo, N> eval_vector(const std::array<std::string, N>& entries, const Cyclo& scale) {
  std::array<Cyclo, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = eval_formula(entries[k]) * scale;
  return out;
}

template <std::size_t N>
Matrix<Cyclo> eval_matrix(std::size_t rows, std::size_t cols,
                          const std::array<std::string, N>& entries, const Cyclo& scale) {
  const auto values = eval_vector(entries, scale);
  return Matrix<Cyclo>(rows, cols, std::vector<Cyclo>(values.begin(), values.end()));
}

}  // namespace

const PrintedExample& printed_example(int number) {
  if (number < 1 || number > 3) throw InvalidArgument("example must be 1, 2 or 3");
  return kExamples[static_cast<std::size_t>(number - 1)];
}

const std::vector<PrintedF>& printed_f_matrices() { return kFMatrices; }

Matrix<Cyclo> printed_W(const PrintedExample& ex) {
  return eval_matrix(3, 3, ex.w, eval_formula(ex.w_prefactor));
}

Matrix<Cyclo> printed_S(const PrintedExample& ex) {
  return eval_matrix(2, 2, ex.s, eval_formula(ex.s_prefactor));
}

Matrix<Cyclo> printed_F(const PrintedF& f) { return eval_matrix(6, 6, f.entries, Cyclo(1)); }

std::array<Angle, 6> printed_theta(const PrintedExample& ex) {
  std::array<Angle, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = parse_angle(ex.theta[k]);
  return out;
}

ThetaParams printed_params(const PrintedExample& ex, std::array<Angle, 2> theta_prime, Sign s) {
  return {printed_theta(ex), theta_prime, s};
}

Basis<Cyclo> printed_second_basis(const PrintedExample& ex) {
  const Cyclo qutrit_scale = eval_formula(ex.qutrit_prefactor);
  const Cyclo qubit_scale = eval_formula(ex.qubit_prefactor);
  const auto x = eval_vector(ex.xyz[0], qutrit_scale);
  const auto y = eval_vector(ex.xyz[1], qutrit_scale);
  const auto z = eval_vector(ex.xyz[2], qutrit_scale);
  const auto a = eval_vector(ex.ab[0], qubit_scale);
  const auto b = eval_vector(ex.ab[1], qubit_scale);

  // (|0 x'> + |1 y'>)/sqrt2
  StateVector<Cyclo> seed{};
  const Cyclo inv_sqrt2 = eval_formula("1/sqrt2");
  for (std::size_t j = 0; j < 3; ++j) {
    seed[j] = x[j] * inv_sqrt2;
    seed[3 + j] = y[j] * inv_sqrt2;
  }
  Basis<Cyclo> out{};
  const Matrix<Cyclo> id3 = Matrix<Cyclo>::identity(3);
  for (int j = 0; j < 4; ++j) out[j] = umeb::apply(kron(pauli<Cyclo>(j), id3), seed);
  out[4] = product_state<Cyclo>(a, z);
  out[5] = product_state<Cyclo>(b, z);
  return out;
}

FirstBasisSpec<Cyclo> first_spec_named(const std::string& name) {
  if (name == "standard") return FirstBasisSpec<Cyclo>::standard();
  if (name == "chen") return FirstBasisSpec<Cyclo>::chen();
  throw InvalidArgument("first basis must be 'standard' or 'chen', got '" + name + "'");
}

}  // namespace umeb::cli
