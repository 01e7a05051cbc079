// The OpenMP kernels must reproduce their serial reference bit for bit.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "opencat/matrix.hpp"
#include "opencat/quantizer.hpp"

using namespace opencat;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix a(r, c);
  for (auto& z : a.data()) {
    const double re = u(rng);
    z = {re, u(rng)};
  }
  return a;
}

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}

}  // namespace

TEST(Kernels, MatmulSerialEqualsParallel) {
  std::mt19937_64 rng(1);
  for (auto [r, k, c] : {std::tuple{1, 1, 1}, {7, 5, 3}, {64, 64, 64}, {130, 70, 90}}) {
    const auto a = random_matrix(rng, r, k), b = random_matrix(rng, k, c);
    EXPECT_TRUE(bitwise_equal(matmul(a, b, Exec::Serial), matmul(a, b, Exec::Parallel)));
  }
}

TEST(Kernels, MatmulMatchesNaive) {
  std::mt19937_64 rng(2);
  const auto a = random_matrix(rng, 9, 6), b = random_matrix(rng, 6, 4);
  const auto p = matmul(a, b);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < 6; ++t) s += a(i, t) * b(t, j);
      EXPECT_NEAR(std::abs(p(i, j) - s), 0.0, 1e-14);
    }
}

TEST(Kernels, SymbolFromFunctionSerialEqualsParallel) {
  auto f = [](double x, double xi) { return cplx(std::exp(std::cos(6.283185307179586 * x)) * std::sin(xi), x * xi); };
  const auto a = symbol_from_function(f, 12, 64, Exec::Serial);
  const auto b = symbol_from_function(f, 12, 64, Exec::Parallel);
  for (int k = -12; k <= 12; ++k)
    for (int l = -12; l <= 12; ++l) EXPECT_EQ(a.coeff(k, l), b.coeff(k, l));
}

TEST(Kernels, OpWeylSerialEqualsParallel) {
  const auto s = make_trapped_symbol(BumpSpec{}, {32, 128, 1e-6}).symbol;
  for (int n : {16, 50, 96}) EXPECT_TRUE(bitwise_equal(op_weyl(s, n, Exec::Serial), op_weyl(s, n, Exec::Parallel)));
}

TEST(Kernels, OpLeftSerialEqualsParallel) {
  const BumpSpec spec{};
  auto f = [&](double x) { return bump_profile(spec, x); };
  for (int n : {16, 64, 130})
    EXPECT_TRUE(bitwise_equal(op_left_separable(f, f, n, Exec::Serial), op_left_separable(f, f, n, Exec::Parallel)));
}
