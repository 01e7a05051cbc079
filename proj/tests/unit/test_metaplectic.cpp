#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "opencat/eigensolver.hpp"
#include "opencat/error.hpp"
#include "opencat/metaplectic.hpp"

using namespace opencat;

namespace {

// max |a - e^{i theta} b| with theta fitted at the largest entry of b.
double distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < b.data().size(); ++i)
    if (std::abs(b.data()[i]) > std::abs(b.data()[best])) best = i;
  const cplx ratio = a.data()[best] / b.data()[best];
  return max_abs_diff(a, (ratio / std::abs(ratio)) * b);
}

TorusSymbol cos_cos() {
  return TorusSymbol::mode(1, 0, 0.5) + TorusSymbol::mode(-1, 0, 0.5) + TorusSymbol::mode(0, 1, 0.5) +
         TorusSymbol::mode(0, -1, 0.5);
}

CatMap random_sl2z(std::mt19937_64& rng, int letters) {
  std::uniform_int_distribution<int> pick(0, 3), par(-3, 3);
  CatMap m{1, 0, 0, 1};
  for (int i = 0; i < letters; ++i) {
    switch (pick(rng)) {
      case 0: m = m * Letter::s().matrix(); break;
      case 1: m = m * Letter::u(par(rng)).matrix(); break;
      case 2: m = m * Letter::l(par(rng)).matrix(); break;
      default: m = m * Letter::par().matrix(); break;
    }
  }
  return m;
}

const std::vector<Letter> kLetters{Letter::s(),  Letter::s_inv(), Letter::u(1),  Letter::u(-2),
                                   Letter::l(1), Letter::l(3),    Letter::par(), Letter::u(0)};

}  // namespace

TEST(Letters, Matrices) {
  EXPECT_EQ(Letter::s().matrix(), (CatMap{0, -1, 1, 0}));
  EXPECT_EQ(Letter::s_inv().matrix(), (CatMap{0, 1, -1, 0}));
  EXPECT_EQ(Letter::u(3).matrix(), (CatMap{1, 3, 0, 1}));
  EXPECT_EQ(Letter::l(-2).matrix(), (CatMap{1, 0, -2, 1}));
  EXPECT_EQ(Letter::par().matrix(), (CatMap{-1, 0, 0, -1}));
}

TEST(Factor, ArnoldWords) {
  EXPECT_EQ(factor_sl2z(CatMap::arnold()).product(), CatMap::arnold());
  const GeneratorWord alt{{Letter::u(1), Letter::l(1)}};
  EXPECT_EQ(alt.product(), CatMap::arnold());
  const GeneratorWord long_word{{Letter::u(1), Letter::s(), Letter::s(), Letter::s(), Letter::u(-1), Letter::s()}};
  EXPECT_EQ(long_word.product(), CatMap::arnold());
}

TEST(Factor, RoundTripsRandomMatrices) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_sl2z(rng, 1 + t % 9);
    EXPECT_EQ(factor_sl2z(m).product(), m);
  }
  for (const auto& m : {CatMap{1, 0, 0, 1}, CatMap{-1, 0, 0, -1}, CatMap{0, -1, 1, 0}, CatMap{5, 7, 2, 3}})
    EXPECT_EQ(factor_sl2z(m).product(), m);
  EXPECT_THROW(factor_sl2z(CatMap{2, 1, 1, 2}), Error);
}

TEST(Generators, OddDimensionRejected) {
  try {
    quantize_generator(Letter::s(), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddDimension);
  }
}

TEST(Generators, Unitary) {
  for (int n : {2, 8, 30})
    for (const auto& letter : kLetters) {
      const auto g = quantize_generator(letter, n);
      EXPECT_LT(distance_to_identity(matmul(g.adjoint(), g)), 1e-13);
    }
}

TEST(Generators, SquaredSIsParity) {
  const int n = 16;
  const auto s = quantize_generator(Letter::s(), n);
  const auto p = quantize_generator(Letter::par(), n);
  const cplx omega2 = std::polar(1.0, -std::numbers::pi / 2.0);
  EXPECT_LT(max_abs_diff(matmul(s, s), omega2 * p), 1e-13);
  EXPECT_LT(distance_up_to_phase(matmul(s, quantize_generator(Letter::s_inv(), n)), ComplexMatrix::identity(n)),
            1e-13);
}

TEST(Generators, ExactEgorov) {
  for (int n : {8, 16, 32})
    for (const auto& letter : kLetters)
      for (const auto& a : {TorusSymbol::mode(1, 0), TorusSymbol::mode(0, 1), TorusSymbol::mode(2, -1), cos_cos()})
        EXPECT_LT(egorov_residual(GeneratorWord{{letter}}, a, n), 1e-12);
}

TEST(Generators, FlippedDftBreaksEgorov) {
  MetaplecticOptions flipped;
  flipped.dft_sign = DftSign::Flipped;
  EXPECT_GT(egorov_residual(GeneratorWord{{Letter::s()}}, TorusSymbol::mode(1, 0), 32, flipped), 0.5);
}

TEST(Maps, ArnoldEgorovAndUnitarity) {
  for (int n : {32, 64}) {
    EXPECT_LT(egorov_residual(CatMap::arnold(), cos_cos(), n), 1e-8);
    const auto m = quantize_map(CatMap::arnold(), n);
    EXPECT_LT(distance_to_identity(matmul(m.adjoint(), m)), 1e-10);
  }
}

TEST(Maps, RandomMapsRandomSymbols) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_sl2z(rng, 4);
    TorusSymbol a(2);
    for (int k = -2; k <= 2; ++k)
      for (int l = -2; l <= 2; ++l) {
        const double re = u(rng);
        a.set(k, l, {re, u(rng)});
      }
    EXPECT_LT(egorov_residual(m, a, 24), 1e-10);
  }
}

TEST(Maps, WordsAgreeUpToPhase) {
  const int n = 32;
  const auto a = quantize_word(factor_sl2z(CatMap::arnold()), n);
  const auto b = quantize_word(GeneratorWord{{Letter::u(1), Letter::l(1)}}, n);
  const auto c = quantize_word(
      GeneratorWord{{Letter::u(1), Letter::s(), Letter::s(), Letter::s(), Letter::u(-1), Letter::s()}}, n);
  EXPECT_LT(distance_up_to_phase(a, b), 1e-12);
  EXPECT_LT(distance_up_to_phase(a, c), 1e-12);
}

TEST(Maps, ProjectiveHomomorphism) {
  const int n = 20;
  const CatMap x{2, 1, 1, 1}, y{1, 2, 0, 1};
  const auto xy = quantize_map(x * y, n);
  EXPECT_LT(distance_up_to_phase(xy, matmul(quantize_map(x, n), quantize_map(y, n))), 1e-12);
}

TEST(Phase, LeadingPhaseRotatesOntoPositiveAxis) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix op(10, 10);
  for (auto& z : op.data()) {
    const double re = u(rng);
    z = {re, u(rng)};
  }
  const cplx phase = leading_phase(op);
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-14);
  op *= phase;
  const auto ev = sort_by_modulus(eigenvalues(op).values);
  EXPECT_NEAR(ev.front().imag(), 0.0, 1e-12);
  EXPECT_GT(ev.front().real(), 0.0);
  try {
    leading_phase(ComplexMatrix(4, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegeneratePhase);
  }
}

TEST(Phase, NormalizationNeedsCutoff) {
  EXPECT_THROW(quantize_map(CatMap::arnold(), 8, PhaseMode::LeadingRealPositive), Error);
  const auto chi = ComplexMatrix::identity(8);
  EXPECT_NO_THROW(quantize_map(CatMap::arnold(), 8, PhaseMode::LeadingRealPositive, &chi));
}
