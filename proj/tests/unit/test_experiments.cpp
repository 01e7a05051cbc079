#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "opencat/eigensolver.hpp"
#include "opencat/error.hpp"
#include "opencat/experiments.hpp"
#include "opencat/hn_space.hpp"

using namespace opencat;

namespace {

std::vector<double> top_moduli(const ComplexMatrix& op, int k) {
  const auto ev = sort_by_modulus(eigenvalues(op).values);
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(std::abs(ev[static_cast<std::size_t>(i)]));
  return out;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Targets, ArnoldGoldenPowers) {
  const auto t = limit_targets(analyze(CatMap::arnold()).lambda, 4);
  const std::vector<double> want{0.6180340, 0.2360680, 0.0901699, 0.0344419};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(t[k], want[k], 5e-8);
}

TEST(OpenMap, ZeroCutoffGivesZeroSpectrum) {
  const auto op = matmul(op_weyl(TorusSymbol(2), 16), quantize_map(CatMap::arnold(), 16));
  for (const auto& z : eigenvalues(op).values) EXPECT_EQ(std::abs(z), 0.0);
}

TEST(OpenMap, UnitCutoffIsUnitary) {
  const auto op = matmul(op_weyl(TorusSymbol::constant(1.0), 32), quantize_map(CatMap::arnold(), 32));
  for (const auto& z : eigenvalues(op).values) EXPECT_NEAR(std::abs(z), 1.0, 1e-9);
}

TEST(OpenMap, OddDimensionRejected) {
  EXPECT_THROW(build_open_operator(OpenMapSetup{}, 33), Error);
}

TEST(OpenMap, WarnsOnSupportGuard) {
  std::vector<std::string> warnings;
  build_open_operator(OpenMapSetup{}, 16, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("support"), std::string::npos);
}

TEST(OpenMap, WarnsOnCoarseWeylTruncation) {
  OpenMapSetup s;
  s.quantization = Quantization::Weyl;
  s.quantizer = {40, 256, 1e-6};
  std::vector<std::string> warnings;
  build_open_operator(s, 16, &warnings);
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_NE(warnings[1].find("tail"), std::string::npos);
}

TEST(OpenMap, LeadingEigenvalueNearGoldenRatioAtN256) {
  const auto op = build_open_operator(OpenMapSetup{}, 256);
  const auto ev = sort_by_modulus(eigenvalues(op).values);
  EXPECT_NEAR(ev[0].real(), 0.6180340, 1e-2);
  EXPECT_NEAR(ev[0].imag(), 0.0, 1e-12);
}

TEST(OpenMap, ModuliIndependentOfWordPhaseAndOrder) {
  const int n = 128;
  OpenMapSetup s;
  const auto ref = top_moduli(build_open_operator(s, n), 4);

  s.word = GeneratorWord{{Letter::u(1), Letter::l(1)}};
  EXPECT_LT(max_gap(top_moduli(build_open_operator(s, n), 4), ref), 1e-9);

  s.word.reset();
  s.phase = PhaseMode::None;
  EXPECT_LT(max_gap(top_moduli(build_open_operator(s, n), 4), ref), 1e-9);

  const auto cut = make_cutoff(s);
  const auto m = quantize_map(s.map, n);
  EXPECT_LT(max_gap(top_moduli(matmul(m, cutoff_operator(s, cut, n)), 4), ref), 1e-9);
}

TEST(Trapped, RowsAndValidation) {
  OpenMapSetup s;
  const auto empty = trapped_sweep(s, {32, 64}, 0);
  EXPECT_TRUE(empty.rows.empty());
  EXPECT_THROW(trapped_sweep(s, {32}, 9), Error);
  EXPECT_THROW(trapped_sweep(s, {31}, 2), Error);

  const auto sw = trapped_sweep(s, {32, 64}, 3);
  ASSERT_EQ(sw.rows.size(), 6u);
  EXPECT_EQ(sw.rows[0].n, 32);
  EXPECT_EQ(sw.rows[3].n, 64);
  EXPECT_EQ(sw.rows[4].k, 1);
  EXPECT_TRUE(sw.converged);
  for (const auto& r : sw.rows) {
    EXPECT_DOUBLE_EQ(r.h, planck(r.n).h);
    EXPECT_DOUBLE_EQ(r.abs_err, std::abs(r.modulus - r.target));
  }
  EXPECT_EQ(sw.rows[0].im, 0.0);
  EXPECT_GT(sw.rows[0].re, 0.0);
}

TEST(Trapped, SweepMatchesDirectBuild) {
  OpenMapSetup s;
  const auto sw = trapped_sweep(s, {64}, 4);
  const auto direct = sort_by_modulus(eigenvalues(build_open_operator(s, 64)).values);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(sw.rows[k].modulus, std::abs(direct[k]), 1e-10);
}

TEST(Nontrap, SyntheticSquareLaw) {
  const std::vector<int> ns{64, 128, 256, 512};
  std::vector<double> r;
  for (int n : ns) r.push_back(std::pow(planck(n).h, 2));
  const auto rows = nontrap_rows(ns, r);
  EXPECT_TRUE(std::isnan(rows[0].slope_vs_prev));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(rows[i].slope_vs_prev, 2.0, 1e-12);
}

TEST(Nontrap, SyntheticSuperpolynomialSlopesIncrease) {
  const std::vector<int> ns{8, 16, 32, 64};
  std::vector<double> r;
  for (int n : ns) r.push_back(std::exp(-1.0 / planck(n).h / 100.0));
  const auto rows = nontrap_rows(ns, r);
  for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_GT(rows[i].slope_vs_prev, rows[i - 1].slope_vs_prev);
}

TEST(Nontrap, ZeroRadiusWarnsAndStopsSlopes) {
  std::vector<std::string> w;
  const auto rows = nontrap_rows({8, 16, 32}, {1e-3, 0.0, 0.0}, &w);
  EXPECT_TRUE(std::isnan(rows[1].slope_vs_prev));
  EXPECT_TRUE(std::isnan(rows[2].slope_vs_prev));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("ZeroRadius"), std::string::npos);
  EXPECT_THROW(nontrap_rows({8, 16}, {1.0}), Error);
}

TEST(Nontrap, SweepValidation) {
  OpenMapSetup s;
  s.cutoff = {BumpKind::AnnulusProduct, 0.15, 0.24};
  EXPECT_THROW(nontrapping_sweep(s, {64, 32}), Error);
  const auto one = nontrapping_sweep(s, {32});
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_TRUE(std::isnan(one.rows[0].slope_vs_prev));
  EXPECT_GT(one.rows[0].top_modulus, 0.0);
}

TEST(PhaseCoherence, VacuousAndReal) {
  SpectrumReport r = make_report(8, {0.5, 0.25}, 2.0, 1, true);
  EXPECT_EQ(phase_coherence_check(r), 0.0);
  r = make_report(8, {0.5, {0.25, 0.0}, {0.1, -0.02}}, 2.0, 3, true);
  EXPECT_DOUBLE_EQ(phase_coherence_check(r), 0.02);
  r = make_report(8, {3.0, 2.0, 1.0}, 2.0, 3, true);  // diagonal synthetic operator
  EXPECT_EQ(phase_coherence_check(r), 0.0);
}
