#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "opencat/catmap.hpp"
#include "opencat/error.hpp"

using namespace opencat;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no opencat::Error thrown";
  return ErrorCode::ConfigError;
}

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(CatMap, RejectsNonUnimodular) {
  EXPECT_EQ(code_of([] { make_cat_map(2, 1, 1, 2); }), ErrorCode::NotUnimodular);
  EXPECT_NO_THROW(make_cat_map(2, 1, 1, 1));
}

TEST(CatMap, ArnoldAnalysis) {
  const auto an = analyze(CatMap::arnold());
  EXPECT_NEAR(an.lambda, kGolden * kGolden, 1e-14);
  EXPECT_FALSE(an.negative_trace);
  // Symmetric map: orthogonal eigenbasis, |Q| = 1.
  EXPECT_NEAR(an.q_norm, 1.0, 1e-12);
  EXPECT_NEAR(an.q[0][0] * an.q[1][1] - an.q[0][1] * an.q[1][0], 1.0, 1e-12);
}

TEST(CatMap, ConjugationDiagonalizes) {
  for (const auto& m : {CatMap{2, 1, 1, 1}, CatMap{3, 2, 1, 1}, CatMap{-2, -1, -1, -1}, CatMap{5, 7, 2, 3}}) {
    const auto an = analyze(m);
    const auto& q = an.q;
    const double det = q[0][0] * q[1][1] - q[0][1] * q[1][0];
    const double qi[2][2] = {{q[1][1] / det, -q[0][1] / det}, {-q[1][0] / det, q[0][0] / det}};
    const double mm[2][2] = {{double(m.a), double(m.b)}, {double(m.c), double(m.d)}};
    double d[2][2] = {};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) d[i][j] += q[i][k] * mm[k][l] * qi[l][j];
    const double s = an.negative_trace ? -1.0 : 1.0;
    EXPECT_NEAR(d[0][1], 0.0, 1e-10);
    EXPECT_NEAR(d[1][0], 0.0, 1e-10);
    EXPECT_NEAR(std::abs(d[0][0]) * std::abs(d[1][1]), 1.0, 1e-10);
    EXPECT_NEAR(std::max(std::abs(d[0][0]), std::abs(d[1][1])), an.lambda, 1e-10);
    EXPECT_GT(s * (d[0][0] + d[1][1]), 2.0);
  }
}

TEST(CatMap, NegativeTrace) {
  const auto an = analyze(CatMap{-2, -1, -1, -1});
  EXPECT_TRUE(an.negative_trace);
  EXPECT_NEAR(an.lambda, kGolden * kGolden, 1e-14);
}

TEST(CatMap, NonHyperbolicRejected) {
  EXPECT_EQ(code_of([] { analyze(CatMap{1, 0, 0, 1}); }), ErrorCode::NotHyperbolic);
  EXPECT_EQ(code_of([] { analyze(CatMap{1, 1, 0, 1}); }), ErrorCode::NotHyperbolic);
  EXPECT_EQ(code_of([] { analyze(CatMap{0, -1, 1, 0}); }), ErrorCode::NotHyperbolic);
}

TEST(CatMap, GuardRadiusArnold) {
  // 1 / (4 lambda) with lambda = phi^2.
  EXPECT_NEAR(guard_radius(analyze(CatMap::arnold())), 0.0954915028125263, 1e-13);
}

TEST(CatMap, IterateAndOrbit) {
  const auto m = CatMap::arnold();
  EXPECT_EQ(iterate_mod_q(m, make_point(1, 1, 3)), make_point(0, 2, 3));
  const auto orb = orbit(m, make_point(1, 1, 3));
  ASSERT_EQ(orb.size(), 4u);
  EXPECT_EQ(iterate_mod_q(m, orb.back()), orb.front());
  EXPECT_EQ(make_point(-1, 4, 3), make_point(2, 1, 3));
}

TEST(CatMap, TorusNorm) {
  EXPECT_DOUBLE_EQ(torus_norm(make_point(1, 0, 2)), 0.5);
  EXPECT_DOUBLE_EQ(torus_norm(make_point(2, 2, 3)), std::sqrt(2.0) / 3.0);
  EXPECT_DOUBLE_EQ(torus_norm(make_point(0, 0, 7)), 0.0);
}

TEST(Escape, QMaxOneTrivial) {
  const auto r = escape_check(CatMap::arnold(), 0.3, 1);
  EXPECT_TRUE(r.all_escape);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].num_orbits, 0);
  EXPECT_FALSE(r.rows[0].min_orbit_max_norm.has_value());
}

TEST(Escape, GuardRadiusAllEscape) {
  const auto m = CatMap::arnold();
  const auto r = escape_check(m, guard_radius(analyze(m)), 60);
  EXPECT_TRUE(r.all_escape);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.rows.size(), 60u);
}

TEST(Escape, HalfRadiusCounterexample) {
  const auto r = escape_check(CatMap::arnold(), 0.5, 3);
  EXPECT_FALSE(r.all_escape);
  ASSERT_TRUE(r.witness.has_value());
  const auto& w = *r.witness;
  EXPECT_NE(std::find(w.begin(), w.end(), make_point(1, 1, 3)), w.end());
  EXPECT_TRUE(r.rows[1].all_escape);   // q = 2 orbit reaches norm 1/sqrt(2)
  EXPECT_FALSE(r.rows[2].all_escape);  // q = 3
  EXPECT_EQ(r.rows[1].num_orbits, 1);
  EXPECT_EQ(r.rows[2].num_orbits, 2);
}

TEST(Escape, InvalidRadius) {
  EXPECT_EQ(code_of([] { escape_check(CatMap::arnold(), 0.0, 5); }), ErrorCode::InvalidRadius);
  EXPECT_EQ(code_of([] { escape_check(CatMap::arnold(), 0.51, 5); }), ErrorCode::InvalidRadius);
}

// Orbits of exact denominator q partition the q^2 prod(1 - 1/p^2) such points,
// so the orbit count is at least that number over the longest period.
TEST(Escape, OrbitsPartitionPrimitivePoints) {
  const auto m = CatMap{3, 2, 1, 1};
  for (std::int64_t q = 2; q <= 15; ++q) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::int64_t orbits = 0, points = 0;
    for (std::int64_t x = 0; x < q; ++x)
      for (std::int64_t y = 0; y < q; ++y) {
        if (std::gcd(std::gcd(x, y), q) != 1) continue;
        ++points;
        if (seen.contains({x, y})) continue;
        ++orbits;
        for (const auto& p : orbit(m, make_point(x, y, q))) {
          EXPECT_EQ(std::gcd(std::gcd(p.x, p.y), q), 1);
          seen.insert({p.x, p.y});
        }
      }
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), points);
    const auto r = escape_check(m, 0.5, q);
    EXPECT_EQ(r.rows.back().num_orbits, orbits) << "q = " << q;
  }
}

TEST(Escape, CumulativeFlagMonotone) {
  const auto r = escape_check(CatMap::arnold(), 0.3, 25);
  bool prev = true;
  for (const auto& row : r.rows) {
    EXPECT_TRUE(prev || !row.all_escape);
    prev = row.all_escape;
  }
  EXPECT_EQ(r.all_escape, r.rows.back().all_escape);
}
