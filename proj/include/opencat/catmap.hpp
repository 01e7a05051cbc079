#pragma once

// Exact integer dynamics of generalized cat maps on the torus.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace opencat {

/// Integer 2x2 matrix with determinant one, entries row-major.
struct CatMap {
  std::int64_t a = 2, b = 1, c = 1, d = 1;

  static CatMap arnold() { return {2, 1, 1, 1}; }

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  bool hyperbolic() const;
  CatMap inverse() const { return {d, -b, -c, a}; }

  friend bool operator==(const CatMap&, const CatMap&) = default;
};

CatMap operator*(const CatMap& x, const CatMap& y);

/// Throws NotUnimodular unless det = 1.
CatMap make_cat_map(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

using Mat2 = std::array<std::array<double, 2>, 2>;

struct CatMapAnalysis {
  double lambda = 0.0;         // modulus of the expanding eigenvalue, > 1
  bool negative_trace = false; // eigenvalues are -lambda, -1/lambda
  Mat2 q{};                    // Q M Q^{-1} = diag(+-lambda, +-1/lambda), det Q = 1
  double q_norm = 1.0;         // operator norm of Q
};

/// Eigen-data of a hyperbolic map. Throws NotHyperbolic when |tr| <= 2.
CatMapAnalysis analyze(const CatMap& m);

/// Radius 1/(4 lambda |Q|^2) inside which the origin is the only periodic orbit.
double guard_radius(const CatMapAnalysis& analysis);

/// Point (x/q, y/q) of the torus, coordinates reduced into [0, q).
struct RationalPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t q = 1;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

RationalPoint make_point(std::int64_t x, std::int64_t y, std::int64_t q);

RationalPoint iterate_mod_q(const CatMap& m, const RationalPoint& p);

/// Forward orbit starting at p, ending just before the first return.
std::vector<RationalPoint> orbit(const CatMap& m, const RationalPoint& p);

/// Euclidean norm of the point's representative in [-1/2, 1/2)^2.
double torus_norm(const RationalPoint& p);

struct EscapeRow {
  std::int64_t q = 0;
  std::int64_t num_orbits = 0;                 // nonzero orbits with exact denominator q
  std::optional<double> min_orbit_max_norm;    // empty when num_orbits == 0
  bool all_escape = true;                      // cumulative over denominators <= q
};

struct EscapeReport {
  bool all_escape = true;
  std::optional<std::vector<RationalPoint>> witness;
  std::vector<EscapeRow> rows;
};

/// Checks that every nonzero periodic orbit with denominator <= q_max leaves
/// the closed ball of the given radius. The witness is the first orbit (in
/// order of q, then lexicographic start point) that stays inside.
EscapeReport escape_check(const CatMap& m, double radius, std::int64_t q_max);

}  // namespace opencat
