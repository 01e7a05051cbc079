#include "opencat/catmap.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "opencat/error.hpp"
#include "opencat/hn_space.hpp"

namespace opencat {

bool CatMap::hyperbolic() const {
  const auto t = trace();
  return t > 2 || t < -2;
}

CatMap operator*(const CatMap& x, const CatMap& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

CatMap make_cat_map(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  CatMap m{a, b, c, d};
  if (m.det() != 1) throw Error(ErrorCode::NotUnimodular, "det = " + std::to_string(m.det()));
  return m;
}

namespace {

double operator_norm(const Mat2& m) {
  // Largest singular value from the trace and determinant of m^T m.
  const double p = m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1];
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = std::sqrt(std::max(0.0, p * p - 4.0 * det * det));
  return std::sqrt(0.5 * (p + disc));
}

std::array<double, 2> eigenvector(const CatMap& m, double mu) {
  std::array<double, 2> v{};
  if (m.b != 0) {
    v = {static_cast<double>(m.b), mu - static_cast<double>(m.a)};
  } else {
    v = {mu - static_cast<double>(m.d), static_cast<double>(m.c)};
  }
  const double len = std::hypot(v[0], v[1]);
  return {v[0] / len, v[1] / len};
}

}  // namespace

CatMapAnalysis analyze(const CatMap& m) {
  if (m.det() != 1) throw Error(ErrorCode::NotUnimodular, "det = " + std::to_string(m.det()));
  if (!m.hyperbolic()) throw Error(ErrorCode::NotHyperbolic, "|trace| = " + std::to_string(std::abs(m.trace())));

  const double tr = static_cast<double>(m.trace());
  const double sign = tr > 0 ? 1.0 : -1.0;
  CatMapAnalysis out;
  out.lambda = 0.5 * (std::abs(tr) + std::sqrt(tr * tr - 4.0));
  out.negative_trace = tr < 0;

  // Columns of V are unit eigenvectors for sign*lambda and sign/lambda; V is
  // rescaled to det 1 and Q = V^{-1}.
  auto v1 = eigenvector(m, sign * out.lambda);
  auto v2 = eigenvector(m, sign / out.lambda);
  if (v1[0] < 0 || (v1[0] == 0 && v1[1] < 0)) v1 = {-v1[0], -v1[1]};
  double det = v1[0] * v2[1] - v2[0] * v1[1];
  if (det < 0) {
    v2 = {-v2[0], -v2[1]};
    det = -det;
  }
  const double s = 1.0 / std::sqrt(det);
  const Mat2 v{{{v1[0] * s, v2[0] * s}, {v1[1] * s, v2[1] * s}}};
  out.q = Mat2{{{v[1][1], -v[0][1]}, {-v[1][0], v[0][0]}}};
  out.q_norm = operator_norm(out.q);
  return out;
}

double guard_radius(const CatMapAnalysis& analysis) {
  return 1.0 / (4.0 * analysis.lambda * analysis.q_norm * analysis.q_norm);
}

namespace {

std::int64_t mod(std::int64_t v, std::int64_t q) {
  const auto r = v % q;
  return r < 0 ? r + q : r;
}

}  // namespace

RationalPoint make_point(std::int64_t x, std::int64_t y, std::int64_t q) {
  if (q <= 0) throw Error(ErrorCode::InvalidSpec, "denominator must be positive");
  return {mod(x, q), mod(y, q), q};
}

RationalPoint iterate_mod_q(const CatMap& m, const RationalPoint& p) {
  const auto q = p.q;
  const auto a = mod(m.a, q), b = mod(m.b, q), c = mod(m.c, q), d = mod(m.d, q);
  return {(a * p.x + b * p.y) % q, (c * p.x + d * p.y) % q, q};
}

std::vector<RationalPoint> orbit(const CatMap& m, const RationalPoint& p) {
  std::vector<RationalPoint> out{p};
  for (auto cur = iterate_mod_q(m, p); !(cur == p); cur = iterate_mod_q(m, cur)) out.push_back(cur);
  return out;
}

double torus_norm(const RationalPoint& p) {
  const double q = static_cast<double>(p.q);
  return std::hypot(torus_rep(static_cast<double>(p.x) / q), torus_rep(static_cast<double>(p.y) / q));
}

namespace {

struct DenominatorScan {
  EscapeRow row;
  std::optional<std::vector<RationalPoint>> witness;
};

DenominatorScan scan_denominator(const CatMap& m, double radius, std::int64_t q) {
  DenominatorScan out;
  out.row.q = q;
  std::vector<char> seen(static_cast<std::size_t>(q * q), 0);
  for (std::int64_t x = 0; x < q; ++x) {
    for (std::int64_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      if (std::gcd(std::gcd(x, y), q) != 1) continue;  // exact denominator q
      if (seen[static_cast<std::size_t>(x * q + y)]) continue;
      const auto orb = orbit(m, {x, y, q});
      double max_norm = 0.0;
      for (const auto& p : orb) {
        seen[static_cast<std::size_t>(p.x * q + p.y)] = 1;
        max_norm = std::max(max_norm, torus_norm(p));
      }
      ++out.row.num_orbits;
      out.row.min_orbit_max_norm = std::min(out.row.min_orbit_max_norm.value_or(max_norm), max_norm);
      if (max_norm <= radius) {
        out.row.all_escape = false;
        if (!out.witness) out.witness = orb;
      }
    }
  }
  return out;
}

}  // namespace

EscapeReport escape_check(const CatMap& m, double radius, std::int64_t q_max) {
  if (!(radius > 0.0 && radius <= 0.5)) throw Error(ErrorCode::InvalidRadius, "radius must lie in (0, 1/2]");
  if (q_max < 1) throw Error(ErrorCode::InvalidSpec, "q_max must be >= 1");

  std::vector<DenominatorScan> scans(static_cast<std::size_t>(q_max));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t q = 1; q <= q_max; ++q) scans[static_cast<std::size_t>(q - 1)] = scan_denominator(m, radius, q);

  EscapeReport report;
  for (auto& s : scans) {
    report.all_escape = report.all_escape && s.row.all_escape;
    s.row.all_escape = report.all_escape;
    if (!report.witness && s.witness) report.witness = std::move(s.witness);
    report.rows.push_back(s.row);
  }
  return report;
}

}  // namespace opencat
