#include "opencat/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "opencat/catmap.hpp"
#include "opencat/eigensolver.hpp"
#include "opencat/hn_space.hpp"
#include "opencat/quantizer.hpp"

namespace opencat {

namespace {

using Rng = std::mt19937_64;

cplx random_cplx(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_cplx(rng);
  return a;
}

TorusSymbol random_symbol(Rng& rng, int k_max) {
  TorusSymbol s(k_max);
  for (int k = -k_max; k <= k_max; ++k)
    for (int l = -k_max; l <= k_max; ++l) s.set(k, l, random_cplx(rng));
  return s;
}

TorusSymbol cos_cos() {
  return TorusSymbol::mode(1, 0, 0.5) + TorusSymbol::mode(-1, 0, 0.5) + TorusSymbol::mode(0, 1, 0.5) +
         TorusSymbol::mode(0, -1, 0.5);
}

// Relative mismatch between tr(A^k) and sum lambda^k, worst over k = 1..5.
double power_trace_defect(const ComplexMatrix& a) {
  const auto lambda = eigenvalues(a).values;
  ComplexMatrix p = a;
  double worst = 0.0;
  for (int k = 1; k <= 5; ++k) {
    if (k > 1) p = matmul(p, a);
    cplx sum = 0.0;
    double scale = 0.0;
    for (const auto& z : lambda) {
      const cplx zk = std::pow(z, k);
      sum += zk;
      scale += std::abs(zk);
    }
    worst = std::max(worst, std::abs(p.trace() - sum) / std::max(scale, 1e-300));
  }
  return worst;
}

struct Suite {
  std::vector<CheckResult> out;
  void add(std::string name, int n, double value, double threshold) {
    out.push_back({std::move(name), n, value, threshold, std::isfinite(value) && value < threshold});
  }
};

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  Suite s;
  const auto& mo = opts.metaplectic;
  const auto arnold = CatMap::arnold();
  const auto arnold_word = factor_sl2z(arnold);
  const auto inverse_word = factor_sl2z(arnold.inverse());
  const std::vector<Letter> letters{Letter::s(),  Letter::s_inv(), Letter::u(1), Letter::u(-2),
                                    Letter::l(1), Letter::l(3),    Letter::par()};
  const auto bump = make_trapped_symbol(BumpSpec{}).symbol;
  Rng rng(opts.seed);

  for (int n : opts.dims) {
    const auto f = dft_matrix(static_cast<std::size_t>(n), mo.dft_sign);
    s.add("dft_unitary", n, distance_to_identity(matmul(f.adjoint(), f)), 1e-12);
    const auto f2 = matmul(f, f);
    s.add("dft_fourth_power", n, distance_to_identity(matmul(f2, f2)), 1e-10);

    const auto m = quantize_word(arnold_word, n, mo);
    s.add("map_unitary", n, distance_to_identity(matmul(m.adjoint(), m)), 1e-10);

    const auto prod = matmul(m, quantize_word(inverse_word, n, mo));
    s.add("projective_inverse", n, max_abs_diff(prod, prod(0, 0) * ComplexMatrix::identity(prod.rows())), 1e-9);

    double gen = 0.0;
    for (const auto& letter : letters)
      for (const auto& a : {TorusSymbol::mode(1, 0), TorusSymbol::mode(0, 1), TorusSymbol::mode(1, -1)})
        gen = std::max(gen, egorov_residual(GeneratorWord{{letter}}, a, n, mo));
    s.add("egorov_generators", n, gen, 1e-8);
    s.add("egorov_arnold", n, egorov_residual(arnold_word, cos_cos(), n, mo), 1e-8);
    s.add("egorov_random_symbol", n, egorov_residual(arnold_word, random_symbol(rng, 3), n, mo), 1e-8);

    s.add("weyl_identity", n, distance_to_identity(op_weyl(TorusSymbol::constant(1.0), n)), 1e-13);
    const auto w = op_weyl(bump, n);
    s.add("weyl_hermitian", n, max_abs_diff(w, w.adjoint()), 1e-11);

    const auto a = random_symbol(rng, 6), b = random_symbol(rng, 6);
    const cplx alpha = random_cplx(rng), beta = random_cplx(rng);
    const auto lhs = op_weyl(alpha * a + beta * b, n);
    const auto rhs = alpha * op_weyl(a, n) + beta * op_weyl(b, n);
    s.add("weyl_linearity", n, max_abs_diff(lhs, rhs), 1e-12);
  }

  double oracle = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(rng, 6);
    const auto qr = eigenvalues(a).values;
    const auto roots = char_poly_roots(a);
    oracle = std::max(oracle, multiset_distance(sort_by_modulus(qr), sort_by_modulus(roots)));
  }
  s.add("eigen_oracle_6x6", 0, oracle, 1e-6);
  s.add("eigen_power_trace", 50, power_trace_defect(random_matrix(rng, 50)), 1e-8);

  const auto report = escape_check(arnold, guard_radius(analyze(arnold)), 60);
  s.add("escape_guard_radius_q60", 0, report.all_escape ? 0.0 : 1.0, 0.5);

  if (opts.include_weyl_left) {
    const auto cut = make_trapped_symbol(BumpSpec{});
    auto gap = [&](int n) { return spectral_norm(op_weyl(cut.symbol, n) - op_left_separable(cut.f, cut.g, n)); };
    const double ratio = gap(128) / gap(256);
    // Two-sided window: the check passes when the ratio lies in [1.3, 3.0].
    s.out.push_back({"weyl_left_halving_ratio", 256, ratio, 3.0, ratio >= 1.3 && ratio <= 3.0});
  }
  return s.out;
}

std::string format_check(const CheckResult& c) {
  char buf[256];
  if (c.n > 0) {
    std::snprintf(buf, sizeof buf, "%s %s N=%d value=%.3e threshold=%.1e", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.n, c.value, c.threshold);
  } else {
    std::snprintf(buf, sizeof buf, "%s %s value=%.3e threshold=%.1e", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.value, c.threshold);
  }
  return buf;
}

}  // namespace opencat
