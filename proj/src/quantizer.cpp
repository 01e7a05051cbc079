#include "opencat/quantizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "opencat/error.hpp"
#include "opencat/hn_space.hpp"

namespace opencat {

void validate(const BumpSpec& spec) {
  if (!(spec.r_inner > 0.0 && spec.r_inner < spec.r_outer && spec.r_outer < 0.5))
    throw Error(ErrorCode::InvalidSpec, "need 0 < r_inner < r_outer < 1/2, got r_inner = " +
                                            std::to_string(spec.r_inner) + ", r_outer = " + std::to_string(spec.r_outer));
}

double smooth_step(double t) {
  const auto s = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = s(t);
  return a / (a + s(1.0 - t));
}

double bump_profile(const BumpSpec& spec, double x) {
  const double ax = std::abs(x);
  if (ax <= spec.r_inner) return 1.0;
  if (ax >= spec.r_outer) return 0.0;
  return smooth_step((spec.r_outer - ax) / (spec.r_outer - spec.r_inner));
}

double annulus_profile(const BumpSpec& spec, double x) { return bump_profile(spec, x) - bump_profile(spec, 2.0 * x); }

// ---------------------------------------------------------------------------
// TorusSymbol

TorusSymbol::TorusSymbol(int k_max) : k_max_(k_max) {
  if (k_max < 0) throw Error(ErrorCode::InvalidSpec, "k_max must be >= 0");
  const auto w = static_cast<std::size_t>(2 * k_max + 1);
  coeffs_.assign(w * w, cplx{});
}

TorusSymbol TorusSymbol::constant(cplx value) {
  TorusSymbol s(0);
  s.set(0, 0, value);
  return s;
}

TorusSymbol TorusSymbol::mode(int k, int l, cplx amplitude) {
  TorusSymbol s(std::max(std::abs(k), std::abs(l)));
  s.set(k, l, amplitude);
  return s;
}

cplx TorusSymbol::coeff(int k, int l) const { return in_range(k, l) ? coeffs_[index(k, l)] : cplx{}; }

void TorusSymbol::set(int k, int l, cplx value) {
  if (!in_range(k, l))
    throw Error(ErrorCode::TruncationOverflow,
                "mode (" + std::to_string(k) + "," + std::to_string(l) + ") beyond k_max = " + std::to_string(k_max_));
  coeffs_[index(k, l)] = value;
}

cplx TorusSymbol::value(double x, double xi) const {
  cplx s = 0.0;
  for (int k = -k_max_; k <= k_max_; ++k)
    for (int l = -k_max_; l <= k_max_; ++l) {
      const cplx c = coeffs_[index(k, l)];
      if (c == cplx{}) continue;
      s += c * std::polar(1.0, 2.0 * std::numbers::pi * (k * x + l * xi));
    }
  return s;
}

double TorusSymbol::tail_max() const { return band_max(1); }

double TorusSymbol::band_max(int width) const {
  const int inner = k_max_ - std::max(width, 1);
  double m = 0.0;
  for (int k = -k_max_; k <= k_max_; ++k)
    for (int l = -k_max_; l <= k_max_; ++l)
      if (std::max(std::abs(k), std::abs(l)) > inner) m = std::max(m, std::abs(coeffs_[index(k, l)]));
  return m;
}

double TorusSymbol::reality_defect() const {
  double m = 0.0;
  for (int k = -k_max_; k <= k_max_; ++k)
    for (int l = -k_max_; l <= k_max_; ++l)
      m = std::max(m, std::abs(coeffs_[index(-k, -l)] - std::conj(coeffs_[index(k, l)])));
  return m;
}

TorusSymbol TorusSymbol::compose(const CatMap& m, int capacity) const {
  TorusSymbol out(capacity);
  for (int k = -k_max_; k <= k_max_; ++k)
    for (int l = -k_max_; l <= k_max_; ++l) {
      const cplx c = coeffs_[index(k, l)];
      if (c == cplx{}) continue;
      // M^T (k, l)
      const auto k2 = m.a * k + m.c * l;
      const auto l2 = m.b * k + m.d * l;
      if (std::abs(k2) > capacity || std::abs(l2) > capacity)
        throw Error(ErrorCode::TruncationOverflow, "composed mode (" + std::to_string(k2) + "," + std::to_string(l2) +
                                                       ") exceeds capacity " + std::to_string(capacity));
      out.coeffs_[out.index(static_cast<int>(k2), static_cast<int>(l2))] += c;
    }
  return out;
}

TorusSymbol TorusSymbol::resized(int k_max) const {
  TorusSymbol out(k_max);
  out.support_radius = support_radius;
  for (int k = -k_max_; k <= k_max_; ++k)
    for (int l = -k_max_; l <= k_max_; ++l) {
      const cplx c = coeffs_[index(k, l)];
      if (c == cplx{}) continue;
      out.set(k, l, c);
    }
  return out;
}

TorusSymbol& TorusSymbol::operator+=(const TorusSymbol& o) {
  if (o.k_max_ > k_max_) *this = resized(o.k_max_);
  for (int k = -o.k_max_; k <= o.k_max_; ++k)
    for (int l = -o.k_max_; l <= o.k_max_; ++l) coeffs_[index(k, l)] += o.coeffs_[o.index(k, l)];
  support_radius.reset();
  return *this;
}

TorusSymbol& TorusSymbol::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TorusSymbol operator+(TorusSymbol a, const TorusSymbol& b) { return a += b; }
TorusSymbol operator*(cplx s, TorusSymbol a) { return a *= s; }

// ---------------------------------------------------------------------------
// Symbol construction

namespace {

void check_grid(int k_max, int grid) {
  if (k_max < 0) throw Error(ErrorCode::InvalidSpec, "k_max must be >= 0");
  if (grid < 4 * k_max || grid < 1)
    throw Error(ErrorCode::GridTooCoarse, "grid " + std::to_string(grid) + " < 4 * k_max = " + std::to_string(4 * k_max));
}

// exp(-2 pi i t / grid) for t = 0..grid-1
std::vector<cplx> twiddles(int grid) {
  std::vector<cplx> w(static_cast<std::size_t>(grid));
  for (int t = 0; t < grid; ++t) w[static_cast<std::size_t>(t)] = std::polar(1.0, -2.0 * std::numbers::pi * t / grid);
  return w;
}

inline std::size_t wrap(long long v, long long n) {
  const long long r = v % n;
  return static_cast<std::size_t>(r < 0 ? r + n : r);
}

std::vector<cplx> fourier_1d(const Profile& f, int k_max, int grid, const std::vector<cplx>& w) {
  std::vector<double> samples(static_cast<std::size_t>(grid));
  for (int p = 0; p < grid; ++p) samples[static_cast<std::size_t>(p)] = f(torus_rep(static_cast<double>(p) / grid));
  std::vector<cplx> c(static_cast<std::size_t>(2 * k_max + 1));
  for (int k = -k_max; k <= k_max; ++k) {
    cplx s = 0.0;
    for (int p = 0; p < grid; ++p) s += samples[static_cast<std::size_t>(p)] * w[wrap(1LL * k * p, grid)];
    c[static_cast<std::size_t>(k + k_max)] = s / static_cast<double>(grid);
  }
  return c;
}

}  // namespace

TorusSymbol symbol_from_function(const TorusFunction& f, int k_max, int grid, Exec exec) {
  check_grid(k_max, grid);
  const auto w = twiddles(grid);
  const auto g = static_cast<std::size_t>(grid);
  const auto width = static_cast<std::size_t>(2 * k_max + 1);

  // Stage 1: transform along xi for every sample row, keeping |l| <= k_max.
  std::vector<cplx> partial(g * width);
  const auto row_stage = [&](int p) {
    std::vector<cplx> samples(g);
    for (int q = 0; q < grid; ++q)
      samples[static_cast<std::size_t>(q)] = f(static_cast<double>(p) / grid, static_cast<double>(q) / grid);
    for (int l = -k_max; l <= k_max; ++l) {
      cplx s = 0.0;
      for (int q = 0; q < grid; ++q) s += samples[static_cast<std::size_t>(q)] * w[wrap(1LL * l * q, grid)];
      partial[static_cast<std::size_t>(p) * width + static_cast<std::size_t>(l + k_max)] = s;
    }
  };
  // Stage 2: transform along x for every retained l.
  TorusSymbol out(k_max);
  const double scale = 1.0 / (static_cast<double>(grid) * grid);
  const auto col_stage = [&](int k) {
    for (int l = -k_max; l <= k_max; ++l) {
      cplx s = 0.0;
      for (int p = 0; p < grid; ++p)
        s += partial[static_cast<std::size_t>(p) * width + static_cast<std::size_t>(l + k_max)] *
             w[wrap(1LL * k * p, grid)];
      out.set(k, l, s * scale);
    }
  };

  if (exec == Exec::Serial) {
    for (int p = 0; p < grid; ++p) row_stage(p);
    for (int k = -k_max; k <= k_max; ++k) col_stage(k);
  } else {
#pragma omp parallel for schedule(static)
    for (int p = 0; p < grid; ++p) row_stage(p);
#pragma omp parallel for schedule(static)
    for (int k = -k_max; k <= k_max; ++k) col_stage(k);
  }
  return out;
}

TorusSymbol symbol_from_product(const Profile& f, const Profile& g, int k_max, int grid) {
  check_grid(k_max, grid);
  const auto w = twiddles(grid);
  const auto cf = fourier_1d(f, k_max, grid, w);
  const auto cg = fourier_1d(g, k_max, grid, w);
  TorusSymbol out(k_max);
  for (int k = -k_max; k <= k_max; ++k)
    for (int l = -k_max; l <= k_max; ++l)
      out.set(k, l, cf[static_cast<std::size_t>(k + k_max)] * cg[static_cast<std::size_t>(l + k_max)]);
  return out;
}

// ---------------------------------------------------------------------------
// Quantization

ComplexMatrix op_weyl(const TorusSymbol& sym, int n, Exec exec) {
  planck(n);
  const int kmax = sym.k_max();
  const long long two_n = 2LL * n;
  // exp(pi i t / N), t mod 2N
  std::vector<cplx> phase(static_cast<std::size_t>(two_n));
  for (long long t = 0; t < two_n; ++t)
    phase[static_cast<std::size_t>(t)] = std::polar(1.0, std::numbers::pi * static_cast<double>(t) / n);

  ComplexMatrix a(static_cast<std::size_t>(n));
  const auto row_kernel = [&](int m) {
    for (int j = 0; j < n; ++j) {
      const int d0 = j - m;
      cplx entry = 0.0;
      // l with |d0 - l N| <= k_max
      const int l_lo = static_cast<int>(std::ceil(static_cast<double>(d0 - kmax) / n));
      const int l_hi = static_cast<int>(std::floor(static_cast<double>(d0 + kmax) / n));
      for (int l = l_lo; l <= l_hi; ++l) {
        const int d = d0 - l * n;
        // (-1)^{kl} exp(pi i (j+m) k / N) = exp(pi i k (j + m + l N) / N)
        const long long s = static_cast<long long>(j) + m + static_cast<long long>(l) * n;
        for (int k = -kmax; k <= kmax; ++k) {
          const cplx c = sym.coeff(k, d);
          if (c == cplx{}) continue;
          entry += c * phase[wrap(s * k, two_n)];
        }
      }
      a(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) = entry;
    }
  };

  if (exec == Exec::Serial) {
    for (int m = 0; m < n; ++m) row_kernel(m);
  } else {
#pragma omp parallel for schedule(static)
    for (int m = 0; m < n; ++m) row_kernel(m);
  }
  return a;
}

ComplexMatrix op_left_separable(const Profile& f, const Profile& g, int n, Exec exec) {
  planck(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> fv(un), gv(un);
  for (std::size_t m = 0; m < un; ++m) {
    const double x = torus_rep(static_cast<double>(m) / n);
    fv[m] = f(x);
    gv[m] = g(x);
  }
  // F^dagger D_g F is circulant: entry (m, j) = c[(m - j) mod N],
  // c[d] = N^{-1} sum_p g_p exp(2 pi i p d / N).
  std::vector<cplx> c(un);
  for (std::size_t d = 0; d < un; ++d) {
    cplx s = 0.0;
    for (std::size_t p = 0; p < un; ++p)
      s += gv[p] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((p * d) % un) / n);
    c[d] = s / static_cast<double>(n);
  }

  ComplexMatrix a(un);
  const auto row_kernel = [&](std::size_t m) {
    for (std::size_t j = 0; j < un; ++j) a(m, j) = fv[m] * c[(m + un - j) % un];
  };
  if (exec == Exec::Serial) {
    for (std::size_t m = 0; m < un; ++m) row_kernel(m);
  } else {
    const auto rows = static_cast<std::ptrdiff_t>(un);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t m = 0; m < rows; ++m) row_kernel(static_cast<std::size_t>(m));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Cutoffs

CutoffSymbol make_trapped_symbol(const BumpSpec& spec, const QuantizerSettings& settings) {
  validate(spec);
  if (spec.kind != BumpKind::ProductBump) throw Error(ErrorCode::InvalidSpec, "trapped cutoff needs a product bump");
  Profile rho = [spec](double x) { return bump_profile(spec, x); };
  CutoffSymbol out{rho, rho, symbol_from_product(rho, rho, settings.k_max, settings.grid)};
  out.symbol.support_radius = std::sqrt(2.0) * spec.r_outer;
  return out;
}

CutoffSymbol make_nontrapping_symbol(const BumpSpec& spec, const QuantizerSettings& settings) {
  validate(spec);
  if (spec.kind != BumpKind::AnnulusProduct)
    throw Error(ErrorCode::InvalidSpec, "nontrapping cutoff needs an annulus product");
  if (2.0 * spec.r_outer >= 0.5) throw Error(ErrorCode::InvalidSpec, "annulus cutoff needs 2 r_outer < 1/2");
  Profile nu = [spec](double x) { return annulus_profile(spec, x); };
  CutoffSymbol out{nu, nu, symbol_from_product(nu, nu, settings.k_max, settings.grid)};
  out.symbol.support_radius = std::sqrt(2.0) * spec.r_outer;
  return out;
}

SupportGuard support_guard(const BumpSpec& spec, const CatMapAnalysis& analysis, double c) {
  if (!(c > 0.0)) throw Error(ErrorCode::InvalidSpec, "support constant must be positive");
  SupportGuard g;
  g.radius_limit = c / (analysis.lambda * analysis.q_norm * analysis.q_norm);
  g.support_radius = std::sqrt(2.0) * spec.r_outer;
  g.ok = g.support_radius <= g.radius_limit;
  return g;
}

}  // namespace opencat
