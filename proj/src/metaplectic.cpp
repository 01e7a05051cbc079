#include "opencat/metaplectic.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "opencat/eigensolver.hpp"
#include "opencat/error.hpp"

namespace opencat {

CatMap Letter::matrix() const {
  switch (kind) {
    case LetterKind::S: return {0, -1, 1, 0};
    case LetterKind::SInv: return {0, 1, -1, 0};
    case LetterKind::U: return {1, param, 0, 1};
    case LetterKind::L: return {1, 0, param, 1};
    case LetterKind::Par: return {-1, 0, 0, -1};
  }
  return {1, 0, 0, 1};
}

CatMap GeneratorWord::product() const {
  CatMap p{1, 0, 0, 1};
  for (const auto& l : letters) p = p * l.matrix();
  return p;
}

GeneratorWord factor_sl2z(const CatMap& m) {
  if (m.det() != 1) throw Error(ErrorCode::NotUnimodular, "det = " + std::to_string(m.det()));
  // Invariant: m == (recorded letters) * r.
  GeneratorWord word;
  CatMap r = m;
  while (r.c != 0) {
    if (std::llabs(r.a) >= std::llabs(r.c)) {
      const auto q = r.a / r.c;
      r = Letter::u(-q).matrix() * r;
      word.letters.push_back(Letter::u(q));
    } else {
      r = Letter::s_inv().matrix() * r;
      word.letters.push_back(Letter::s());
    }
  }
  // r = +-[[1, b], [0, 1]]; -I is written as S S.
  if (r.a == -1) {
    word.letters.push_back(Letter::s());
    word.letters.push_back(Letter::s());
    r = CatMap{-r.a, -r.b, -r.c, -r.d};
  }
  if (r.b != 0) word.letters.push_back(Letter::u(r.b));
  return word;
}

namespace {

void require_even(int n) {
  planck(n);
  if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "N = " + std::to_string(n) + " must be even");
}

// exp(i pi coef m^2 / N), reduced mod 2N in integer arithmetic.
std::vector<cplx> quadratic_phase(std::int64_t coef, int n) {
  const std::int64_t two_n = 2LL * n;
  std::vector<cplx> d(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    std::int64_t t = ((coef % two_n) * ((m * m) % two_n)) % two_n;
    if (t < 0) t += two_n;
    d[static_cast<std::size_t>(m)] = std::polar(1.0, std::numbers::pi * static_cast<double>(t) / n);
  }
  return d;
}

// Fs^dagger diag(d) Fs, Fs the DFT with the given sign; circulant in (m - j).
ComplexMatrix fourier_conjugated_diagonal(const std::vector<cplx>& d, DftSign sign) {
  const auto n = d.size();
  const double sigma = sign == DftSign::Standard ? 1.0 : -1.0;
  std::vector<cplx> c(n);
  for (std::size_t delta = 0; delta < n; ++delta) {
    cplx s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      s += d[p] * std::polar(1.0, sigma * 2.0 * std::numbers::pi * static_cast<double>((p * delta) % n) /
                                      static_cast<double>(n));
    c[delta] = s / static_cast<double>(n);
  }
  ComplexMatrix out(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j) out(m, j) = c[(m + n - j) % n];
  return out;
}

}  // namespace

ComplexMatrix quantize_generator(const Letter& letter, int n, const MetaplecticOptions& opts) {
  require_even(n);
  const auto un = static_cast<std::size_t>(n);
  const cplx omega = std::polar(1.0, opts.omega_s_phase);
  switch (letter.kind) {
    case LetterKind::S: return omega * DftPlan(un, opts.dft_sign).matrix(true);
    case LetterKind::SInv: return std::conj(omega) * DftPlan(un, opts.dft_sign).matrix(false);
    case LetterKind::L: return ComplexMatrix::diagonal(quadratic_phase(letter.param, n));
    case LetterKind::U: return fourier_conjugated_diagonal(quadratic_phase(-letter.param, n), opts.dft_sign);
    case LetterKind::Par: {
      ComplexMatrix p(un);
      for (std::size_t m = 0; m < un; ++m) p((un - m) % un, m) = 1.0;
      return p;
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown generator");
}

ComplexMatrix quantize_word(const GeneratorWord& word, int n, const MetaplecticOptions& opts) {
  require_even(n);
  const auto un = static_cast<std::size_t>(n);
  auto acc = ComplexMatrix::identity(un);
  bool is_identity = true;
  for (const auto& letter : word.letters) {
    if (letter.kind == LetterKind::L) {
      // Right multiplication by a diagonal scales columns.
      const auto d = quadratic_phase(letter.param, n);
      for (std::size_t r = 0; r < un; ++r)
        for (std::size_t c = 0; c < un; ++c) acc(r, c) *= d[c];
      continue;
    }
    auto g = quantize_generator(letter, n, opts);
    acc = is_identity ? std::move(g) : matmul(acc, g);
    is_identity = false;
  }
  return acc;
}

cplx leading_phase(const ComplexMatrix& op) {
  const auto spec = eigenvalues(op);
  const auto sorted = sort_by_modulus(spec.values);
  if (sorted.empty() || std::abs(sorted.front()) < 1e-12)
    throw Error(ErrorCode::DegeneratePhase, "leading eigenvalue modulus below 1e-12");
  const cplx mu0 = sorted.front();
  return std::conj(mu0) / std::abs(mu0);
}

ComplexMatrix quantize_map(const CatMap& m, int n, PhaseMode phase, const ComplexMatrix* chi,
                           const MetaplecticOptions& opts) {
  auto mhat = quantize_word(factor_sl2z(m), n, opts);
  if (phase == PhaseMode::LeadingRealPositive) {
    if (chi == nullptr) throw Error(ErrorCode::InvalidSpec, "phase normalization needs the cutoff operator");
    mhat *= leading_phase(matmul(*chi, mhat));
  }
  return mhat;
}

double egorov_residual(const GeneratorWord& word, const TorusSymbol& sym, int n, const MetaplecticOptions& opts,
                       int capacity) {
  const auto m = word.product();
  if (capacity <= 0) {
    const auto norm_inf = std::max({std::llabs(m.a) + std::llabs(m.b), std::llabs(m.c) + std::llabs(m.d),
                                    std::llabs(m.a) + std::llabs(m.c), std::llabs(m.b) + std::llabs(m.d)});
    capacity = static_cast<int>(sym.k_max() * (norm_inf + 1));
  }
  const auto composed = sym.compose(m, capacity);
  const auto mhat = quantize_word(word, n, opts);
  const auto lhs = op_weyl(composed, n);
  const auto rhs = matmul(matmul(mhat.adjoint(), op_weyl(sym, n)), mhat);
  return max_abs_diff(lhs, rhs);
}

double egorov_residual(const CatMap& m, const TorusSymbol& sym, int n, const MetaplecticOptions& opts) {
  return egorov_residual(factor_sl2z(m), sym, n, opts);
}

}  // namespace opencat
