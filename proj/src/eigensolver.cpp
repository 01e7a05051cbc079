#include "opencat/eigensolver.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>

#include "opencat/error.hpp"

namespace opencat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Removes indices whose row or column is zero off the diagonal within the
// remaining set; each contributes its diagonal entry as an eigenvalue. The
// rest is returned as a dense block (a permutation similarity of the
// block-triangular remainder).
ComplexMatrix isolate_trivial(const ComplexMatrix& a, std::vector<cplx>& isolated) {
  const std::size_t n = a.rows();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> row_nz(n, 0), col_nz(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a(i, j) != cplx{}) {
        ++row_nz[i];
        ++col_nz[j];
      }

  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (row_nz[i] == 0 || col_nz[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    const auto i = queue.back();
    queue.pop_back();
    if (!alive[i]) continue;
    alive[i] = 0;
    isolated.push_back(a(i, i));
    for (std::size_t j = 0; j < n; ++j) {
      if (!alive[j] || j == i) continue;
      if (a(i, j) != cplx{} && --col_nz[j] == 0) queue.push_back(j);
      if (a(j, i) != cplx{} && --row_nz[j] == 0) queue.push_back(j);
    }
  }

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) keep.push_back(i);
  ComplexMatrix b(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) b(r, c) = a(keep[r], keep[c]);
  return b;
}

// Diagonal similarity by powers of two equalizing row and column norms.
void balance(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  constexpr double radix = 2.0;
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::norm(a(j, i));
        r += std::norm(a(i, j));
      }
      c = std::sqrt(c);
      r = std::sqrt(r);
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / radix;
      while (c < g && f < 1e100) {
        f *= radix;
        c *= radix;
        r /= radix;
        g /= radix;
      }
      g = c / radix;
      while (g >= r && f > 1e-100) {
        f /= radix;
        c /= radix;
        g /= radix;
        r *= radix;
      }
      if (c + r >= 0.95 * s) continue;
      changed = true;
      for (std::size_t j = 0; j < n; ++j) a(i, j) /= f;
      for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
    }
  }
}

// Unitary similarity to upper Hessenberg form by Householder reflectors.
void hessenberg(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<cplx> v(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const cplx alpha = a(k + 1, k);
    double xnorm2 = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) xnorm2 += std::norm(a(i, k));
    if (xnorm2 == 0.0) continue;

    const double norm = std::sqrt(std::norm(alpha) + xnorm2);
    const double beta = alpha.real() >= 0.0 ? -norm : norm;
    const cplx tau = (beta - alpha) / beta;
    const cplx scale = 1.0 / (alpha - beta);
    const std::size_t len = n - k - 1;
    v[0] = 1.0;
    for (std::size_t i = 1; i < len; ++i) v[i] = a(k + 1 + i, k) * scale;

    // Left: A <- (I - conj(tau) v v^H) A on rows k+1.., columns k..
    for (std::size_t j = k; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < len; ++i) s += std::conj(v[i]) * a(k + 1 + i, j);
      s *= std::conj(tau);
      for (std::size_t i = 0; i < len; ++i) a(k + 1 + i, j) -= s * v[i];
    }
    // Right: A <- A (I - tau v v^H) on all rows, columns k+1..
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < len; ++i) s += a(r, k + 1 + i) * v[i];
      s *= tau;
      for (std::size_t i = 0; i < len; ++i) a(r, k + 1 + i) -= s * std::conj(v[i]);
    }
    a(k + 1, k) = beta;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

struct Rotation {
  double c;
  cplx s;
  cplx r;
};

// G = [[c, s], [-conj(s), c]] with G (x, y)^T = (r, 0)^T.
Rotation givens(cplx x, cplx y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) return {1.0, 0.0, x};
  if (ax == 0.0) return {0.0, std::conj(y) / ay, ay};
  const double r = std::hypot(ax, ay);
  const cplx phase = x / ax;
  return {ax / r, phase * std::conj(y) / r, phase * r};
}

cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx root = std::sqrt(half * half + b * c);
  const cplx mid = 0.5 * (a + d);
  const cplx e1 = mid + root;
  const cplx e2 = mid - root;
  return std::abs(e1 - d) <= std::abs(e2 - d) ? e1 : e2;
}

// Shifted complex QR on an upper Hessenberg matrix; eigenvalues only, so
// rotations are confined to the active window.
bool hessenberg_qr(ComplexMatrix& h, std::vector<cplx>& out, int max_its, int& total_its) {
  const int n = static_cast<int>(h.rows());
  const double smlnum = DBL_MIN * (static_cast<double>(std::max(n, 1)) / kEps);
  int ihi = n - 1;
  bool ok = true;
  while (ihi >= 0) {
    int its = 0;
    for (;;) {
      int l = ihi;
      for (; l > 0; --l) {
        const double sub = std::abs(h(l, l - 1));
        if (sub <= smlnum) break;
        const double tst = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
        if (sub <= kEps * tst) break;
      }
      if (l > 0) h(l, l - 1) = 0.0;
      if (l == ihi) {
        out.push_back(h(ihi, ihi));
        --ihi;
        break;
      }
      if (its >= max_its) {
        ok = false;
        // Hand back the current diagonal so callers still see a full multiset.
        for (int i = ihi; i >= l; --i) out.push_back(h(i, i));
        ihi = l - 1;
        break;
      }

      cplx shift;
      if (its == 10) {
        shift = 0.75 * std::abs(h(l + 1, l).real()) + h(l, l);
      } else if (its == 20) {
        shift = 0.75 * std::abs(h(ihi, ihi - 1).real()) + h(ihi, ihi);
      } else {
        shift = wilkinson_shift(h(ihi - 1, ihi - 1), h(ihi - 1, ihi), h(ihi, ihi - 1), h(ihi, ihi));
      }

      cplx x = h(l, l) - shift;
      cplx y = h(l + 1, l);
      for (int k = l; k < ihi; ++k) {
        if (k > l) {
          x = h(k, k - 1);
          y = h(k + 1, k - 1);
        }
        const auto g = givens(x, y);
        const int col0 = k > l ? k - 1 : l;
        for (int j = col0; j <= ihi; ++j) {
          const cplx p = h(k, j);
          const cplx q = h(k + 1, j);
          h(k, j) = g.c * p + g.s * q;
          h(k + 1, j) = -std::conj(g.s) * p + g.c * q;
        }
        if (k > l) h(k + 1, k - 1) = 0.0;
        const int row1 = std::min(k + 2, ihi);
        for (int i = l; i <= row1; ++i) {
          const cplx p = h(i, k);
          const cplx q = h(i, k + 1);
          h(i, k) = p * g.c + q * std::conj(g.s);
          h(i, k + 1) = -p * g.s + q * g.c;
        }
      }
      ++its;
      ++total_its;
    }
  }
  return ok;
}

}  // namespace

SpectrumRaw eigenvalues(const ComplexMatrix& a, const EigenOptions& opts) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "eigenvalues of a non-square matrix");
  if (!a.all_finite()) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entries");

  SpectrumRaw out;
  out.values.reserve(a.rows());
  auto work = isolate_trivial(a, out.values);
  if (opts.balance) balance(work);
  hessenberg(work);
  out.converged = hessenberg_qr(work, out.values, opts.max_iterations_per_eigenvalue, out.iterations);
  return out;
}

std::vector<cplx> characteristic_polynomial(const ComplexMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<cplx> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    auto next = matmul(a, mk, Exec::Serial);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -matmul(a, mk, Exec::Serial).trace() / static_cast<double>(k);
  }
  return c;
}

std::vector<cplx> char_poly_roots(const ComplexMatrix& a) {
  if (a.rows() > 8) throw Error(ErrorCode::DimensionMismatch, "oracle limited to dimension <= 8");
  const auto c = characteristic_polynomial(a);
  const std::size_t n = a.rows();
  if (n == 0) return {};

  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  const double radius = 1.0 + bound;
  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.4);

  const auto eval = [&](cplx t, double& scale) {
    cplx p = 0.0;
    scale = 0.0;
    double at = std::abs(t);
    for (std::size_t i = n + 1; i-- > 0;) {
      p = p * t + c[i];
      scale = scale * at + std::abs(c[i]);
    }
    return p;
  };

  for (int sweep = 0; sweep < 500; ++sweep) {
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double scale = 0.0;
      const cplx p = eval(z[i], scale);
      if (std::abs(p) > 1e-12 * scale) done = false;
      cplx denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom != cplx{}) z[i] -= p / denom;
    }
    if (done) return z;
  }
  throw Error(ErrorCode::OracleNoConvergence, "Durand-Kerner did not converge in 500 sweeps");
}

std::vector<cplx> sort_by_modulus(std::vector<cplx> values) {
  std::stable_sort(values.begin(), values.end(), [](const cplx& x, const cplx& y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax > ay;
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return values;
}

double multiset_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const auto sa = sort_by_modulus({a.begin(), a.end()});
  const auto sb = sort_by_modulus({b.begin(), b.end()});
  std::vector<char> used(sb.size(), 0);
  double worst = 0.0;
  for (const auto& x : sa) {
    std::size_t best = sb.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - sb[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = 1;
    worst = std::max(worst, best_d);
  }
  return worst;
}

double spectral_norm(const ComplexMatrix& a) {
  const auto gram = matmul(a.adjoint(), a);
  const auto spec = eigenvalues(gram);
  double top = 0.0;
  for (const auto& z : spec.values) top = std::max(top, z.real());
  return std::sqrt(top);
}

}  // namespace opencat
