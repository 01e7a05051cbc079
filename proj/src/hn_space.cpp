#include "opencat/hn_space.hpp"

#include <cmath>
#include <numbers>

#include "opencat/error.hpp"

namespace opencat {

PlanckScale planck(int n) {
  if (n < 1) throw Error(ErrorCode::NonPositiveN, "N = " + std::to_string(n));
  return {n, 1.0 / (2.0 * std::numbers::pi * n)};
}

double HnState::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes) s += std::norm(z);
  return std::sqrt(s);
}

DftPlan::DftPlan(std::size_t n, DftSign sign)
    : n_(n), sign_(sign == DftSign::Standard ? -1.0 : 1.0), twiddle_(n) {
  if (n == 0) throw Error(ErrorCode::NonPositiveN, "DFT of size 0");
  for (std::size_t t = 0; t < n; ++t) {
    const double arg = sign_ * 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    twiddle_[t] = std::polar(1.0, arg);
  }
}

HnState DftPlan::transform(const HnState& u, bool inverse) const {
  if (u.dim() != n_) throw Error(ErrorCode::DimensionMismatch, "DFT size");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  HnState out{std::vector<cplx>(n_)};
  for (std::size_t m = 0; m < n_; ++m) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      const auto w = twiddle_[(m * j) % n_];
      s += (inverse ? std::conj(w) : w) * u.amplitudes[j];
    }
    out.amplitudes[m] = s * scale;
  }
  return out;
}

HnState DftPlan::forward(const HnState& u) const { return transform(u, false); }
HnState DftPlan::inverse(const HnState& u) const { return transform(u, true); }

ComplexMatrix DftPlan::matrix(bool inverse) const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_));
  ComplexMatrix f(n_);
  for (std::size_t m = 0; m < n_; ++m)
    for (std::size_t j = 0; j < n_; ++j) {
      const auto w = twiddle_[(m * j) % n_];
      f(m, j) = (inverse ? std::conj(w) : w) * scale;
    }
  return f;
}

HnState dft(const HnState& u) { return DftPlan(u.dim()).forward(u); }
HnState idft(const HnState& u) { return DftPlan(u.dim()).inverse(u); }
ComplexMatrix dft_matrix(std::size_t n, DftSign sign) { return DftPlan(n, sign).matrix(); }

HnState coherent_ground_state(int n, int k_trunc) {
  planck(n);
  if (k_trunc < 1) throw Error(ErrorCode::InvalidSpec, "k_trunc must be >= 1");
  const double dn = n;
  HnState out{std::vector<cplx>(static_cast<std::size_t>(n))};
  for (int m = 0; m < n; ++m) {
    double s = 0.0;
    for (int k = -k_trunc; k <= k_trunc; ++k) {
      const double x = k + m / dn;
      s += std::exp(-std::numbers::pi * dn * x * x);
    }
    out.amplitudes[static_cast<std::size_t>(m)] = s;
  }
  const double nrm = out.norm();
  for (auto& a : out.amplitudes) a /= nrm;
  return out;
}

double torus_rep(double x) {
  double r = x - std::floor(x + 0.5);
  if (r >= 0.5) r -= 1.0;
  return r;
}

}  // namespace opencat
