#pragma once

// The quantized-torus state space H_N in the basis Q_0..Q_{N-1} of Dirac
// combs at x = n/N.

#include <cstddef>
#include <span>
#include <vector>

#include "opencat/matrix.hpp"

namespace opencat {

struct PlanckScale {
  int n = 1;
  double h = 0.0;  // 1 / (2 pi N)
};

/// Throws NonPositiveN for n < 1.
PlanckScale planck(int n);

struct HnState {
  std::vector<cplx> amplitudes;

  std::size_t dim() const noexcept { return amplitudes.size(); }
  double norm() const;
};

/// Sign of the exponent in the DFT kernel. Flipped exists only to demonstrate
/// that the Egorov checks are sensitive to the convention.
enum class DftSign { Standard, Flipped };

/// Unitary DFT with kernel N^{-1/2} exp(-2 pi i m n / N). The twiddle table is
/// immutable once built and can be shared between threads.
class DftPlan {
 public:
  explicit DftPlan(std::size_t n, DftSign sign = DftSign::Standard);

  std::size_t size() const noexcept { return n_; }

  HnState forward(const HnState& u) const;
  HnState inverse(const HnState& u) const;

  /// Dense matrix F (or F^dagger when inverse is true).
  ComplexMatrix matrix(bool inverse = false) const;

 private:
  HnState transform(const HnState& u, bool inverse) const;

  std::size_t n_;
  double sign_;
  std::vector<cplx> twiddle_;  // exp(sign * 2 pi i t / N), t = 0..N-1
};

HnState dft(const HnState& u);
HnState idft(const HnState& u);
ComplexMatrix dft_matrix(std::size_t n, DftSign sign = DftSign::Standard);

/// Periodized Gaussian a_m ~ sum_{|k| <= k_trunc} exp(-pi N (k + m/N)^2), unit norm.
HnState coherent_ground_state(int n, int k_trunc = 4);

/// Representative of x mod 1 in [-1/2, 1/2).
double torus_rep(double x);

}  // namespace opencat
