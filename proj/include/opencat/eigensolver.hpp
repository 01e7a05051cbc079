#pragma once

// Eigenvalues of dense non-Hermitian complex matrices, plus a small
// independent oracle for cross-checking.

#include <span>
#include <vector>

#include "opencat/matrix.hpp"

namespace opencat {

struct SpectrumRaw {
  std::vector<cplx> values;
  bool converged = true;
  int iterations = 0;
};

struct EigenOptions {
  bool balance = true;
  int max_iterations_per_eigenvalue = 40;
};

/// All eigenvalues via isolation of trivially decoupled rows/columns,
/// diagonal balancing, Householder reduction to Hessenberg form and a
/// Wilkinson-shifted complex QR iteration. Throws NonFinite on NaN/Inf input.
/// Slow convergence is reported through converged = false.
SpectrumRaw eigenvalues(const ComplexMatrix& a, const EigenOptions& opts = {});

/// Coefficients c_0..c_n of det(t I - a), c_n = 1 (Faddeev-LeVerrier).
std::vector<cplx> characteristic_polynomial(const ComplexMatrix& a);

/// Roots of the characteristic polynomial by Durand-Kerner; dim <= 8.
/// Throws OracleNoConvergence after 500 sweeps.
std::vector<cplx> char_poly_roots(const ComplexMatrix& a);

/// Descending modulus, then descending real part, then descending imaginary part.
std::vector<cplx> sort_by_modulus(std::vector<cplx> values);

/// Greedy matching on modulus-sorted lists; returns the largest matched distance.
double multiset_distance(std::span<const cplx> a, std::span<const cplx> b);

/// Largest singular value, from the top eigenvalue of a^dagger a.
double spectral_norm(const ComplexMatrix& a);

}  // namespace opencat
