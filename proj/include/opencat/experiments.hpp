#pragma once

// Open quantum cat maps Op_N(cutoff) * M_N and the two spectral studies run on
// them: convergence of the trapped spectrum to lambda^{-(2k+1)/2}, and decay
// of the spectral radius for cutoffs vanishing near the fixed point.

#include <optional>
#include <string>
#include <vector>

#include "opencat/catmap.hpp"
#include "opencat/matrix.hpp"
#include "opencat/metaplectic.hpp"
#include "opencat/quantizer.hpp"

namespace opencat {

enum class Quantization { Weyl, Left };

struct OpenMapSetup {
  CatMap map = CatMap::arnold();
  BumpSpec cutoff{};
  Quantization quantization = Quantization::Left;
  PhaseMode phase = PhaseMode::LeadingRealPositive;
  QuantizerSettings quantizer{};
  MetaplecticOptions metaplectic{};
  std::optional<GeneratorWord> word;  // defaults to factor_sl2z(map)
  double support_constant = 0.25;     // c in the c / (lambda |Q|^2) support warning
};

/// Cutoff symbol matching the setup's BumpKind (trapped bump or annulus).
CutoffSymbol make_cutoff(const OpenMapSetup& setup);

/// Quantized cutoff on H_N, Weyl or left per the setup.
ComplexMatrix cutoff_operator(const OpenMapSetup& setup, const CutoffSymbol& cutoff, int n);

/// Op_N(cutoff) * M_N, phase-normalized per setup.phase. Support-guard and
/// truncation-tail violations are appended to warnings when given.
ComplexMatrix build_open_operator(const OpenMapSetup& setup, int n, std::vector<std::string>* warnings = nullptr);

/// lambda^{-(2k+1)/2} for k = 0..k_count-1.
std::vector<double> limit_targets(double lambda, int k_count);

struct SpectrumReport {
  int n = 0;
  double h = 0.0;
  std::vector<cplx> eigenvalues;  // modulus-sorted, phase-normalized
  std::vector<double> targets;
  std::vector<double> errors_modulus;
  std::vector<double> errors_real;
  std::vector<double> abs_imag;
  bool converged = true;
};

/// Compares the leading k_count eigenvalues of a sorted spectrum to the targets.
SpectrumReport make_report(int n, std::vector<cplx> sorted_eigenvalues, double lambda, int k_count, bool converged);

struct SweepRow {
  int n = 0;
  double h = 0.0;
  int k = 0;
  double re = 0.0;
  double im = 0.0;
  double modulus = 0.0;
  double target = 0.0;
  double abs_err = 0.0;  // | |mu_k| - target |
};

struct TrappedSweep {
  std::vector<SweepRow> rows;  // (N, k) order
  std::vector<SpectrumReport> reports;
  std::vector<std::string> warnings;
  bool converged = true;
};

/// Requires even N and k_count <= 8.
TrappedSweep trapped_sweep(const OpenMapSetup& setup, const std::vector<int>& n_list, int k_count);

struct NontrapRow {
  int n = 0;
  double h = 0.0;
  double top_modulus = 0.0;
  double slope_vs_prev = 0.0;  // NaN on the first row and after a zero radius
};

/// Rows from spectral radii: slope = d log r / d log h between consecutive rows.
std::vector<NontrapRow> nontrap_rows(const std::vector<int>& n_list, const std::vector<double>& radii,
                                     std::vector<std::string>* warnings = nullptr);

struct NontrapSweep {
  std::vector<NontrapRow> rows;
  std::vector<std::string> warnings;
  bool converged = true;
};

/// Requires even, ascending N.
NontrapSweep nontrapping_sweep(const OpenMapSetup& setup, const std::vector<int>& n_list);

/// max_{k >= 1} |Im mu_k| over the report's compared eigenvalues.
double phase_coherence_check(const SpectrumReport& report);

}  // namespace opencat
