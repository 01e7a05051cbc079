#include "opencat/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "opencat/eigensolver.hpp"
#include "opencat/error.hpp"
#include "opencat/hn_space.hpp"

namespace opencat {

CutoffSymbol make_cutoff(const OpenMapSetup& setup) {
  return setup.cutoff.kind == BumpKind::ProductBump ? make_trapped_symbol(setup.cutoff, setup.quantizer)
                                                    : make_nontrapping_symbol(setup.cutoff, setup.quantizer);
}

ComplexMatrix cutoff_operator(const OpenMapSetup& setup, const CutoffSymbol& cutoff, int n) {
  return setup.quantization == Quantization::Weyl ? op_weyl(cutoff.symbol, n)
                                                  : op_left_separable(cutoff.f, cutoff.g, n);
}

namespace {

void collect_setup_warnings(const OpenMapSetup& setup, const CutoffSymbol& cutoff, std::vector<std::string>& out) {
  const auto guard = support_guard(setup.cutoff, analyze(setup.map), setup.support_constant);
  if (!guard.ok) {
    std::ostringstream os;
    os << "cutoff support radius " << guard.support_radius << " exceeds c/(lambda |Q|^2) = " << guard.radius_limit
       << " for c = " << setup.support_constant;
    out.push_back(os.str());
  }
  const int band = std::max(1, setup.quantizer.k_max / 10);
  if (setup.quantization == Quantization::Weyl && cutoff.symbol.band_max(band) > setup.quantizer.tail_tolerance) {
    std::ostringstream os;
    os << "symbol tail " << cutoff.symbol.band_max(band) << " over the outer " << band
       << " shells at k_max = " << setup.quantizer.k_max << " exceeds tolerance " << setup.quantizer.tail_tolerance;
    out.push_back(os.str());
  }
}

void require_even(const std::vector<int>& n_list) {
  for (int n : n_list) {
    planck(n);
    if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "N = " + std::to_string(n) + " must be even");
  }
}

GeneratorWord setup_word(const OpenMapSetup& setup) { return setup.word ? *setup.word : factor_sl2z(setup.map); }

ComplexMatrix unnormalized_open_operator(const OpenMapSetup& setup, const CutoffSymbol& cutoff, int n) {
  return matmul(cutoff_operator(setup, cutoff, n), quantize_word(setup_word(setup), n, setup.metaplectic));
}

// Runs job(i) for every index, one N per job, and rethrows the first failure.
template <typename Job>
void run_jobs(std::size_t count, Job&& job) {
  std::vector<std::exception_ptr> errors(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    try {
      job(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

ComplexMatrix build_open_operator(const OpenMapSetup& setup, int n, std::vector<std::string>* warnings) {
  require_even({n});
  const auto cutoff = make_cutoff(setup);
  if (warnings) collect_setup_warnings(setup, cutoff, *warnings);
  auto op = unnormalized_open_operator(setup, cutoff, n);
  if (setup.phase == PhaseMode::LeadingRealPositive) op *= leading_phase(op);
  return op;
}

std::vector<double> limit_targets(double lambda, int k_count) {
  std::vector<double> t;
  for (int k = 0; k < k_count; ++k) t.push_back(std::pow(lambda, -(2.0 * k + 1.0) / 2.0));
  return t;
}

SpectrumReport make_report(int n, std::vector<cplx> sorted_eigenvalues, double lambda, int k_count, bool converged) {
  SpectrumReport r;
  r.n = n;
  r.h = planck(n).h;
  r.converged = converged;
  r.targets = limit_targets(lambda, k_count);
  if (sorted_eigenvalues.size() < static_cast<std::size_t>(k_count))
    throw Error(ErrorCode::InvalidSpec, "fewer eigenvalues than k_count");
  for (int k = 0; k < k_count; ++k) {
    const cplx mu = sorted_eigenvalues[static_cast<std::size_t>(k)];
    const double target = r.targets[static_cast<std::size_t>(k)];
    r.errors_modulus.push_back(std::abs(std::abs(mu) - target));
    r.errors_real.push_back(std::abs(mu.real() - target));
    r.abs_imag.push_back(std::abs(mu.imag()));
  }
  r.eigenvalues = std::move(sorted_eigenvalues);
  return r;
}

TrappedSweep trapped_sweep(const OpenMapSetup& setup, const std::vector<int>& n_list, int k_count) {
  if (k_count < 0 || k_count > 8) throw Error(ErrorCode::InvalidSpec, "k_count must lie in [0, 8]");
  require_even(n_list);
  const double lambda = analyze(setup.map).lambda;
  const auto cutoff = make_cutoff(setup);

  TrappedSweep out;
  collect_setup_warnings(setup, cutoff, out.warnings);
  out.reports.resize(n_list.size());
  run_jobs(n_list.size(), [&](std::size_t i) {
    const int n = n_list[i];
    const auto op = unnormalized_open_operator(setup, cutoff, n);
    const auto spec = eigenvalues(op);
    auto sorted = sort_by_modulus(spec.values);
    // Rotating the spectrum is the same as rotating the quantized map.
    if (setup.phase == PhaseMode::LeadingRealPositive) {
      if (sorted.empty() || std::abs(sorted.front()) < 1e-12)
        throw Error(ErrorCode::DegeneratePhase, "leading eigenvalue modulus below 1e-12 at N = " + std::to_string(n));
      const cplx phase = std::conj(sorted.front()) / std::abs(sorted.front());
      for (auto& z : sorted) z *= phase;
      sorted.front() = std::abs(sorted.front());
    }
    out.reports[i] = make_report(n, std::move(sorted), lambda, k_count, spec.converged);
  });

  for (const auto& r : out.reports) {
    out.converged = out.converged && r.converged;
    for (int k = 0; k < k_count; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const cplx mu = r.eigenvalues[uk];
      out.rows.push_back({r.n, r.h, k, mu.real(), mu.imag(), std::abs(mu), r.targets[uk], r.errors_modulus[uk]});
    }
  }
  return out;
}

std::vector<NontrapRow> nontrap_rows(const std::vector<int>& n_list, const std::vector<double>& radii,
                                     std::vector<std::string>* warnings) {
  if (n_list.size() != radii.size()) throw Error(ErrorCode::DimensionMismatch, "one radius per N");
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<NontrapRow> rows;
  bool zero_seen = false;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    NontrapRow row{n_list[i], planck(n_list[i]).h, radii[i], nan};
    if (!(radii[i] > 0.0)) {
      if (!zero_seen && warnings)
        warnings->push_back("ZeroRadius: spectral radius underflows at N = " + std::to_string(n_list[i]) +
                            "; slopes undefined from here on");
      zero_seen = true;
    }
    if (i > 0 && !zero_seen) {
      const auto& prev = rows.back();
      row.slope_vs_prev = (std::log(row.top_modulus) - std::log(prev.top_modulus)) / (std::log(row.h) - std::log(prev.h));
    }
    rows.push_back(row);
  }
  return rows;
}

NontrapSweep nontrapping_sweep(const OpenMapSetup& setup, const std::vector<int>& n_list) {
  require_even(n_list);
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1]) throw Error(ErrorCode::InvalidSpec, "N values must be ascending");
  const auto cutoff = make_cutoff(setup);

  NontrapSweep out;
  collect_setup_warnings(setup, cutoff, out.warnings);
  std::vector<double> radii(n_list.size());
  std::vector<char> converged(n_list.size(), 1);
  run_jobs(n_list.size(), [&](std::size_t i) {
    const auto spec = eigenvalues(unnormalized_open_operator(setup, cutoff, n_list[i]));
    double r = 0.0;
    for (const auto& z : spec.values) r = std::max(r, std::abs(z));
    radii[i] = r;
    converged[i] = spec.converged ? 1 : 0;
  });
  for (char c : converged) out.converged = out.converged && c;
  out.rows = nontrap_rows(n_list, radii, &out.warnings);
  return out;
}

double phase_coherence_check(const SpectrumReport& report) {
  double m = 0.0;
  for (std::size_t k = 1; k < report.abs_imag.size(); ++k) m = std::max(m, report.abs_imag[k]);
  return m;
}

}  // namespace opencat
