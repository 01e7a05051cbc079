#pragma once

// Smooth symbols on the torus as truncated Fourier tables, and their Weyl and
// left quantizations on H_N.

#include <functional>
#include <optional>
#include <vector>

#include "opencat/catmap.hpp"
#include "opencat/matrix.hpp"

namespace opencat {

enum class BumpKind { ProductBump, AnnulusProduct };

/// Radii of the base profile rho: rho = 1 on |x| <= r_inner, 0 on |x| >= r_outer.
struct BumpSpec {
  BumpKind kind = BumpKind::ProductBump;
  double r_inner = 0.10;
  double r_outer = 0.20;
};

/// Throws InvalidSpec unless 0 < r_inner < r_outer < 1/2.
void validate(const BumpSpec& spec);

/// s(t)/(s(t)+s(1-t)) with s(t) = exp(-1/t) for t > 0, else 0.
double smooth_step(double t);

/// The C-infinity profile rho on the real line (not periodized).
double bump_profile(const BumpSpec& spec, double x);

/// rho(x) - rho(2x): vanishes near 0, used for the nontrapping cutoff.
double annulus_profile(const BumpSpec& spec, double x);

using Profile = std::function<double(double)>;
using TorusFunction = std::function<cplx(double, double)>;

/// Fourier table a(x, xi) = sum coeff(k, l) exp(2 pi i (k x + l xi)) over
/// |k|, |l| <= k_max.
class TorusSymbol {
 public:
  explicit TorusSymbol(int k_max = 0);

  static TorusSymbol constant(cplx value);
  /// Single mode exp(2 pi i (k x + l xi)).
  static TorusSymbol mode(int k, int l, cplx amplitude = 1.0);

  int k_max() const noexcept { return k_max_; }
  bool in_range(int k, int l) const noexcept { return std::abs(k) <= k_max_ && std::abs(l) <= k_max_; }

  /// Zero outside the table.
  cplx coeff(int k, int l) const;
  /// Throws TruncationOverflow outside the table.
  void set(int k, int l, cplx value);

  cplx value(double x, double xi) const;

  /// Largest |coeff| with max(|k|, |l|) = k_max.
  double tail_max() const;
  /// Largest |coeff| with max(|k|, |l|) > k_max - width. Profiles built from
  /// translates can vanish on whole shells, so the warning uses a band.
  double band_max(int width) const;
  /// max |coeff(-k,-l) - conj(coeff(k,l))|; zero for real-valued symbols.
  double reality_defect() const;

  /// Table of a o M, where exp(2 pi i <w, z>) o M = exp(2 pi i <M^T w, z>).
  /// Throws TruncationOverflow when a transported mode exceeds capacity.
  TorusSymbol compose(const CatMap& m, int capacity) const;

  /// Re-tabulate with a different truncation; modes beyond the new k_max must vanish.
  TorusSymbol resized(int k_max) const;

  TorusSymbol& operator+=(const TorusSymbol& o);
  TorusSymbol& operator*=(cplx s);

  /// Phase-space radius of the support, when known.
  std::optional<double> support_radius;

 private:
  std::size_t index(int k, int l) const {
    const auto w = static_cast<std::size_t>(2 * k_max_ + 1);
    return static_cast<std::size_t>(k + k_max_) * w + static_cast<std::size_t>(l + k_max_);
  }

  int k_max_;
  std::vector<cplx> coeffs_;
};

TorusSymbol operator+(TorusSymbol a, const TorusSymbol& b);
TorusSymbol operator*(cplx s, TorusSymbol a);

/// Samples f on a grid x grid lattice of [0,1)^2 and keeps the DFT modes with
/// |k|, |l| <= k_max. Throws GridTooCoarse when grid < 4 k_max.
TorusSymbol symbol_from_function(const TorusFunction& f, int k_max, int grid, Exec exec = Exec::Parallel);

/// Same table for a separable f(x) g(xi), computed with one-dimensional transforms.
TorusSymbol symbol_from_product(const Profile& f, const Profile& g, int k_max, int grid);

/// Weyl quantization: A_mj = sum_{k,l} a(k, j-m-lN) (-1)^{kl} exp(pi i (j+m) k / N).
ComplexMatrix op_weyl(const TorusSymbol& sym, int n, Exec exec = Exec::Parallel);

/// Left quantization f(x) g(hD) = D_f F^dagger D_g F, profiles evaluated at the
/// representatives of m/N in [-1/2, 1/2).
ComplexMatrix op_left_separable(const Profile& f, const Profile& g, int n, Exec exec = Exec::Parallel);

struct QuantizerSettings {
  int k_max = 160;
  int grid = 1024;
  double tail_tolerance = 1e-6;
};

struct CutoffSymbol {
  Profile f;
  Profile g;
  TorusSymbol symbol;
};

/// chi = rho(x) rho(xi) for a ProductBump spec.
CutoffSymbol make_trapped_symbol(const BumpSpec& spec, const QuantizerSettings& settings = {});

/// nu = (rho(x) - rho(2x)) (rho(xi) - rho(2 xi)) for an AnnulusProduct spec.
/// Throws InvalidSpec when 2 r_outer >= 1/2.
CutoffSymbol make_nontrapping_symbol(const BumpSpec& spec, const QuantizerSettings& settings = {});

struct SupportGuard {
  bool ok = false;
  double radius_limit = 0.0;    // c / (lambda |Q|^2)
  double support_radius = 0.0;  // sqrt(2) r_outer
};

SupportGuard support_guard(const BumpSpec& spec, const CatMapAnalysis& analysis, double c);

}  // namespace opencat
