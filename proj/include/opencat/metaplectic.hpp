#pragma once

// Quantized SL(2, Z) maps on H_N, assembled from generators with closed-form
// quantizations. Only even N is supported.

#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "opencat/catmap.hpp"
#include "opencat/hn_space.hpp"
#include "opencat/matrix.hpp"
#include "opencat/quantizer.hpp"

namespace opencat {

enum class LetterKind { S, SInv, U, L, Par };

/// S = [[0,-1],[1,0]], U(b) = [[1,b],[0,1]], L(c) = [[1,0],[c,1]], Par = -I.
struct Letter {
  LetterKind kind = LetterKind::S;
  std::int64_t param = 0;  // b for U, c for L

  static Letter s() { return {LetterKind::S, 0}; }
  static Letter s_inv() { return {LetterKind::SInv, 0}; }
  static Letter u(std::int64_t b) { return {LetterKind::U, b}; }
  static Letter l(std::int64_t c) { return {LetterKind::L, c}; }
  static Letter par() { return {LetterKind::Par, 0}; }

  CatMap matrix() const;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GeneratorWord {
  std::vector<Letter> letters;

  /// Ordered product of the letters' matrices, exact.
  CatMap product() const;
};

/// Euclidean factorization of a determinant-one integer matrix. Throws
/// NotUnimodular otherwise.
GeneratorWord factor_sl2z(const CatMap& m);

enum class PhaseMode { None, LeadingRealPositive };

struct MetaplecticOptions {
  /// Global phase attached to the quantized S. Irrelevant after phase
  /// normalization.
  double omega_s_phase = -std::numbers::pi / 4.0;
  DftSign dft_sign = DftSign::Standard;
};

/// Quantized generator. S maps to omega * F^dagger, L(c) to
/// diag(exp(i pi c m^2 / N)), U(b) to F^dagger diag(exp(-i pi b m^2 / N)) F
/// and Par to Q_m -> Q_{-m mod N}. Throws OddDimension for odd n.
ComplexMatrix quantize_generator(const Letter& letter, int n, const MetaplecticOptions& opts = {});

/// Product of the quantized letters in word order.
ComplexMatrix quantize_word(const GeneratorWord& word, int n, const MetaplecticOptions& opts = {});

/// Unimodular factor that rotates the largest-modulus eigenvalue of op onto
/// the positive real axis. Throws DegeneratePhase when that eigenvalue is
/// below 1e-12 in modulus.
cplx leading_phase(const ComplexMatrix& op);

/// Quantized map, optionally phase-normalized against the open operator
/// chi * M. chi is required for LeadingRealPositive.
ComplexMatrix quantize_map(const CatMap& m, int n, PhaseMode phase = PhaseMode::None,
                           const ComplexMatrix* chi = nullptr, const MetaplecticOptions& opts = {});

/// max |Op(a o M) - M^dagger Op(a) M| using the word's quantization. A
/// capacity of 0 sizes the composed table from the map's entries.
double egorov_residual(const GeneratorWord& word, const TorusSymbol& sym, int n, const MetaplecticOptions& opts = {},
                       int capacity = 0);
double egorov_residual(const CatMap& m, const TorusSymbol& sym, int n, const MetaplecticOptions& opts = {});

}  // namespace opencat
