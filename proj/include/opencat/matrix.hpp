#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace opencat {

using cplx = std::complex<double>;

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path kept for testing and benchmarking; both produce identical results.
enum class Exec { Serial, Parallel };

/// Dense row-major complex matrix. Used for every operator on H_N.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit ComplexMatrix(std::size_t n) : ComplexMatrix(n, n) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cplx> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cplx> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  bool all_finite() const;

  ComplexMatrix& operator*=(cplx s);
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);

/// Matrix product. The parallel path splits output rows across threads; every
/// entry is accumulated in the same order on both paths, so results are
/// bitwise identical for any thread count.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b, Exec exec = Exec::Parallel);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cplx> apply(const ComplexMatrix& a, std::span<const cplx> v);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Max-norm distance to the identity.
double distance_to_identity(const ComplexMatrix& a);

}  // namespace opencat
