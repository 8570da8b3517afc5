#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dirac::lin {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  cplx* row(std::size_t i) { return a_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return a_.data() + i * cols_; }

  std::vector<cplx> matvec(const std::vector<cplx>& x) const;
  std::vector<cplx> adjoint_matvec(const std::vector<cplx>& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

/// LU factorization with partial pivoting (in place).
class LU {
 public:
  explicit LU(CMatrix a);

  /// Solve A x = b.
  std::vector<cplx> solve(std::vector<cplx> b) const;

  /// Smallest pivot magnitude relative to the largest; near zero means the
  /// matrix is numerically singular at this shift.
  double min_pivot_ratio() const { return min_pivot_ratio_; }

 private:
  CMatrix lu_;
  std::vector<std::size_t> perm_;
  double min_pivot_ratio_ = 0.0;
};

/// All eigenvalues of a general complex matrix: Householder reduction to
/// Hessenberg form followed by the shifted QR iteration (eigenvalues only).
std::vector<cplx> eigenvalues_dense(CMatrix a);

struct NearEigenReport {
  std::vector<cplx> values;        // Ritz values sorted by distance to target
  std::vector<double> residuals;   // ||K v - lambda v|| per Ritz pair
  bool converged = false;
  int iterations = 0;
};

/// Eigenvalues of K nearest to `target` by shift-invert block inverse
/// iteration with Rayleigh-Ritz extraction. `count` Ritz pairs are returned
/// (block size is count, at least 2). Deterministic for a fixed seed.
NearEigenReport eigenvalues_near(const CMatrix& k, cplx target, int count, std::uint64_t seed,
                                 int max_iter = 300, double tol = 1e-12);

/// Largest singular value by power iteration on K* K.
double largest_singular_value(const CMatrix& k, std::uint64_t seed = 7, int iters = 200);

}  // namespace dirac::lin
