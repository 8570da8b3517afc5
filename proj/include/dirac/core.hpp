#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "dirac/smallmat.hpp"

namespace dirac {

/// Pauli matrix sigma_j, j in {1,2,3}.
Mat2 pauli(int j);

/// sigma . n for a 3-vector n (not necessarily unit).
Mat2 sigma_dot(const std::array<double, 3>& n);

/// Dirac alpha_j = offdiag(sigma_j, sigma_j), j in {1,2,3}.
Mat4 alpha(int j);

/// Dirac beta = diag(I2, -I2).
Mat4 beta();

/// alpha . n for a 3-vector n.
Mat4 alpha_dot(const std::array<double, 3>& n);

/// A partial-wave sector. k is the spin-orbit quantum number k_j = +-(j+1/2),
/// two_mj stores 2*m_j (odd). j = |k| - 1/2.
struct Channel {
  int k = -1;
  int two_mj = 1;

  Channel() = default;
  Channel(int k_, int two_mj_);

  double j() const { return std::abs(k) - 0.5; }
  int two_j() const { return 2 * std::abs(k) - 1; }
  /// Orbital degree of the upper 2-spinor of Phi^+ (also the lower of Phi^-).
  int l_upper() const { return k > 0 ? k : -k - 1; }
  /// Orbital degree of the lower 2-spinor of Phi^- (also paired with l_upper).
  int l_lower() const { return k > 0 ? k - 1 : -k; }

  friend bool operator==(const Channel&, const Channel&) = default;
};

/// All channels with |k| <= k_max (every admissible m_j).
std::vector<Channel> channels_up_to(int k_max);

/// Strictly increasing positive radial nodes with quadrature weights for
/// int_rmin^rmax f(r) dr. Weights follow the nodes' log spacing with
/// 4th-order (Gregory) end corrections so smooth integrands converge at
/// O(h^4) in the log variable.
struct RadialGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  double integrate(const std::vector<double>& f) const;
  cplx integrate(const std::vector<cplx>& f) const;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Geometric grid on [r_min, r_max] with n nodes. Requires 0 < r_min < r_max
/// and n >= 16.
GridPtr log_grid(double r_min, double r_max, std::size_t n);

/// r_max such that exp(-lambda r_max) < 1e-12, for decay rate lambda.
double suggested_rmax(double lambda);

/// Mass m, spectral parameter a in (-m, m), Coulomb strength nu in (0, 1).
struct PhysicalParams {
  double m = 1.0;
  double a = 0.0;
  double nu = 0.5;

  PhysicalParams() = default;
  PhysicalParams(double m_, double a_, double nu_);

  double lambda() const { return std::sqrt(m * m - a * a); }
};

/// Largest |eigenvalue| of a Hermitian 4x4 matrix, via the Jacobi eigensolve.
/// Throws if the input fails the Hermiticity tolerance.
double operator_norm_herm4(const Mat4& m, double herm_tol = 1e-12);

}  // namespace dirac
