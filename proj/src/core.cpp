#include "dirac/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac {

namespace {
const cplx I{0.0, 1.0};
}

Mat2 pauli(int j) {
  Mat2 s;
  switch (j) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -I;
      s(1, 0) = I;
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

Mat2 sigma_dot(const std::array<double, 3>& n) {
  Mat2 m;
  m(0, 0) = n[2];
  m(0, 1) = cplx(n[0], -n[1]);
  m(1, 0) = cplx(n[0], n[1]);
  m(1, 1) = -n[2];
  return m;
}

Mat4 alpha(int j) {
  const Mat2 s = pauli(j);
  return blocks(Mat2{}, s, s, Mat2{});
}

Mat4 beta() {
  Mat4 b;
  b(0, 0) = b(1, 1) = 1.0;
  b(2, 2) = b(3, 3) = -1.0;
  return b;
}

Mat4 alpha_dot(const std::array<double, 3>& n) {
  const Mat2 s = sigma_dot(n);
  return blocks(Mat2{}, s, s, Mat2{});
}

Channel::Channel(int k_, int two_mj_) : k(k_), two_mj(two_mj_) {
  if (k == 0) throw std::invalid_argument("Channel: k must be nonzero");
  if (two_mj % 2 == 0) throw std::invalid_argument("Channel: two_mj must be odd");
  if (std::abs(two_mj) > 2 * std::abs(k) - 1)
    throw std::invalid_argument("Channel: |m_j| must not exceed j = |k| - 1/2");
}

std::vector<Channel> channels_up_to(int k_max) {
  std::vector<Channel> out;
  for (int ak = 1; ak <= k_max; ++ak)
    for (int k : {-ak, ak})
      for (int tm = -(2 * ak - 1); tm <= 2 * ak - 1; tm += 2) out.emplace_back(k, tm);
  return out;
}

double RadialGrid::integrate(const std::vector<double>& f) const {
  if (f.size() != nodes.size()) throw std::invalid_argument("integrate: length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += weights[i] * f[i];
  return s;
}

cplx RadialGrid::integrate(const std::vector<cplx>& f) const {
  if (f.size() != nodes.size()) throw std::invalid_argument("integrate: length mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += weights[i] * f[i];
  return s;
}

GridPtr log_grid(double r_min, double r_max, std::size_t n) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument("log_grid: need 0 < r_min < r_max");
  if (n < 16) throw std::invalid_argument("log_grid: need n >= 16");

  auto g = std::make_shared<RadialGrid>();
  g->nodes.resize(n);
  g->weights.resize(n);
  const double h = std::log(r_max / r_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    g->nodes[i] = r_min * std::exp(h * static_cast<double>(i));
  g->nodes[n - 1] = r_max;

  // int f dr = int f(e^t) e^t dt; composite trapezoid in t with 4th-order
  // Gregory end corrections (3/8, 7/6, 23/24).
  for (std::size_t i = 0; i < n; ++i) g->weights[i] = 1.0;
  g->weights[0] = g->weights[n - 1] = 3.0 / 8.0;
  g->weights[1] = g->weights[n - 2] = 7.0 / 6.0;
  g->weights[2] = g->weights[n - 3] = 23.0 / 24.0;
  for (std::size_t i = 0; i < n; ++i) g->weights[i] *= h * g->nodes[i];
  return g;
}

double suggested_rmax(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("suggested_rmax: lambda must be positive");
  return 28.0 / lambda;  // exp(-28) ~ 7e-13
}

PhysicalParams::PhysicalParams(double m_, double a_, double nu_) : m(m_), a(a_), nu(nu_) {
  if (!(m > 0.0)) throw std::invalid_argument("PhysicalParams: m must be positive");
  if (!(std::abs(a) < m)) throw std::invalid_argument("PhysicalParams: need |a| < m");
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("PhysicalParams: need 0 < nu < 1");
}

double operator_norm_herm4(const Mat4& m, double herm_tol) {
  const double defect = hermiticity_defect(m);
  if (defect > herm_tol * std::max(1.0, max_abs(m)))
    throw std::invalid_argument("operator_norm_herm4: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  // symmetrize roundoff before the eigensolve
  Mat4 h = m;
  h += adjoint(m);
  h *= 0.5;
  const auto eig = hermitian_eigen(h);
  return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
}

}  // namespace dirac
