#include "dirac/angular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dirac::angular {

namespace {
constexpr double pi = std::numbers::pi;
}

GaussLegendre gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  // Newton iteration from the Chebyshev-like initial guess; symmetric rule.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / static_cast<double>(l);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw std::invalid_argument("assoc_legendre: need 0 <= m <= l");
  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / static_cast<double>(ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

cplx sph_harm(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw std::invalid_argument("sph_harm: need |m| <= l");
  const int am = std::abs(m);
  double lognum = 0.0;  // (l-|m|)! / (l+|m|)!
  for (int i = l - am + 1; i <= l + am; ++i) lognum += std::log(static_cast<double>(i));
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * pi) * std::exp(-lognum));
  const double p = assoc_legendre(l, am, std::cos(theta));
  cplx y = norm * p * std::exp(cplx(0.0, am * phi));
  if (m < 0) y = std::conj(y) * ((am % 2 == 0) ? 1.0 : -1.0);
  return y;
}

cplx sph_harm(int l, int m, const std::array<double, 3>& xhat) {
  const double theta = std::acos(std::clamp(xhat[2], -1.0, 1.0));
  const double phi = std::atan2(xhat[1], xhat[0]);
  return sph_harm(l, m, theta, phi);
}

AngularQuadrature sphere_quadrature(int l_max) {
  if (l_max < 0) throw std::invalid_argument("sphere_quadrature: l_max must be >= 0");
  AngularQuadrature q;
  q.l_max = l_max;
  const std::size_t n_theta = static_cast<std::size_t>(l_max) + 2;
  const std::size_t n_phi = 2 * static_cast<std::size_t>(l_max) + 4;
  const auto gl = gauss_legendre(n_theta);
  const double wphi = 2.0 * pi / static_cast<double>(n_phi);
  q.nodes.reserve(n_theta * n_phi);
  for (std::size_t it = 0; it < n_theta; ++it) {
    const double ct = gl.nodes[it];
    const double theta = std::acos(ct);
    for (std::size_t ip = 0; ip < n_phi; ++ip) {
      const double phi = wphi * (static_cast<double>(ip) + 0.5);
      QuadNode node;
      node.theta = theta;
      node.phi = phi;
      node.xhat = unit_from_angles(theta, phi);
      node.w = gl.weights[it] * wphi;
      q.nodes.push_back(node);
    }
  }
  return q;
}

}  // namespace dirac::angular
