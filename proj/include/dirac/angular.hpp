#pragma once

#include <array>
#include <vector>

#include "dirac/smallmat.hpp"

namespace dirac::angular {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule, exact for polynomials of degree 2n - 1.
GaussLegendre gauss_legendre(std::size_t n);

/// Associated Legendre P_l^m(x) for m >= 0, with the Condon-Shortley phase
/// (-1)^m built in.
double assoc_legendre(int l, int m, double x);

/// Complex spherical harmonic Y_l^m(theta, phi), Condon-Shortley convention,
/// orthonormal on the sphere. Valid for |m| <= l.
cplx sph_harm(int l, int m, double theta, double phi);

/// Y_l^m at a unit direction.
cplx sph_harm(int l, int m, const std::array<double, 3>& xhat);

struct QuadNode {
  std::array<double, 3> xhat;
  double theta, phi;
  double w;
};

/// Product quadrature on the unit sphere: Gauss-Legendre in cos(theta) x
/// uniform in phi. Exact for products of spherical harmonics up to degree
/// l_max each; weights sum to 4 pi.
struct AngularQuadrature {
  std::vector<QuadNode> nodes;
  int l_max = 0;
};

AngularQuadrature sphere_quadrature(int l_max);

inline std::array<double, 3> unit_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace dirac::angular
