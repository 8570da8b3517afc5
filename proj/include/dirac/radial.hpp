#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dirac/core.hpp"

namespace dirac {

/// Reduced two-component wavefunction (f+, f-) of one partial-wave channel,
/// sampled on a radial grid.
struct RadialSpinor {
  Channel channel;
  GridPtr grid;
  std::vector<cplx> f_plus, f_minus;

  RadialSpinor() = default;
  RadialSpinor(Channel ch, GridPtr g)
      : channel(ch), grid(std::move(g)), f_plus(grid->size()), f_minus(grid->size()) {}

  std::size_t size() const { return grid->size(); }

  /// int (|f+|^2 + |f-|^2) dr
  double norm_sq() const;
  /// int (|f+|^2 + |f-|^2) w(r) dr
  double weighted_norm_sq(const std::function<double(double)>& w) const;
};

/// First derivative of samples on an arbitrary strictly increasing grid,
/// using 5-point (4th order) Lagrange stencils, one-sided at the ends.
std::vector<cplx> derivative(const RadialGrid& grid, const std::vector<cplx>& f);

/// Channel-reduced Dirac operator
///   T_k (f+, f-) = ( (m+v) f+ + (-d/dr + k/r) f-,
///                    (d/dr + k/r) f+ + (-m+v) f- ).
/// v may be empty (free operator).
struct RadialOperator {
  int k = -1;
  std::function<double(double)> v;  // scalar radial potential, may be null
  double m = 1.0;
  double a = 0.0;

  double v_at(double r) const { return v ? v(r) : 0.0; }
};

/// Samples of (T_k - a) u on u's grid, derivatives by the 4th-order stencils.
RadialSpinor apply_radial_dirac(const RadialOperator& op, const RadialSpinor& u);

/// Thrown when the adaptive integrator's step size underflows; carries the
/// radius where it happened.
struct IntegratorError : std::runtime_error {
  double radius;
  IntegratorError(const std::string& msg, double r) : std::runtime_error(msg), radius(r) {}
};

namespace detail {
// Dormand-Prince 5(4) tableau
constexpr double dp_c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double dp_a[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double dp_b5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                             -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double dp_b4[7] = {5179.0 / 57600,  0.0,        7571.0 / 16695, 393.0 / 640,
                             -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
}  // namespace detail

/// Adaptive Dormand-Prince 5(4) for a first-order 2-component linear system
/// y' = rhs(r, y). Integrates from r0 to r1 (either direction, both positive),
/// local error per step <= tol (mixed absolute/relative). T is double or cplx.
template <class T>
std::array<T, 2> integrate_system(
    const std::function<std::array<T, 2>(double, const std::array<T, 2>&)>& rhs, double r0,
    double r1, std::array<T, 2> y, double tol) {
  using namespace detail;
  if (!(r0 > 0.0) || !(r1 > 0.0))
    throw std::invalid_argument("integrate_system: radii must be positive");
  if (r0 == r1) return y;
  const double dir = r1 > r0 ? 1.0 : -1.0;
  double r = r0;
  double h = dir * std::min(0.1 * std::abs(r1 - r0), 0.05 * r0 + 1e-8);
  std::array<T, 2> k[7];
  int rejects_in_a_row = 0;
  while (dir * (r1 - r) > 0) {
    if (dir * (r + h) > dir * r1) h = r1 - r;
    k[0] = rhs(r, y);
    for (int s = 1; s < 7; ++s) {
      std::array<T, 2> ys = y;
      for (int j = 0; j < s; ++j) {
        if (dp_a[s][j] == 0.0) continue;
        ys[0] += h * dp_a[s][j] * k[j][0];
        ys[1] += h * dp_a[s][j] * k[j][1];
      }
      k[s] = rhs(r + dp_c[s] * h, ys);
    }
    std::array<T, 2> y5 = y, err{};
    for (int s = 0; s < 7; ++s) {
      y5[0] += h * dp_b5[s] * k[s][0];
      y5[1] += h * dp_b5[s] * k[s][1];
      err[0] += h * (dp_b5[s] - dp_b4[s]) * k[s][0];
      err[1] += h * (dp_b5[s] - dp_b4[s]) * k[s][1];
    }
    const double scale =
        tol * std::max({std::abs(y[0]), std::abs(y[1]), std::abs(y5[0]), std::abs(y5[1]), 1e-290});
    const double emax = std::max(std::abs(err[0]), std::abs(err[1]));
    const double ratio = emax / scale;
    if (ratio <= 1.0) {
      r += h;
      y = y5;
      rejects_in_a_row = 0;
    } else if (++rejects_in_a_row > 60) {
      throw IntegratorError("integrate_system: repeated step rejection", r);
    }
    const double grow = ratio > 0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
    h *= std::clamp(grow, 0.2, 5.0);
    if (std::abs(h) < 1e-15 * std::max(std::abs(r), 1e-12))
      throw IntegratorError("integrate_system: step size underflow", r);
  }
  return y;
}

/// Same integrator, collecting the solution at every radius in `out_radii`
/// (must be monotone in the direction of integration; r0 <= out_radii.front()).
template <class T>
std::vector<std::array<T, 2>> integrate_collect(
    const std::function<std::array<T, 2>(double, const std::array<T, 2>&)>& rhs, double r0,
    const std::vector<double>& out_radii, std::array<T, 2> y, double tol) {
  std::vector<std::array<T, 2>> out;
  out.reserve(out_radii.size());
  double r = r0;
  for (double rq : out_radii) {
    if (rq != r) y = integrate_system<T>(rhs, r, rq, y, tol);
    r = rq;
    out.push_back(y);
  }
  return out;
}

/// Right-hand side u' = A(r) u of (T_k - a) u = 0 in first-order form:
///   f+' = -(k/r) f+ + (a + m - v) f-
///   f-' =  (m + v - a) f+ + (k/r) f-
inline std::array<double, 2> radial_rhs(const RadialOperator& op, double r,
                                        const std::array<double, 2>& y) {
  const double v = op.v_at(r);
  return {-(op.k / r) * y[0] + (op.a + op.m - v) * y[1],
          (op.m + v - op.a) * y[0] + (op.k / r) * y[1]};
}

}  // namespace dirac
