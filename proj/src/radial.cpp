#include "dirac/radial.hpp"

#include <algorithm>
#include <cmath>

namespace dirac {

double RadialSpinor::norm_sq() const {
  double s = 0;
  for (std::size_t i = 0; i < size(); ++i)
    s += grid->weights[i] * (std::norm(f_plus[i]) + std::norm(f_minus[i]));
  return s;
}

double RadialSpinor::weighted_norm_sq(const std::function<double(double)>& w) const {
  double s = 0;
  for (std::size_t i = 0; i < size(); ++i)
    s += grid->weights[i] * w(grid->nodes[i]) * (std::norm(f_plus[i]) + std::norm(f_minus[i]));
  return s;
}

namespace {

// Fornberg weights for the first derivative at x0 from the 5 abscissae xs.
std::array<double, 5> fd_weights(double x0, const std::array<double, 5>& xs) {
  // B. Fornberg, "Generation of finite difference formulas on arbitrarily
  // spaced grids", Math. Comp. 51 (1988). Specialized to m = 1, n = 5.
  constexpr int nn = 5, mm = 1;
  double c[nn][mm + 1] = {};
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < nn; ++i) {
    const int mn = std::min(i, mm);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s) c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s) c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return {c[0][1], c[1][1], c[2][1], c[3][1], c[4][1]};
}

}  // namespace

std::vector<cplx> derivative(const RadialGrid& grid, const std::vector<cplx>& f) {
  const std::size_t n = grid.size();
  if (f.size() != n) throw std::invalid_argument("derivative: length mismatch");
  if (n < 5) throw std::invalid_argument("derivative: need at least 5 nodes");
  std::vector<cplx> df(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = std::min(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(i) - 2),
                                    static_cast<std::ptrdiff_t>(n - 5));
    std::array<double, 5> xs;
    for (int j = 0; j < 5; ++j) xs[j] = grid.nodes[lo + j];
    const auto w = fd_weights(grid.nodes[i], xs);
    cplx s = 0;
    for (int j = 0; j < 5; ++j) s += w[j] * f[lo + j];
    df[i] = s;
  }
  return df;
}

RadialSpinor apply_radial_dirac(const RadialOperator& op, const RadialSpinor& u) {
  if (op.k != u.channel.k)
    throw std::invalid_argument("apply_radial_dirac: operator/channel k mismatch");
  RadialSpinor out(u.channel, u.grid);
  const auto dfp = derivative(*u.grid, u.f_plus);
  const auto dfm = derivative(*u.grid, u.f_minus);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = u.grid->nodes[i];
    const double v = op.v_at(r);
    const double kr = op.k / r;
    out.f_plus[i] = (op.m + v - op.a) * u.f_plus[i] - dfm[i] + kr * u.f_minus[i];
    out.f_minus[i] = dfp[i] + kr * u.f_plus[i] + (-op.m + v - op.a) * u.f_minus[i];
  }
  return out;
}

}  // namespace dirac
