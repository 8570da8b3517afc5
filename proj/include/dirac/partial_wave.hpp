#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dirac/angular.hpp"
#include "dirac/radial.hpp"

namespace dirac::pw {

using angular::AngularQuadrature;

/// Pauli 2-spinor spherical harmonic psi^{m_j}_l with l = j -+ 1/2:
///   l = j - 1/2:  (1/sqrt(2j))   ( sqrt(j+m_j)   Y_l^{m_j-1/2},
///                                  sqrt(j-m_j)   Y_l^{m_j+1/2} )
///   l = j + 1/2:  (1/sqrt(2j+2)) ( sqrt(j+1-m_j) Y_l^{m_j-1/2},
///                                 -sqrt(j+1+m_j) Y_l^{m_j+1/2} )
/// two_j and two_mj are 2j and 2m_j.
Vec2 spherical_spinor(int two_j, int two_mj, int l, const std::array<double, 3>& xhat);

/// Selects Phi^+ (sign = +1, upper components i psi) or Phi^- (sign = -1,
/// lower components psi) of a channel.
struct SpinorHarmonic {
  Channel channel;
  int sign = +1;

  SpinorHarmonic(Channel ch, int s);
};

/// The 4-spinor basis element Phi^{sign}_{m_j, k_j} at a unit direction.
Vec4 phi_basis(const SpinorHarmonic& h, const std::array<double, 3>& xhat);

/// (1 + 2 S.L) Phi = -k beta Phi, used as the defining action on the basis.
Vec4 spin_orbit_apply(const SpinorHarmonic& h, const std::array<double, 3>& xhat);

/// A 4-spinor field sampled as psi(r, xhat).
using SpinorField = std::function<Vec4(double, const std::array<double, 3>&)>;

/// Channel coefficients f^{+-}(r_i) = r_i <Phi^{+-}, psi(r_i .)>_{S^2} by
/// angular quadrature, for every requested channel.
std::vector<RadialSpinor> decompose(const SpinorField& field, const GridPtr& grid,
                                    const AngularQuadrature& quad,
                                    const std::vector<Channel>& channels);

/// Field built back from channel data: sum over channels of
/// (1/r)(f+ Phi^+ + f- Phi^-). Radii must coincide with grid nodes.
SpinorField reconstruct(std::vector<RadialSpinor> channels);

/// ||psi||^2 over grid x sphere by direct quadrature.
double field_norm_sq(const SpinorField& field, const RadialGrid& grid,
                     const AngularQuadrature& quad);

/// int w(|x|) |psi|^2 dx by direct quadrature.
double field_weighted_norm_sq(const SpinorField& field, const RadialGrid& grid,
                              const AngularQuadrature& quad,
                              const std::function<double(double)>& w);

}  // namespace dirac::pw
