#pragma once

namespace dirac::bessel {

/// Modified spherical Bessel function of the first kind, i_l(z).
/// i_0(z) = sinh(z)/z. Evaluated by its (all-positive) power series.
double mod_sph_i(int l, double z);

/// Modified spherical Bessel function of the second kind in the
/// exponential normalization k_0(z) = exp(-z)/z (no pi/2 factor).
/// Upward recurrence k_{l+1} = k_{l-1} + (2l+1)/z k_l.
double mod_sph_k(int l, double z);

}  // namespace dirac::bessel
