#include "dirac/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac::bessel {

double mod_sph_i(int l, double z) {
  if (l < 0) throw std::invalid_argument("mod_sph_i: l must be >= 0");
  if (z < 0) throw std::invalid_argument("mod_sph_i: z must be >= 0");
  if (z == 0.0) return l == 0 ? 1.0 : 0.0;
  // i_l(z) = z^l sum_j (z^2/2)^j / (j! (2l+2j+1)!!)
  double dfact = 1.0;  // (2l+1)!!
  for (int i = 1; i <= l; ++i) dfact *= 2.0 * i + 1.0;
  double term = std::pow(z, l) / dfact;
  double sum = term;
  const double z2h = 0.5 * z * z;
  for (int j = 1; j < 2000; ++j) {
    term *= z2h / (static_cast<double>(j) * (2.0 * l + 2.0 * j + 1.0));
    sum += term;
    if (term < 1e-18 * sum) return sum;
  }
  throw std::runtime_error("mod_sph_i: series did not converge");
}

double mod_sph_k(int l, double z) {
  if (l < 0) throw std::invalid_argument("mod_sph_k: l must be >= 0");
  if (!(z > 0)) throw std::invalid_argument("mod_sph_k: z must be positive");
  const double k0 = std::exp(-z) / z;
  if (l == 0) return k0;
  double km = k0;
  double kc = k0 * (1.0 + 1.0 / z);
  for (int ll = 1; ll < l; ++ll) {
    const double kn = km + (2.0 * ll + 1.0) / z * kc;
    km = kc;
    kc = kn;
  }
  return kc;
}

}  // namespace dirac::bessel
