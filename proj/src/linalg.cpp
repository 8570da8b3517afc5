#include "dirac/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dirac::lin {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<cplx> CMatrix::matvec(const std::vector<cplx>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<cplx> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const cplx* r = row(i);
    cplx s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<cplx> CMatrix::adjoint_matvec(const std::vector<cplx>& x) const {
  if (x.size() != rows_) throw std::invalid_argument("adjoint_matvec: dimension mismatch");
  std::vector<cplx> y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const cplx* r = row(i);
    const cplx xi = std::conj(x[i]);
    for (std::size_t j = 0; j < cols_; ++j) y[j] += std::conj(r[j]) * xi;
  }
  for (auto& v : y) v = std::conj(v);
  return y;
}

LU::LU(CMatrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.rows();
  if (n != lu_.cols()) throw std::invalid_argument("LU: matrix must be square");
  perm_.resize(n);
  double max_pivot = 0.0, min_pivot = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    perm_[k] = piv;
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
    const cplx pivot = lu_(k, k);
    const double ap = std::abs(pivot);
    max_pivot = std::max(max_pivot, ap);
    min_pivot = (min_pivot < 0) ? ap : std::min(min_pivot, ap);
    if (ap == 0.0) continue;  // singular; solves will blow up, callers check min_pivot_ratio
    const cplx inv = 1.0 / pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx lik = lu_(i, k) * inv;
      lu_(i, k) = lik;
      if (lik == 0.0) continue;
      cplx* ri = lu_.row(i);
      const cplx* rk = lu_.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= lik * rk[j];
    }
  }
  min_pivot_ratio_ = max_pivot > 0 ? min_pivot / max_pivot : 0.0;
}

std::vector<cplx> LU::solve(std::vector<cplx> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw std::invalid_argument("LU::solve: dimension mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    if (perm_[k] != k) std::swap(b[k], b[perm_[k]]);
    const cplx bk = b[k];
    if (bk == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu_(i, k) * bk;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    const cplx* r = lu_.row(ii);
    cplx s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= r[j] * b[j];
    b[ii] = s / r[ii];
  }
  return b;
}

namespace {

// Householder reduction to upper Hessenberg form (in place, values only).
void hessenberg(CMatrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double scale = 0;
    for (std::size_t i = k + 1; i < n; ++i) scale += std::norm(a(i, k));
    scale = std::sqrt(scale);
    if (scale == 0.0) continue;
    const cplx x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    const cplx phase = ax0 > 0 ? x0 / ax0 : cplx(1.0);
    const cplx alpha = -phase * scale;
    // v = x - alpha e1, normalized
    double vnorm2 = 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double inv = 2.0 / vnorm2;
    // A <- (I - inv v v*) A
    for (std::size_t j = k; j < n; ++j) {
      cplx s = 0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= inv;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
    }
    // A <- A (I - inv v v*)
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(v[j]);
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

struct Givens {
  double c;
  cplx s;
};

// G * (a, b)^T = (r, 0)^T with G = [[c, s], [-conj(s), c]], c real.
Givens make_givens(cplx a, cplx b) {
  const double aa = std::abs(a), ab = std::abs(b);
  if (ab == 0.0) return {1.0, 0.0};
  if (aa == 0.0) return {0.0, 1.0};
  const double rho = std::hypot(aa, ab);
  return {aa / rho, std::conj(b) * (a / aa) / rho};
}

// Eigenvalues of [[a, b], [c, d]].
std::pair<cplx, cplx> eig2(cplx a, cplx b, cplx c, cplx d) {
  const cplx tr = a + d;
  const cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

}  // namespace

std::vector<cplx> eigenvalues_dense(CMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("eigenvalues_dense: matrix must be square");
  std::vector<cplx> eigs(n);
  if (n == 0) return eigs;
  if (n == 1) return {a(0, 0)};
  hessenberg(a);

  std::size_t hi = n - 1;  // active block is rows/cols [0..hi]
  long iter_since_deflation = 0;
  const long max_total = 60 * static_cast<long>(n);
  long total = 0;
  std::vector<Givens> rot(n);
  while (true) {
    // deflate tiny subdiagonals
    while (hi > 0) {
      const double s = std::abs(a(hi - 1, hi - 1)) + std::abs(a(hi, hi));
      if (std::abs(a(hi, hi - 1)) <= 1e-16 * std::max(s, 1e-300)) {
        a(hi, hi - 1) = 0.0;
        eigs[hi] = a(hi, hi);
        --hi;
        iter_since_deflation = 0;
      } else {
        break;
      }
    }
    if (hi == 0) {
      eigs[0] = a(0, 0);
      break;
    }
    // find the start of the active unreduced block
    std::size_t lo = hi;
    while (lo > 0) {
      const double s = std::abs(a(lo - 1, lo - 1)) + std::abs(a(lo, lo));
      if (std::abs(a(lo, lo - 1)) <= 1e-16 * std::max(s, 1e-300)) {
        a(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) continue;  // deflated above

    if (++total > max_total)
      throw std::runtime_error("eigenvalues_dense: QR iteration failed to converge");

    // Wilkinson shift from the trailing 2x2, exceptional shift now and then
    cplx shift;
    if (++iter_since_deflation % 25 == 0) {
      shift = a(hi, hi) + std::abs(a(hi, hi - 1));
    } else {
      auto [e1, e2] = eig2(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi));
      shift = (std::abs(e1 - a(hi, hi)) < std::abs(e2 - a(hi, hi))) ? e1 : e2;
    }

    // QR step on the active block: H - shift = QR, H <- RQ + shift
    for (std::size_t i = lo; i <= hi; ++i) a(i, i) -= shift;
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = make_givens(a(i, i), a(i + 1, i));
      rot[i] = g;
      for (std::size_t j = i; j <= hi; ++j) {
        const cplx t1 = a(i, j), t2 = a(i + 1, j);
        a(i, j) = g.c * t1 + g.s * t2;
        a(i + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = rot[i];
      const std::size_t top = lo;
      for (std::size_t r = top; r <= std::min(i + 1, hi); ++r) {
        const cplx t1 = a(r, i), t2 = a(r, i + 1);
        a(r, i) = g.c * t1 + std::conj(g.s) * t2;
        a(r, i + 1) = -g.s * t1 + g.c * t2;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) a(i, i) += shift;
  }
  return eigs;
}

namespace {

// Modified Gram-Schmidt on the columns of v (n x q, column-major storage).
void orthonormalize(std::vector<std::vector<cplx>>& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      cplx proj = 0;
      for (std::size_t r = 0; r < v[j].size(); ++r) proj += std::conj(v[i][r]) * v[j][r];
      for (std::size_t r = 0; r < v[j].size(); ++r) v[j][r] -= proj * v[i][r];
    }
    double nrm = 0;
    for (const auto& x : v[j]) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-280) {  // degenerate start vector; re-seed deterministically
      std::mt19937_64 rng(12345 + j);
      std::normal_distribution<double> dist;
      for (auto& x : v[j]) x = cplx(dist(rng), dist(rng));
      double n2 = 0;
      for (const auto& x : v[j]) n2 += std::norm(x);
      nrm = std::sqrt(n2);
    }
    for (auto& x : v[j]) x /= nrm;
  }
}

}  // namespace

NearEigenReport eigenvalues_near(const CMatrix& k, cplx target, int count, std::uint64_t seed,
                                 int max_iter, double tol) {
  const std::size_t n = k.rows();
  if (n != k.cols()) throw std::invalid_argument("eigenvalues_near: matrix must be square");
  const int q = std::min<std::size_t>(std::max(count, 2), n);

  CMatrix shifted = k;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= target;
  LU lu(std::move(shifted));
  if (lu.min_pivot_ratio() < 1e-300) {
    // target is (numerically) an exact eigenvalue; nudge the shift
    CMatrix s2 = k;
    const cplx nudged = target + cplx(1e-12, 1e-13);
    for (std::size_t i = 0; i < n; ++i) s2(i, i) -= nudged;
    lu = LU(std::move(s2));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<std::vector<cplx>> v(q, std::vector<cplx>(n));
  for (auto& col : v)
    for (auto& x : col) x = cplx(dist(rng), dist(rng));
  orthonormalize(v);

  NearEigenReport rep;
  std::vector<cplx> prev;
  for (int it = 0; it < max_iter; ++it) {
    for (auto& col : v) col = lu.solve(std::move(col));
    orthonormalize(v);
    rep.iterations = it + 1;

    // Rayleigh-Ritz on the current block
    std::vector<std::vector<cplx>> kv(q);
    for (int j = 0; j < q; ++j) kv[j] = k.matvec(v[j]);
    CMatrix b(q, q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        cplx s = 0;
        for (std::size_t r = 0; r < n; ++r) s += std::conj(v[i][r]) * kv[j][r];
        b(i, j) = s;
      }
    auto ritz = eigenvalues_dense(b);
    std::sort(ritz.begin(), ritz.end(),
              [&](cplx x, cplx y) { return std::abs(x - target) < std::abs(y - target); });
    if (!prev.empty()) {
      double change = 0, scale = 0;
      for (int i = 0; i < q; ++i) {
        change = std::max(change, std::abs(ritz[i] - prev[i]));
        scale = std::max(scale, std::abs(ritz[i] - target));
      }
      if (change <= tol * std::max(scale, 1e-9)) {
        rep.values = ritz;
        rep.converged = true;
        break;
      }
    }
    prev = ritz;
    rep.values = ritz;
  }

  // residuals via one inverse-iteration refinement per Ritz value
  rep.residuals.assign(rep.values.size(), 0.0);
  for (std::size_t j = 0; j < rep.values.size() && j < v.size(); ++j) {
    const auto& x = v[j];
    // Rayleigh quotient of the j-th basis vector is not the Ritz pair itself;
    // use the best-matching Ritz value for the residual estimate.
    auto kx = k.matvec(x);
    cplx lam = 0;
    for (std::size_t r = 0; r < n; ++r) lam += std::conj(x[r]) * kx[r];
    double res = 0;
    for (std::size_t r = 0; r < n; ++r) res += std::norm(kx[r] - lam * x[r]);
    rep.residuals[j] = std::sqrt(res);
  }
  return rep;
}

double largest_singular_value(const CMatrix& k, std::uint64_t seed, int iters) {
  const std::size_t n = k.cols();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<cplx> x(n);
  for (auto& v : x) v = cplx(dist(rng), dist(rng));
  double sigma = 0;
  for (int it = 0; it < iters; ++it) {
    auto y = k.adjoint_matvec(k.matvec(x));
    double nrm = 0;
    for (const auto& v : y) nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return 0.0;
    const double new_sigma = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / nrm;
    if (it > 10 && std::abs(new_sigma - sigma) <= 1e-12 * new_sigma) {
      sigma = new_sigma;
      break;
    }
    sigma = new_sigma;
  }
  return sigma;
}

}  // namespace dirac::lin
