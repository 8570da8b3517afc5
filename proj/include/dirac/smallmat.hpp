#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace dirac {

using cplx = std::complex<double>;

/// Fixed-size complex vector (N = 2 for Pauli spinors, N = 4 for Dirac spinors).
template <std::size_t N>
struct CVec {
  std::array<cplx, N> c{};

  cplx& operator[](std::size_t i) { return c[i]; }
  const cplx& operator[](std::size_t i) const { return c[i]; }

  CVec& operator+=(const CVec& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  CVec& operator-=(const CVec& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  CVec& operator*=(cplx s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  friend CVec operator+(CVec a, const CVec& b) { return a += b; }
  friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
  friend CVec operator*(cplx s, CVec v) { return v *= s; }
  friend CVec operator*(CVec v, cplx s) { return v *= s; }
};

/// Inner product, conjugate-linear in the first argument.
template <std::size_t N>
cplx dot(const CVec<N>& a, const CVec<N>& b) {
  cplx s = 0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double norm(const CVec<N>& v) {
  return std::sqrt(std::real(dot(v, v)));
}

/// Fixed-size complex matrix, row-major.
template <std::size_t N>
struct CMat {
  std::array<cplx, N * N> a{};

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  CMat& operator+=(const CMat& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] += o.a[i];
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] -= o.a[i];
    return *this;
  }
  CMat& operator*=(cplx s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend CMat operator+(CMat x, const CMat& y) { return x += y; }
  friend CMat operator-(CMat x, const CMat& y) { return x -= y; }
  friend CMat operator*(cplx s, CMat m) { return m *= s; }
  friend CMat operator*(CMat m, cplx s) { return m *= s; }

  friend CMat operator*(const CMat& x, const CMat& y) {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx xik = x(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend CVec<N> operator*(const CMat& m, const CVec<N>& v) {
    CVec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
      cplx s = 0;
      for (std::size_t j = 0; j < N; ++j) s += m(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
};

template <std::size_t N>
CMat<N> adjoint(const CMat<N>& m) {
  CMat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <std::size_t N>
double max_abs(const CMat<N>& m) {
  double v = 0;
  for (const auto& x : m.a) v = std::max(v, std::abs(x));
  return v;
}

/// max |M - M†| entrywise; zero for exactly Hermitian input.
template <std::size_t N>
double hermiticity_defect(const CMat<N>& m) {
  return max_abs(m - adjoint(m));
}

using Vec2 = CVec<2>;
using Vec4 = CVec<4>;
using Mat2 = CMat<2>;
using Mat4 = CMat<4>;

/// Assemble a 4x4 matrix from 2x2 blocks [[a, b], [c, d]].
inline Mat4 blocks(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

/// Stack two 2-spinors into a 4-spinor (upper; lower).
inline Vec4 stack(const Vec2& up, const Vec2& lo) {
  return Vec4{{up[0], up[1], lo[0], lo[1]}};
}

inline Vec2 upper(const Vec4& v) { return Vec2{{v[0], v[1]}}; }
inline Vec2 lower(const Vec4& v) { return Vec2{{v[2], v[3]}}; }

template <std::size_t N>
struct HermEigen {
  std::array<double, N> values{};  // ascending
  CMat<N> vectors;                 // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian N x N matrix by cyclic complex Jacobi
/// rotations. Self-contained; intended for the fixed tiny sizes used here.
template <std::size_t N>
HermEigen<N> hermitian_eigen(CMat<N> m, double tol = 1e-15) {
  CMat<N> v = CMat<N>::identity();
  const double scale = std::max(max_abs(m), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off <= tol * scale) break;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx apq = m(p, q);
        const double beta = std::abs(apq);
        if (beta <= tol * scale * 1e-2) continue;
        const cplx phase = apq / beta;
        const double app = std::real(m(p, p));
        const double aqq = std::real(m(q, q));
        // zero m(p,q): tan(2 theta) = 2 beta / (app - aqq)
        const double tau = (app - aqq) / (2.0 * beta);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * cth * phase;  // complex sine carries the phase of a_pq
        // columns: [p q] <- [p q] * [[c, -s],[conj(s), c]]  (right-multiply)
        for (std::size_t i = 0; i < N; ++i) {
          const cplx mip = m(i, p), miq = m(i, q);
          m(i, p) = cth * mip + std::conj(s) * miq;
          m(i, q) = -s * mip + cth * miq;
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = cth * vip + std::conj(s) * viq;
          v(i, q) = -s * vip + cth * viq;
        }
        // rows: conjugate-transpose action
        for (std::size_t j = 0; j < N; ++j) {
          const cplx mpj = m(p, j), mqj = m(q, j);
          m(p, j) = cth * mpj + s * mqj;
          m(q, j) = -std::conj(s) * mpj + cth * mqj;
        }
      }
  }
  HermEigen<N> out;
  for (std::size_t i = 0; i < N; ++i) out.values[i] = std::real(m(i, i));
  out.vectors = v;
  // sort ascending, carrying columns
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (out.values[j] < out.values[i]) {
        std::swap(out.values[i], out.values[j]);
        for (std::size_t r = 0; r < N; ++r) std::swap(out.vectors(r, i), out.vectors(r, j));
      }
  return out;
}

}  // namespace dirac
