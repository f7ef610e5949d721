#ifndef FIERZMD_LINALG_HPP
#define FIERZMD_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace fierzmd {

using cplx = std::complex<double>;
inline constexpr cplx iu{0.0, 1.0};

// Minkowski metric diag(+,-,-,-); eta(mu) is the diagonal entry.
inline constexpr double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

struct Vec4 {
  std::array<double, 4> c{};

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec4 operator+(const Vec4& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
  }
  Vec4 operator-(const Vec4& o) const {
    return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
  }
  Vec4 operator*(double s) const { return {{c[0] * s, c[1] * s, c[2] * s, c[3] * s}}; }
};

struct CVec4 {
  std::array<cplx, 4> c{};

  cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  cplx operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  CVec4 operator+(const CVec4& o) const {
    return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
  }
  CVec4 operator-(const CVec4& o) const {
    return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
  }
  CVec4 operator*(cplx s) const { return {{c[0] * s, c[1] * s, c[2] * s, c[3] * s}}; }

  Vec4 real() const {
    return {{c[0].real(), c[1].real(), c[2].real(), c[3].real()}};
  }
  double max_abs_imag() const {
    double m = 0;
    for (auto& v : c) m = std::max(m, std::abs(v.imag()));
    return m;
  }
  double max_abs() const {
    double m = 0;
    for (auto& v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

inline CVec4 to_cvec(const Vec4& v) { return {{v[0], v[1], v[2], v[3]}}; }

// Index lowering/raising with diag(+,-,-,-).
template <typename V>
inline V lower(const V& v) {
  V r = v;
  for (int mu = 0; mu < 4; ++mu) r[mu] = v[mu] * eta(mu);
  return r;
}
template <typename V>
inline V raise(const V& v) { return lower(v); }

inline cplx dot_lorentz(const CVec4& a, const CVec4& b) {
  cplx s = 0;
  for (int mu = 0; mu < 4; ++mu) s += eta(mu) * a[mu] * b[mu];
  return s;
}
inline double dot_lorentz(const Vec4& a, const Vec4& b) {
  double s = 0;
  for (int mu = 0; mu < 4; ++mu) s += eta(mu) * a[mu] * b[mu];
  return s;
}

// Dense 4x4 complex matrix, row-major.
struct Matrix4c {
  std::array<cplx, 16> e{};

  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  cplx operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  static Matrix4c zero() { return {}; }
  static Matrix4c identity() {
    Matrix4c m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  Matrix4c operator+(const Matrix4c& o) const {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Matrix4c operator-(const Matrix4c& o) const {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  Matrix4c operator-() const {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = -e[i];
    return r;
  }
  Matrix4c operator*(cplx s) const {
    Matrix4c r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] * s;
    return r;
  }
  Matrix4c operator*(const Matrix4c& o) const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const cplx a = (*this)(i, k);
        if (a == cplx{}) continue;
        for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix4c transpose() const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  Matrix4c adjoint() const {
    Matrix4c r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  CVec4 operator*(const CVec4& v) const {
    CVec4 r;
    for (int i = 0; i < 4; ++i) {
      cplx s = 0;
      for (int j = 0; j < 4; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  double max_abs() const {
    double m = 0;
    for (auto& v : e) m = std::max(m, std::abs(v));
    return m;
  }

  // Gauss-Jordan with partial pivoting.
  Matrix4c inverse() const {
    Matrix4c a = *this;
    Matrix4c inv = identity();
    for (int col = 0; col < 4; ++col) {
      int piv = col;
      for (int r = col + 1; r < 4; ++r)
        if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
      if (std::abs(a(piv, col)) < 1e-300)
        throw std::domain_error("Matrix4c::inverse: singular matrix");
      if (piv != col)
        for (int j = 0; j < 4; ++j) {
          std::swap(a.e[static_cast<std::size_t>(4 * piv + j)], a.e[static_cast<std::size_t>(4 * col + j)]);
          std::swap(inv.e[static_cast<std::size_t>(4 * piv + j)], inv.e[static_cast<std::size_t>(4 * col + j)]);
        }
      const cplx d = a(col, col);
      for (int j = 0; j < 4; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (int r = 0; r < 4; ++r) {
        if (r == col) continue;
        const cplx f = a(r, col);
        if (f == cplx{}) continue;
        for (int j = 0; j < 4; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }
};

inline Matrix4c operator*(cplx s, const Matrix4c& m) { return m * s; }

inline double max_abs_diff(const Matrix4c& a, const Matrix4c& b) {
  return (a - b).max_abs();
}

// Real 4x4 matrix for Lorentz generators and tetrads.
struct Mat4d {
  std::array<double, 16> e{};

  double& operator()(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  double operator()(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  static Mat4d zero() { return {}; }
  static Mat4d identity() {
    Mat4d m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  Mat4d operator+(const Mat4d& o) const {
    Mat4d r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Mat4d operator-(const Mat4d& o) const {
    Mat4d r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }
  Mat4d operator*(double s) const {
    Mat4d r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] * s;
    return r;
  }
  Mat4d operator*(const Mat4d& o) const {
    Mat4d r;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const double a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < 4; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Vec4 operator*(const Vec4& v) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
      double s = 0;
      for (int j = 0; j < 4; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
  double max_abs() const {
    double m = 0;
    for (auto& v : e) m = std::max(m, std::abs(v));
    return m;
  }
};

inline Mat4d operator*(double s, const Mat4d& m) { return m * s; }

}  // namespace fierzmd

#endif
