#ifndef FIERZMD_JETS_HPP
#define FIERZMD_JETS_HPP

#include <array>
#include <cmath>
#include <stdexcept>

#include "fierzmd/linalg.hpp"

namespace fierzmd {

// Bivariate truncated Taylor expansion (variables t, u) to total order 4.
// Coefficient c[i][j] multiplies dt^i du^j, so the mixed derivative
// d^{i+j} f / dt^i du^j equals c[i][j] * i! * j!.
class Jet2 {
 public:
  static constexpr int kOrder = 4;
  std::array<std::array<cplx, kOrder + 1>, kOrder + 1> c{};

  Jet2() = default;
  explicit Jet2(cplx v) { c[0][0] = v; }

  static Jet2 konst(cplx v) { return Jet2(v); }
  static Jet2 var_t(cplx t0) {
    Jet2 j(t0);
    j.c[1][0] = 1.0;
    return j;
  }
  static Jet2 var_u(cplx u0) {
    Jet2 j(u0);
    j.c[0][1] = 1.0;
    return j;
  }

  cplx value() const { return c[0][0]; }

  // d^{a+b} / dt^a du^b at the expansion point.
  cplx deriv(int a, int b) const {
    double f = 1.0;
    for (int k = 2; k <= a; ++k) f *= k;
    for (int k = 2; k <= b; ++k) f *= k;
    return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * f;
  }

  // Jet of the t-derivative; valid one order lower.
  Jet2 dt() const {
    Jet2 r;
    for (int i = 0; i < kOrder; ++i)
      for (int j = 0; i + j <= kOrder - 1; ++j)
        r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<double>(i + 1) * c[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
    return r;
  }
  Jet2 du() const {
    Jet2 r;
    for (int i = 0; i <= kOrder - 1; ++i)
      for (int j = 0; i + j <= kOrder - 1; ++j)
        r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<double>(j + 1) * c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)];
    return r;
  }

  Jet2 operator+(const Jet2& o) const {
    Jet2 r;
    for (int i = 0; i <= kOrder; ++i)
      for (int j = 0; i + j <= kOrder; ++j)
        r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
            o.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return r;
  }
  Jet2 operator-(const Jet2& o) const {
    Jet2 r;
    for (int i = 0; i <= kOrder; ++i)
      for (int j = 0; i + j <= kOrder; ++j)
        r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            o.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return r;
  }
  Jet2 operator-() const {
    Jet2 r;
    for (int i = 0; i <= kOrder; ++i)
      for (int j = 0; i + j <= kOrder; ++j)
        r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            -c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return r;
  }
  Jet2 operator*(const Jet2& o) const {
    Jet2 r;
    for (int i = 0; i <= kOrder; ++i)
      for (int j = 0; i + j <= kOrder; ++j) {
        const cplx a = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (a == cplx{}) continue;
        for (int p = 0; i + p <= kOrder; ++p)
          for (int q = 0; i + j + p + q <= kOrder; ++q)
            r.c[static_cast<std::size_t>(i + p)][static_cast<std::size_t>(j + q)] +=
                a * o.c[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      }
    return r;
  }
  Jet2 operator*(cplx s) const {
    Jet2 r;
    for (int i = 0; i <= kOrder; ++i)
      for (int j = 0; i + j <= kOrder; ++j)
        r.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s;
    return r;
  }
  Jet2 operator+(cplx s) const {
    Jet2 r = *this;
    r.c[0][0] += s;
    return r;
  }
  Jet2 operator-(cplx s) const {
    Jet2 r = *this;
    r.c[0][0] -= s;
    return r;
  }

  // h = sum_k f_k (g - g0)^k with f_k = f^{(k)}(g0)/k!.
  Jet2 apply_series(const std::array<cplx, kOrder + 1>& f) const {
    Jet2 e = *this;
    e.c[0][0] = 0;
    Jet2 r(f[0]);
    Jet2 p(1.0);
    for (int k = 1; k <= kOrder; ++k) {
      p = p * e;
      r = r + p * f[static_cast<std::size_t>(k)];
    }
    return r;
  }

  Jet2 inv() const {
    const cplx g0 = c[0][0];
    if (std::abs(g0) < 1e-300) throw std::domain_error("Jet2::inv at zero");
    std::array<cplx, kOrder + 1> f;
    cplx p = 1.0 / g0;
    for (int k = 0; k <= kOrder; ++k) {
      f[static_cast<std::size_t>(k)] = p;
      p *= -1.0 / g0;
    }
    return apply_series(f);
  }
  Jet2 operator/(const Jet2& o) const { return (*this) * o.inv(); }
};

inline Jet2 operator*(cplx s, const Jet2& j) { return j * s; }
inline Jet2 operator+(cplx s, const Jet2& j) { return j + s; }
inline Jet2 operator-(cplx s, const Jet2& j) { return (-j) + s; }

inline Jet2 sqrt(const Jet2& g) {
  const cplx g0 = g.value();
  const cplx s = std::sqrt(g0);
  if (std::abs(g0) < 1e-300) throw std::domain_error("Jet2::sqrt at zero");
  // Taylor coefficients of sqrt about g0: s * binom(1/2,k) / g0^k.
  std::array<cplx, Jet2::kOrder + 1> f;
  f[0] = s;
  cplx binom = 1.0;
  cplx pow = 1.0;
  for (int k = 1; k <= Jet2::kOrder; ++k) {
    binom *= (0.5 - (k - 1)) / static_cast<double>(k);
    pow *= g0;
    f[static_cast<std::size_t>(k)] = s * binom / pow;
  }
  return g.apply_series(f);
}

inline Jet2 exp(const Jet2& g) {
  const cplx e0 = std::exp(g.value());
  std::array<cplx, Jet2::kOrder + 1> f;
  double fact = 1.0;
  for (int k = 0; k <= Jet2::kOrder; ++k) {
    if (k > 0) fact *= k;
    f[static_cast<std::size_t>(k)] = e0 / fact;
  }
  return g.apply_series(f);
}

inline Jet2 sin(const Jet2& g) {
  const cplx s = std::sin(g.value()), c = std::cos(g.value());
  const std::array<cplx, 5> f = {s, c, -s / 2.0, -c / 6.0, s / 24.0};
  return g.apply_series(f);
}

inline Jet2 cos(const Jet2& g) {
  const cplx s = std::sin(g.value()), c = std::cos(g.value());
  const std::array<cplx, 5> f = {c, -s, -c / 2.0, s / 6.0, c / 24.0};
  return g.apply_series(f);
}

// First-order expansion in the four spacetime coordinates: value + gradient.
// Enough for exact first derivatives of anything assembled by composition.
struct Dual4 {
  cplx v{};
  std::array<cplx, 4> g{};

  Dual4() = default;
  Dual4(cplx value) : v(value) {}
  Dual4(cplx value, const std::array<cplx, 4>& grad) : v(value), g(grad) {}

  static Dual4 var(int mu, double x) {
    Dual4 d(x);
    d.g[static_cast<std::size_t>(mu)] = 1.0;
    return d;
  }

  cplx d(int mu) const { return g[static_cast<std::size_t>(mu)]; }

  Dual4 operator+(const Dual4& o) const {
    return {v + o.v, {g[0] + o.g[0], g[1] + o.g[1], g[2] + o.g[2], g[3] + o.g[3]}};
  }
  Dual4 operator-(const Dual4& o) const {
    return {v - o.v, {g[0] - o.g[0], g[1] - o.g[1], g[2] - o.g[2], g[3] - o.g[3]}};
  }
  Dual4 operator-() const { return {-v, {-g[0], -g[1], -g[2], -g[3]}}; }
  Dual4 operator*(const Dual4& o) const {
    return {v * o.v,
            {g[0] * o.v + v * o.g[0], g[1] * o.v + v * o.g[1],
             g[2] * o.v + v * o.g[2], g[3] * o.v + v * o.g[3]}};
  }
  Dual4 operator/(const Dual4& o) const {
    const cplx inv = 1.0 / o.v;
    const cplx q = v * inv;
    return {q,
            {(g[0] - q * o.g[0]) * inv, (g[1] - q * o.g[1]) * inv,
             (g[2] - q * o.g[2]) * inv, (g[3] - q * o.g[3]) * inv}};
  }
  Dual4 operator*(cplx s) const { return {v * s, {g[0] * s, g[1] * s, g[2] * s, g[3] * s}}; }
  Dual4 operator+(cplx s) const { return {v + s, g}; }
  Dual4 operator-(cplx s) const { return {v - s, g}; }
};

inline Dual4 operator*(cplx s, const Dual4& d) { return d * s; }
inline Dual4 operator+(cplx s, const Dual4& d) { return d + s; }
inline Dual4 operator-(cplx s, const Dual4& d) { return (-d) + s; }

inline Dual4 conj(const Dual4& d) {
  return {std::conj(d.v),
          {std::conj(d.g[0]), std::conj(d.g[1]), std::conj(d.g[2]), std::conj(d.g[3])}};
}
inline Dual4 real_part(const Dual4& d) { return (d + conj(d)) * 0.5; }
inline Dual4 imag_part(const Dual4& d) { return (d - conj(d)) * (-0.5 * iu); }

inline Dual4 exp(const Dual4& d) {
  const cplx e = std::exp(d.v);
  return {e, {e * d.g[0], e * d.g[1], e * d.g[2], e * d.g[3]}};
}
inline Dual4 sqrt(const Dual4& d) {
  const cplx s = std::sqrt(d.v);
  const cplx f = 0.5 / s;
  return {s, {f * d.g[0], f * d.g[1], f * d.g[2], f * d.g[3]}};
}

// Chain rule for a bivariate profile jet evaluated at (t.v, u.v): only the
// first-order data of the jet is consumed.
inline Dual4 compose12(const Jet2& f, const Dual4& t, const Dual4& u) {
  const cplx ft = f.deriv(1, 0), fu = f.deriv(0, 1);
  return {f.value(),
          {ft * t.g[0] + fu * u.g[0], ft * t.g[1] + fu * u.g[1],
           ft * t.g[2] + fu * u.g[2], ft * t.g[3] + fu * u.g[3]}};
}

}  // namespace fierzmd

#endif
