#ifndef FIERZMD_PROFILES_HPP
#define FIERZMD_PROFILES_HPP

#include <functional>
#include <random>
#include <vector>

#include "fierzmd/jets.hpp"

namespace fierzmd {

// Smooth function of two variables with derivative access to total order 4,
// evaluated as a truncated Taylor expansion about the query point.
using Profile2 = std::function<Jet2(double, double)>;

// Bivariate polynomial sum of c * t^i * u^j terms.
struct Poly2 {
  struct Term {
    double coeff;
    int i, j;
  };
  std::vector<Term> terms;

  Jet2 eval(double t, double u) const {
    const Jet2 T = Jet2::var_t(t), U = Jet2::var_u(u);
    Jet2 s;
    for (const auto& tm : terms) {
      Jet2 v(tm.coeff);
      for (int a = 0; a < tm.i; ++a) v = v * T;
      for (int b = 0; b < tm.j; ++b) v = v * U;
      s = s + v;
    }
    return s;
  }
  Profile2 profile() const {
    return [*this](double t, double u) { return eval(t, u); };
  }
};

inline Profile2 constant_profile(double c) {
  return [c](double, double) { return Jet2(cplx{c, 0.0}); };
}

// Random low-degree polynomial with coefficients shrinking with total degree.
inline Poly2 random_poly2(std::mt19937_64& rng, int max_degree, double amplitude) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Poly2 p;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j) {
      const double damp = 1.0 / (1.0 + i + j);
      p.terms.push_back({amplitude * damp * uni(rng), i, j});
    }
  return p;
}

}  // namespace fierzmd

#endif
