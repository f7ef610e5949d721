#ifndef FIERZMD_MAXWELL_HPP
#define FIERZMD_MAXWELL_HPP

#include "fierzmd/inversion.hpp"

namespace fierzmd {

// Antisymmetric rank-2 tensor F_{mu nu}, six independent real entries.
struct AntisymTensor2 {
  // order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  std::array<double, 6> f{};

  static int slot(int mu, int nu) {
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[mu][nu];
  }
  double operator()(int mu, int nu) const {
    if (mu == nu) return 0.0;
    const double v = f[static_cast<std::size_t>(slot(mu, nu))];
    return mu < nu ? v : -v;
  }
  void set(int mu, int nu, double v) {
    if (mu == nu) return;
    f[static_cast<std::size_t>(slot(mu, nu))] = (mu < nu) ? v : -v;
  }
  double max_abs() const {
    double m = 0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
  }
};

inline AntisymTensor2 operator-(const AntisymTensor2& a, const AntisymTensor2& b) {
  AntisymTensor2 r;
  for (int i = 0; i < 6; ++i) r.f[static_cast<std::size_t>(i)] = a.f[static_cast<std::size_t>(i)] - b.f[static_cast<std::size_t>(i)];
  return r;
}

// The manifestly gauge-invariant field strength: four-curl of the invariant
// potential plus the rational bilinear term. The curl differentiates
// gauge_invariant_B with the engine's stencil; the rational term uses the
// field's own first derivatives.
AntisymTensor2 field_strength(const BilinearField& field, const PhysicalParams& p, const Vec4& x,
                              const DiffEngine& d = {}, double eps_den = 1e-10);

// Residual of the inhomogeneous Maxwell equations, d_nu F^{nu mu} - q j^mu,
// contravariant components. The outer derivative stencils field_strength with
// twice the engine step.
CVec4 maxwell_residual(const BilinearField& field, const PhysicalParams& p, const Vec4& x,
                       const DiffEngine& d = {}, double eps_den = 1e-10);

// (d_mu j^mu, d_mu k^mu + 2 i m omega) from the field's first derivatives.
struct ContinuityResiduals {
  cplx current;
  cplx axial;
};
ContinuityResiduals continuity_residuals(const BilinearField& field, const PhysicalParams& p,
                                         const Vec4& x);

// Debug-path variant returning the raw complex tensor before the real part
// and exact antisymmetrization are taken.
struct FieldStrengthDebug {
  AntisymTensor2 F;
  double max_imag;        // largest imaginary residue seen
  double max_sym;         // largest symmetric part of the naive evaluation
};
FieldStrengthDebug field_strength_debug(const BilinearField& field, const PhysicalParams& p,
                                        const Vec4& x, const DiffEngine& d = {}, double eps_den = 1e-10);

}  // namespace fierzmd

#endif
