#ifndef FIERZMD_FIELDS_HPP
#define FIERZMD_FIELDS_HPP

#include <functional>
#include <vector>

#include "fierzmd/common.hpp"
#include "fierzmd/dirac_algebra.hpp"
#include "fierzmd/jets.hpp"
#include "fierzmd/linalg.hpp"

namespace fierzmd {

using Spinor = CVec4;

// Central-difference engine. "analytic" means: use a field's own derivative
// closure when it has one, falling back to stencils otherwise.
struct DiffEngine {
  enum class Mode { analytic, central };
  Mode mode = Mode::analytic;
  double h = 1e-3;
  int order = 4;
};

// Stencil partial derivative of any vector-space-valued callable.
template <typename F>
auto fd_partial(F&& f, const Vec4& x, int mu, const DiffEngine& d)
    -> decltype(f(x) * (1.0 / d.h)) {
  Vec4 xp = x, xm = x;
  if (d.order == 2) {
    xp[mu] += d.h;
    xm[mu] -= d.h;
    return (f(xp) - f(xm)) * (0.5 / d.h);
  }
  Vec4 xp2 = x, xm2 = x;
  xp[mu] += d.h;
  xm[mu] -= d.h;
  xp2[mu] += 2 * d.h;
  xm2[mu] -= 2 * d.h;
  return (f(xm2) - f(xp2) + (f(xp) - f(xm)) * 8.0) * (1.0 / (12.0 * d.h));
}

// Smooth map from spacetime to spinors. deriv may be empty, in which case
// derivatives come from the stencil.
struct SpinorField {
  std::function<Spinor(const Vec4&)> eval;
  std::function<Spinor(const Vec4&, int)> deriv;
};

struct SpinorJets {
  std::array<Dual4, 4> c;
};

SpinorJets spinor_jets(const SpinorField& f, const Vec4& x, const DiffEngine& d = {});

// The gauge-invariant state: sigma, omega, j, k with first derivatives.
struct BilinearState {
  Dual4 sigma, omega;
  std::array<Dual4, 4> j, k;  // contravariant components
};

using BilinearField = std::function<BilinearState(const Vec4&)>;

// Jet-level bilinear evaluation (value + first derivatives in one pass).
struct BilinearJets {
  Dual4 sigma, omega;
  std::array<Dual4, 4> j, k, m, n;                  // contravariant
  std::array<std::array<Dual4, 4>, 4> s, sdual;     // s^{mu nu}
};

Dual4 bar_sandwich(const SpinorJets& chi, const Matrix4c& M, const SpinorJets& psi,
                   const DiracRep& rep);
// psibar M (d_mu psi) and (d_mu psibar) M psi as plain values.
cplx bar_M_dpsi(const SpinorJets& psi, const Matrix4c& M, int mu, const DiracRep& rep);
cplx dbar_M_psi(const SpinorJets& psi, const Matrix4c& M, int mu, const DiracRep& rep);
// The antisymmetric combination psibar M (d_mu psi) - (d_mu psibar) M psi.
cplx antisym_derivative_bilinear(const SpinorJets& psi, const Matrix4c& M, int mu,
                                 const DiracRep& rep);
SpinorJets charge_conjugate_jets(const SpinorJets& psi, const DiracRep& rep);
BilinearJets bilinear_jets(const SpinorJets& psi, const DiracRep& rep = DiracRep::standard());

BilinearState bilinear_state(const BilinearJets& bj);
BilinearField bilinear_field_from_spinor(const SpinorField& f, const DiracRep& rep = DiracRep::standard(),
                                         const DiffEngine& d = {});
BilinearField constant_bilinear_field(cplx sigma, cplx omega, const CVec4& j, const CVec4& k);

// Real multivariate polynomial on spacetime, used for gauge functions and
// polynomial test profiles.
struct Poly4 {
  struct Term {
    double coeff;
    std::array<int, 4> exps;
  };
  std::vector<Term> terms;

  double eval(const Vec4& x) const;
  Dual4 eval_dual(const Vec4& x) const;
};

// psi(x) = exp(-i (p + q a) . x) u, a Dirac solution for the constant
// potential A = a whenever (gamma.p - m) u = 0. Both p and a are
// contravariant; the phase uses the lowered dot product.
SpinorField plane_wave_field(const Vec4& p, const Spinor& u, const Vec4& a, double q);

// Positive/negative energy spinors from the on-shell projectors.
Spinor on_shell_u(const Vec4& p, double mass, int basis = 0, const DiracRep& rep = DiracRep::standard());
Spinor on_shell_v(const Vec4& p, double mass, int basis = 0, const DiracRep& rep = DiracRep::standard());

// Two-frequency Dirac solution for the same constant potential, giving a
// nonvanishing pseudoscalar density:
// psi = exp(-i (p + q a) . x) u + exp(+i (p - q a) . x) v,
// with (gamma.p - m) u = 0 and (gamma.p + m) v = 0.
SpinorField two_wave_field(const Vec4& p, const Spinor& u, const Spinor& v, const Vec4& a, double q);

SpinorField constant_spinor_field(const Spinor& u);

// psi'(x) = exp(i q theta(x)) psi(x).
SpinorField gauge_transformed(const SpinorField& base, const Poly4& theta, double q);

// Spinor field whose components are complex polynomials (re + i*im parts).
SpinorField polynomial_spinor_field(const std::array<Poly4, 4>& re, const std::array<Poly4, 4>& im);

}  // namespace fierzmd

#endif
