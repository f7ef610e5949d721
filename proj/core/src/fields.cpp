#include "fierzmd/fields.hpp"

namespace fierzmd {

SpinorJets spinor_jets(const SpinorField& f, const Vec4& x, const DiffEngine& d) {
  SpinorJets out;
  const Spinor v = f.eval(x);
  std::array<Spinor, 4> dv;
  if (f.deriv && d.mode == DiffEngine::Mode::analytic) {
    for (int mu = 0; mu < 4; ++mu) dv[static_cast<std::size_t>(mu)] = f.deriv(x, mu);
  } else {
    for (int mu = 0; mu < 4; ++mu)
      dv[static_cast<std::size_t>(mu)] = fd_partial(f.eval, x, mu, d);
  }
  for (int a = 0; a < 4; ++a) {
    Dual4 ja(v[a]);
    for (int mu = 0; mu < 4; ++mu) ja.g[static_cast<std::size_t>(mu)] = dv[static_cast<std::size_t>(mu)][a];
    out.c[static_cast<std::size_t>(a)] = ja;
  }
  return out;
}

Dual4 bar_sandwich(const SpinorJets& chi, const Matrix4c& M, const SpinorJets& psi,
                   const DiracRep& rep) {
  // chibar M psi with chibar = chi^dagger gamma^0.
  const Matrix4c G = rep.gam[0] * M;
  Dual4 s;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const cplx g = G(a, b);
      if (g == cplx{}) continue;
      s = s + conj(chi.c[static_cast<std::size_t>(a)]) * g * psi.c[static_cast<std::size_t>(b)];
    }
  return s;
}

cplx bar_M_dpsi(const SpinorJets& psi, const Matrix4c& M, int mu, const DiracRep& rep) {
  const Matrix4c G = rep.gam[0] * M;
  cplx s = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const cplx g = G(a, b);
      if (g == cplx{}) continue;
      s += std::conj(psi.c[static_cast<std::size_t>(a)].v) * g *
           psi.c[static_cast<std::size_t>(b)].g[static_cast<std::size_t>(mu)];
    }
  return s;
}

cplx dbar_M_psi(const SpinorJets& psi, const Matrix4c& M, int mu, const DiracRep& rep) {
  const Matrix4c G = rep.gam[0] * M;
  cplx s = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const cplx g = G(a, b);
      if (g == cplx{}) continue;
      s += std::conj(psi.c[static_cast<std::size_t>(a)].g[static_cast<std::size_t>(mu)]) * g *
           psi.c[static_cast<std::size_t>(b)].v;
    }
  return s;
}

cplx antisym_derivative_bilinear(const SpinorJets& psi, const Matrix4c& M, int mu,
                                 const DiracRep& rep) {
  return bar_M_dpsi(psi, M, mu, rep) - dbar_M_psi(psi, M, mu, rep);
}

SpinorJets charge_conjugate_jets(const SpinorJets& psi, const DiracRep& rep) {
  const Matrix4c M = rep.C * rep.gam[0].transpose();
  SpinorJets out;
  for (int a = 0; a < 4; ++a) {
    Dual4 s;
    for (int b = 0; b < 4; ++b) {
      const cplx m = M(a, b);
      if (m == cplx{}) continue;
      s = s + m * conj(psi.c[static_cast<std::size_t>(b)]);
    }
    out.c[static_cast<std::size_t>(a)] = s;
  }
  return out;
}

BilinearJets bilinear_jets(const SpinorJets& psi, const DiracRep& rep) {
  BilinearJets b;
  const Matrix4c I = Matrix4c::identity();
  b.sigma = bar_sandwich(psi, I, psi, rep);
  b.omega = bar_sandwich(psi, rep.g5, psi, rep);
  for (int mu = 0; mu < 4; ++mu) {
    b.j[static_cast<std::size_t>(mu)] = bar_sandwich(psi, rep.gamma(mu), psi, rep);
    b.k[static_cast<std::size_t>(mu)] = bar_sandwich(psi, rep.g5 * rep.gamma(mu), psi, rep);
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      b.s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          bar_sandwich(psi, rep.sigma(mu, nu), psi, rep);
      b.sdual[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          bar_sandwich(psi, rep.g5 * rep.sigma(mu, nu), psi, rep);
    }
  const SpinorJets psic = charge_conjugate_jets(psi, rep);
  for (int mu = 0; mu < 4; ++mu) {
    const Dual4 mn = bar_sandwich(psic, rep.gamma(mu), psi, rep);  // m + i n
    b.m[static_cast<std::size_t>(mu)] = real_part(mn);
    b.n[static_cast<std::size_t>(mu)] = imag_part(mn);
  }
  return b;
}

BilinearState bilinear_state(const BilinearJets& bj) {
  return {bj.sigma, bj.omega, bj.j, bj.k};
}

BilinearField bilinear_field_from_spinor(const SpinorField& f, const DiracRep& rep,
                                         const DiffEngine& d) {
  return [f, rep, d](const Vec4& x) { return bilinear_state(bilinear_jets(spinor_jets(f, x, d), rep)); };
}

BilinearField constant_bilinear_field(cplx sigma, cplx omega, const CVec4& j, const CVec4& k) {
  BilinearState s;
  s.sigma = Dual4(sigma);
  s.omega = Dual4(omega);
  for (int mu = 0; mu < 4; ++mu) {
    s.j[static_cast<std::size_t>(mu)] = Dual4(j[mu]);
    s.k[static_cast<std::size_t>(mu)] = Dual4(k[mu]);
  }
  return [s](const Vec4&) { return s; };
}

double Poly4::eval(const Vec4& x) const {
  double s = 0;
  for (const auto& t : terms) {
    double v = t.coeff;
    for (int mu = 0; mu < 4; ++mu)
      for (int e = 0; e < t.exps[static_cast<std::size_t>(mu)]; ++e) v *= x[mu];
    s += v;
  }
  return s;
}

Dual4 Poly4::eval_dual(const Vec4& x) const {
  Dual4 s;
  const std::array<Dual4, 4> xv = {Dual4::var(0, x[0]), Dual4::var(1, x[1]),
                                   Dual4::var(2, x[2]), Dual4::var(3, x[3])};
  for (const auto& t : terms) {
    Dual4 v(t.coeff);
    for (int mu = 0; mu < 4; ++mu)
      for (int e = 0; e < t.exps[static_cast<std::size_t>(mu)]; ++e)
        v = v * xv[static_cast<std::size_t>(mu)];
    s = s + v;
  }
  return s;
}

namespace {
double lowered_dot(const Vec4& p, const Vec4& x) {
  double s = 0;
  for (int mu = 0; mu < 4; ++mu) s += eta(mu) * p[mu] * x[mu];
  return s;
}
}  // namespace

SpinorField plane_wave_field(const Vec4& p, const Spinor& u, const Vec4& a, double q) {
  const Vec4 kv = p + a * q;
  SpinorField f;
  f.eval = [kv, u](const Vec4& x) {
    const cplx ph = std::exp(-iu * lowered_dot(kv, x));
    return u * ph;
  };
  f.deriv = [kv, u](const Vec4& x, int mu) {
    const cplx ph = std::exp(-iu * lowered_dot(kv, x));
    return u * (ph * (-iu) * (eta(mu) * kv[mu]));
  };
  return f;
}

Spinor on_shell_u(const Vec4& p, double mass, int basis, const DiracRep& rep) {
  Matrix4c slash = Matrix4c::zero();
  for (int mu = 0; mu < 4; ++mu) slash = slash + rep.gamma(mu) * (eta(mu) * p[mu]);
  CVec4 e;
  e[basis] = 1.0;
  CVec4 u = (slash + Matrix4c::identity() * mass) * e;
  double n2 = 0;
  for (int i = 0; i < 4; ++i) n2 += std::norm(u[i]);
  if (n2 < 1e-24) throw std::domain_error("on_shell_u: projector annihilates basis spinor");
  return u * (1.0 / std::sqrt(n2));
}

Spinor on_shell_v(const Vec4& p, double mass, int basis, const DiracRep& rep) {
  Matrix4c slash = Matrix4c::zero();
  for (int mu = 0; mu < 4; ++mu) slash = slash + rep.gamma(mu) * (eta(mu) * p[mu]);
  CVec4 e;
  e[basis] = 1.0;
  CVec4 v = (slash - Matrix4c::identity() * mass) * e;
  double n2 = 0;
  for (int i = 0; i < 4; ++i) n2 += std::norm(v[i]);
  if (n2 < 1e-24) throw std::domain_error("on_shell_v: projector annihilates basis spinor");
  return v * (1.0 / std::sqrt(n2));
}

SpinorField two_wave_field(const Vec4& p, const Spinor& u, const Spinor& v, const Vec4& a, double q) {
  const Vec4 kp = p + a * q;  // positive-frequency wavevector
  const Vec4 km = p - a * q;  // negative-frequency wavevector (enters with +i)
  SpinorField f;
  f.eval = [kp, km, u, v](const Vec4& x) {
    const cplx e1 = std::exp(-iu * lowered_dot(kp, x));
    const cplx e2 = std::exp(iu * lowered_dot(km, x));
    return u * e1 + v * e2;
  };
  f.deriv = [kp, km, u, v](const Vec4& x, int mu) {
    const cplx e1 = std::exp(-iu * lowered_dot(kp, x));
    const cplx e2 = std::exp(iu * lowered_dot(km, x));
    return u * (e1 * (-iu) * (eta(mu) * kp[mu])) + v * (e2 * iu * (eta(mu) * km[mu]));
  };
  return f;
}

SpinorField constant_spinor_field(const Spinor& u) {
  SpinorField f;
  f.eval = [u](const Vec4&) { return u; };
  f.deriv = [](const Vec4&, int) { return Spinor{}; };
  return f;
}

SpinorField gauge_transformed(const SpinorField& base, const Poly4& theta, double q) {
  SpinorField f;
  f.eval = [base, theta, q](const Vec4& x) {
    const cplx ph = std::exp(iu * q * theta.eval(x));
    return base.eval(x) * ph;
  };
  if (base.deriv) {
    f.deriv = [base, theta, q](const Vec4& x, int mu) {
      const Dual4 th = theta.eval_dual(x);
      const cplx ph = std::exp(iu * q * th.v);
      const Spinor psi = base.eval(x);
      const Spinor dpsi = base.deriv(x, mu);
      return dpsi * ph + psi * (ph * iu * q * th.d(mu));
    };
  }
  return f;
}

SpinorField polynomial_spinor_field(const std::array<Poly4, 4>& re, const std::array<Poly4, 4>& im) {
  SpinorField f;
  f.eval = [re, im](const Vec4& x) {
    Spinor s;
    for (int a = 0; a < 4; ++a)
      s[a] = cplx{re[static_cast<std::size_t>(a)].eval(x), im[static_cast<std::size_t>(a)].eval(x)};
    return s;
  };
  f.deriv = [re, im](const Vec4& x, int mu) {
    Spinor s;
    for (int a = 0; a < 4; ++a) {
      const Dual4 r = re[static_cast<std::size_t>(a)].eval_dual(x);
      const Dual4 i = im[static_cast<std::size_t>(a)].eval_dual(x);
      s[a] = r.d(mu) + iu * i.d(mu);
    }
    return s;
  };
  return f;
}

}  // namespace fierzmd
