#include "fierzmd/inversion.hpp"

namespace fierzmd {

namespace {

double eps_low(int mu, int nu, int rho, int sig) {
  return static_cast<double>(levi_civita_lower(mu, nu, rho, sig));
}
// eps_mu^{ nu rho sigma}: first index low, last three raised.
double eps_first_low(int mu, int nu, int rho, int sig) {
  return eta(nu) * eta(rho) * eta(sig) * eps_low(mu, nu, rho, sig);
}
// delta_mu^{ nu rho sigma}.
cplx delta_first_low(int mu, int nu, int rho, int sig) {
  return eta(mu) * delta4(mu, nu, rho, sig);
}
// delta_{mu nu}^{ rho sigma} and eps_{mu nu}^{ rho sigma}.
cplx delta_first2_low(int mu, int nu, int rho, int sig) {
  return eta(mu) * eta(nu) * delta4(mu, nu, rho, sig);
}
double eps_last2_up(int mu, int nu, int rho, int sig) {
  return eta(rho) * eta(sig) * eps_low(mu, nu, rho, sig);
}

double spinor_norm2(const SpinorJets& psi) {
  double m2 = 0;
  for (int a = 0; a < 4; ++a) m2 += std::norm(psi.c[static_cast<std::size_t>(a)].v);
  return m2;
}

// d_nu s_mu^{ nu} from the s^{mu nu} jets.
cplx div_s_first_low(const BilinearJets& bj, int mu, bool dual) {
  cplx s = 0;
  for (int nu = 0; nu < 4; ++nu) {
    const Dual4& entry = dual ? bj.sdual[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]
                              : bj.s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
    s += entry.g[static_cast<std::size_t>(nu)];
  }
  return eta(mu) * s;
}

}  // namespace

CVec4 invert_A_scalar(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                      const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  const BilinearJets bj = bilinear_jets(psi, rep);
  const cplx sg = bj.sigma.v;
  if (std::abs(sg) <= 1e-12 * std::max(1.0, spinor_norm2(psi)))
    throw SupportError("invert_A_scalar: sigma vanishes at the query point");
  CVec4 A_lo;
  for (int mu = 0; mu < 4; ++mu) {
    const cplx P = iu * antisym_derivative_bilinear(psi, Matrix4c::identity(), mu, rep);
    const cplx ds = div_s_first_low(bj, mu, false);
    const cplx j_lo = eta(mu) * bj.j[static_cast<std::size_t>(mu)].v;
    A_lo[mu] = (P + ds - 2.0 * p.mass * j_lo) / (2.0 * p.q * sg);
  }
  return raise(A_lo);
}

CVec4 invert_A_pseudo(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                      const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  const BilinearJets bj = bilinear_jets(psi, rep);
  const cplx om = bj.omega.v;
  if (std::abs(om) <= 1e-12 * std::max(1.0, spinor_norm2(psi)))
    throw SupportError("invert_A_pseudo: omega vanishes at the query point");
  CVec4 A_lo;
  for (int mu = 0; mu < 4; ++mu) {
    const cplx P5 = iu * antisym_derivative_bilinear(psi, rep.g5, mu, rep);
    const cplx dsd = div_s_first_low(bj, mu, true);
    A_lo[mu] = (P5 + dsd) / (2.0 * p.q * om);
  }
  return raise(A_lo);
}

CVec4 invert_A_combined(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                        const DiracRep& rep, const DiffEngine& d) {
  const CVec4 a = invert_A_scalar(f, p, x, rep, d);
  const CVec4 b = invert_A_pseudo(f, p, x, rep, d);
  return (a + b) * 0.5;
}

CVec4 consistency_condition(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                            const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  const BilinearJets bj = bilinear_jets(psi, rep);
  const cplx sg = bj.sigma.v, om = bj.omega.v;
  CVec4 res;
  for (int mu = 0; mu < 4; ++mu) {
    cplx jdk = 0;
    for (int nu = 0; nu < 4; ++nu)
      jdk += eta(nu) * bj.j[static_cast<std::size_t>(nu)].v *
             bj.k[static_cast<std::size_t>(nu)].g[static_cast<std::size_t>(mu)];
    const cplx j_lo = eta(mu) * bj.j[static_cast<std::size_t>(mu)].v;
    const cplx rhs = 2.0 * p.mass * om * j_lo + sg * div_s_first_low(bj, mu, true) -
                     om * div_s_first_low(bj, mu, false);
    res[mu] = iu * jdk - rhs;
  }
  return res;
}

CVec4 gauge_invariant_B(const BilinearState& st, const PhysicalParams& p, double eps_den) {
  const Dual4& sg = st.sigma;
  const Dual4& om = st.omega;
  const Dual4 D = sg * sg - om * om;

  double scale = std::max(std::abs(sg.v), std::abs(om.v));
  for (int mu = 0; mu < 4; ++mu)
    scale = std::max({scale, std::abs(st.j[static_cast<std::size_t>(mu)].v),
                      std::abs(st.k[static_cast<std::size_t>(mu)].v)});
  if (std::abs(D.v) <= eps_den * std::max(1.0, scale * scale))
    throw DegenerateDensityError("gauge_invariant_B: sigma^2 - omega^2 vanishes");

  // Lowered products j_rho k_sigma with their derivatives.
  std::array<std::array<Dual4, 4>, 4> jk;
  for (int rho = 0; rho < 4; ++rho)
    for (int sig = 0; sig < 4; ++sig)
      jk[static_cast<std::size_t>(rho)][static_cast<std::size_t>(sig)] =
          (eta(rho) * eta(sig)) * st.j[static_cast<std::size_t>(rho)] * st.k[static_cast<std::size_t>(sig)];

  const cplx D2 = D.v * D.v;
  CVec4 B_lo;
  for (int mu = 0; mu < 4; ++mu) {
    cplx acc = 0;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const double e = eps_first_low(mu, nu, rho, sig);
          if (e != 0.0) {
            const Dual4& pr = jk[static_cast<std::size_t>(rho)][static_cast<std::size_t>(sig)];
            acc += e * (D.v * pr.g[static_cast<std::size_t>(nu)] -
                        0.5 * pr.v * D.g[static_cast<std::size_t>(nu)]);
          }
          const cplx dl = delta_first_low(mu, nu, rho, sig);
          if (dl != cplx{}) {
            const cplx grad_term = sg.g[static_cast<std::size_t>(nu)] * om.v -
                                   sg.v * om.g[static_cast<std::size_t>(nu)];
            acc += dl * grad_term * jk[static_cast<std::size_t>(rho)][static_cast<std::size_t>(sig)].v;
          }
        }
    const cplx j_lo = eta(mu) * st.j[static_cast<std::size_t>(mu)].v;
    B_lo[mu] = acc / (2.0 * p.q * D2) - p.mass * sg.v * j_lo / (p.q * D.v);
  }
  return raise(B_lo);
}

CVec4 gauge_invariant_B(const BilinearField& field, const PhysicalParams& p, const Vec4& x,
                        double eps_den) {
  return gauge_invariant_B(field(x), p, eps_den);
}

CVec4 gauge_invariant_B_s_form(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                               const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  const BilinearJets bj = bilinear_jets(psi, rep);
  const cplx sg = bj.sigma.v, om = bj.omega.v;
  const cplx D = sg * sg - om * om;
  if (std::abs(D) <= 1e-10 * std::max(1.0, spinor_norm2(psi) * spinor_norm2(psi)))
    throw DegenerateDensityError("gauge_invariant_B_s_form: sigma^2 - omega^2 vanishes");
  CVec4 B_lo;
  for (int mu = 0; mu < 4; ++mu) {
    const cplx j_lo = eta(mu) * bj.j[static_cast<std::size_t>(mu)].v;
    B_lo[mu] = (sg * div_s_first_low(bj, mu, false) - om * div_s_first_low(bj, mu, true) -
                2.0 * p.mass * sg * j_lo) /
               (2.0 * p.q * D);
  }
  return raise(B_lo);
}

CVec4 gauge_dependent_part(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                           const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  const BilinearJets bj = bilinear_jets(psi, rep);
  const cplx D = bj.sigma.v * bj.sigma.v - bj.omega.v * bj.omega.v;
  CVec4 G_lo;
  for (int mu = 0; mu < 4; ++mu) {
    cplx mdn = 0;
    for (int nu = 0; nu < 4; ++nu)
      mdn += eta(nu) * bj.m[static_cast<std::size_t>(nu)].v *
             bj.n[static_cast<std::size_t>(nu)].g[static_cast<std::size_t>(mu)];
    G_lo[mu] = mdn / (2.0 * p.q * D);
  }
  return raise(G_lo);
}

std::vector<LedgerEntry> bilinearized_constraints(const SpinorField& f, const AField& A,
                                                  const PhysicalParams& p, const Vec4& x,
                                                  const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  const BilinearJets bj = bilinear_jets(psi, rep);
  const CVec4 Aup = A(x);
  const CVec4 A_lo = lower(Aup);
  const double q = p.q, m = p.mass;
  const cplx sg = bj.sigma.v, om = bj.omega.v;

  auto antisym = [&](const Matrix4c& M, int mu) {
    return antisym_derivative_bilinear(psi, M, mu, rep);
  };
  auto gamma_lo = [&](int sig) { return rep.gamma_lower(sig); };

  std::vector<LedgerEntry> out;

  {  // scalar row: current coupling and the continuity equation
    cplx jA = 0, rhs = 0;
    for (int nu = 0; nu < 4; ++nu) {
      jA += eta(nu) * bj.j[static_cast<std::size_t>(nu)].v * Aup[nu];
      rhs += antisym(rep.gamma(nu), nu);
    }
    rhs = iu / (2.0 * q) * rhs - m * sg / q;
    out.push_back({"j_dot_A", std::abs(jA - rhs)});

    cplx div_j = 0;
    for (int mu = 0; mu < 4; ++mu)
      div_j += bj.j[static_cast<std::size_t>(mu)].g[static_cast<std::size_t>(mu)];
    out.push_back({"continuity_current", std::abs(div_j)});
  }

  {  // pseudoscalar row
    cplx div_k = 0;
    for (int mu = 0; mu < 4; ++mu)
      div_k += bj.k[static_cast<std::size_t>(mu)].g[static_cast<std::size_t>(mu)];
    out.push_back({"continuity_axial", std::abs(div_k + 2.0 * iu * m * om)});

    cplx kA = 0, rhs = 0;
    for (int nu = 0; nu < 4; ++nu) {
      kA += eta(nu) * bj.k[static_cast<std::size_t>(nu)].v * Aup[nu];
      rhs += antisym(rep.g5 * rep.gamma(nu), nu);
    }
    rhs = iu / (2.0 * q) * rhs;
    out.push_back({"k_dot_A", std::abs(kA - rhs)});
  }

  {  // vector row: rank-2 coupling + the scalar-form inversion
    double worst = 0;
    for (int mu = 0; mu < 4; ++mu) {
      cplx sA = 0, deriv = 0;
      for (int nu = 0; nu < 4; ++nu) {
        sA += eta(mu) * bj.s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)].v *
              A_lo[nu];  // s_mu^nu A_nu
        deriv += antisym(rep.sigma(mu, nu) * eta(mu), nu);
      }
      const cplx rhs = iu / (2.0 * q) * deriv - bj.sigma.g[static_cast<std::size_t>(mu)] / (2.0 * q);
      worst = std::max(worst, std::abs(sA - rhs));
    }
    out.push_back({"s_coupling", worst});
  }

  {  // axial-vector row
    double worst = 0;
    for (int mu = 0; mu < 4; ++mu) {
      cplx sdA = 0, deriv = 0;
      for (int nu = 0; nu < 4; ++nu) {
        sdA += eta(mu) * bj.sdual[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)].v * A_lo[nu];
        deriv += antisym(rep.g5 * rep.sigma(mu, nu) * eta(mu), nu);
      }
      const cplx k_lo = eta(mu) * bj.k[static_cast<std::size_t>(mu)].v;
      const cplx rhs = iu / (2.0 * q) * deriv - bj.omega.g[static_cast<std::size_t>(mu)] / (2.0 * q) -
                       iu * m * k_lo / q;
      worst = std::max(worst, std::abs(sdA - rhs));
    }
    out.push_back({"sdual_coupling", worst});
  }

  // Rank-2 rows, Gamma = sigma_{mu nu} and Gamma = gamma5 sigma_{mu nu}.
  {
    double worst_s = 0, worst_s5 = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        cplx dAj = 0, eAk = 0, eAj = 0, dAk = 0;
        cplx d_gj = 0, e_g5k = 0, e_gj = 0, d_g5k = 0;
        cplx e_dk = 0, d_dj = 0, d_dk = 0, e_dj = 0;
        for (int rho = 0; rho < 4; ++rho)
          for (int sig = 0; sig < 4; ++sig) {
            const cplx dl = delta_first2_low(mu, nu, rho, sig);
            const double el = eps_last2_up(mu, nu, rho, sig);
            const cplx j_losig = eta(sig) * bj.j[static_cast<std::size_t>(sig)].v;
            const cplx k_losig = eta(sig) * bj.k[static_cast<std::size_t>(sig)].v;
            const cplx dk_ls = eta(sig) * bj.k[static_cast<std::size_t>(sig)].g[static_cast<std::size_t>(rho)];
            const cplx dj_ls = eta(sig) * bj.j[static_cast<std::size_t>(sig)].g[static_cast<std::size_t>(rho)];
            if (dl != cplx{}) {
              dAj += dl * A_lo[rho] * j_losig;
              dAk += dl * A_lo[rho] * k_losig;
              d_gj += dl * antisym(gamma_lo(sig), rho);
              d_g5k += dl * antisym(rep.g5 * gamma_lo(sig), rho);
              d_dk += dl * dk_ls;
              d_dj += dl * dj_ls;
            }
            if (el != 0.0) {
              eAk += el * A_lo[rho] * k_losig;
              eAj += el * A_lo[rho] * j_losig;
              e_gj += el * antisym(gamma_lo(sig), rho);
              e_g5k += el * antisym(rep.g5 * gamma_lo(sig), rho);
              e_dk += el * dk_ls;
              e_dj += el * dj_ls;
            }
          }
        const cplx s_lo = eta(mu) * eta(nu) * bj.s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)].v;
        const cplx sd_lo = eta(mu) * eta(nu) * bj.sdual[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)].v;

        worst_s = std::max(worst_s, std::abs(dAj - (iu * d_gj - iu * e_dk) / (2.0 * q)));
        worst_s = std::max(worst_s, std::abs(eAk - (iu * e_g5k - iu * d_dj - 2.0 * m * s_lo) / (2.0 * q)));
        worst_s5 = std::max(worst_s5, std::abs(eAj - (iu * e_gj - iu * d_dk) / (2.0 * q)));
        worst_s5 = std::max(worst_s5, std::abs(dAk - (iu * d_g5k - iu * e_dj + 2.0 * m * sd_lo) / (2.0 * q)));
      }
    out.push_back({"rank2_tensor_pair", worst_s});
    out.push_back({"rank2_pseudotensor_pair", worst_s5});
  }

  {  // both inverted forms against the supplied potential
    const double norm2 = spinor_norm2(psi);
    LedgerEntry scalar{"inversion_scalar", 0.0};
    if (std::abs(sg) > 1e-12 * std::max(1.0, norm2)) {
      scalar.residual = (invert_A_scalar(f, p, x, rep, d) - Aup).max_abs();
    } else {
      scalar.applicable = false;
    }
    out.push_back(scalar);

    LedgerEntry pseudo{"inversion_pseudo", 0.0};
    if (std::abs(om) > 1e-12 * std::max(1.0, norm2)) {
      pseudo.residual = (invert_A_pseudo(f, p, x, rep, d) - Aup).max_abs();
    } else {
      pseudo.applicable = false;
    }
    out.push_back(pseudo);
  }

  return out;
}

}  // namespace fierzmd
