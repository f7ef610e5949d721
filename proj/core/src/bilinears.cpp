#include "fierzmd/bilinears.hpp"

namespace fierzmd {

namespace {

SpinorJets value_jets(const Spinor& psi) {
  SpinorJets j;
  for (int a = 0; a < 4; ++a) j.c[static_cast<std::size_t>(a)] = Dual4(psi[a]);
  return j;
}

// eps_{mu nu}^{  rho sigma} contracted against lowered vectors is just the
// fully lowered symbol against upper components; keep both helpers explicit.
double eps_low(int mu, int nu, int rho, int sig) {
  return static_cast<double>(levi_civita_lower(mu, nu, rho, sig));
}
double eps_mixed_last2_up(int mu, int nu, int rho, int sig) {
  return eta(rho) * eta(sig) * eps_low(mu, nu, rho, sig);
}
cplx delta_mixed_last2_up(int mu, int nu, int rho, int sig) {
  return eta(mu) * eta(nu) * delta4(mu, nu, rho, sig);
}

}  // namespace

Spinor charge_conjugate(const Spinor& psi, const DiracRep& rep) {
  CVec4 conj_psi;
  for (int a = 0; a < 4; ++a) conj_psi[a] = std::conj(psi[a]);
  return rep.C * (rep.gam[0].transpose() * conj_psi);
}

BilinearSet bilinears(const Spinor& psi, const DiracRep& rep) {
  const BilinearJets bj = bilinear_jets(value_jets(psi), rep);
  BilinearSet b;
  b.sigma = bj.sigma.v;
  b.omega = bj.omega.v;
  for (int mu = 0; mu < 4; ++mu) {
    b.j[mu] = bj.j[static_cast<std::size_t>(mu)].v;
    b.k[mu] = bj.k[static_cast<std::size_t>(mu)].v;
    b.m[mu] = bj.m[static_cast<std::size_t>(mu)].v;
    b.n[mu] = bj.n[static_cast<std::size_t>(mu)].v;
    for (int nu = 0; nu < 4; ++nu) {
      b.s(mu, nu) = bj.s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)].v;
      b.sdual(mu, nu) = bj.sdual[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)].v;
    }
  }
  return b;
}

FierzResiduals fierz_residuals(const BilinearSet& b, double eps_den) {
  FierzResiduals r;
  double M = std::max(std::abs(b.sigma), std::abs(b.omega));
  M = std::max({M, b.j.max_abs(), b.k.max_abs(), b.m.max_abs(), b.n.max_abs()});
  const double n2 = std::max(1.0, M * M);
  const double n1 = std::max(1.0, M);

  const cplx D = b.density();
  const cplx jj = dot_lorentz(b.j, b.j);
  const cplx kk = dot_lorentz(b.k, b.k);
  const cplx mm = dot_lorentz(b.m, b.m);
  const cplx nn = dot_lorentz(b.n, b.n);
  r.inner_jk = std::max(std::abs(jj - D), std::abs(kk + D)) / n2;
  r.inner_mn = std::max(std::abs(mm + D), std::abs(nn + D)) / n2;

  const cplx pairs[6] = {dot_lorentz(b.j, b.k), dot_lorentz(b.j, b.m), dot_lorentz(b.j, b.n),
                         dot_lorentz(b.k, b.m), dot_lorentz(b.k, b.n), dot_lorentz(b.m, b.n)};
  for (const cplx& p : pairs) r.orthogonality = std::max(r.orthogonality, std::abs(p) / n2);

  const CVec4 m_lo = lower(b.m), n_lo = lower(b.n);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      cplx lhs = 0;
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig)
          lhs += eps_low(mu, nu, rho, sig) * b.j[rho] * b.k[sig];
      const cplx rhs = m_lo[mu] * n_lo[nu] - m_lo[nu] * n_lo[mu];
      r.spin_plane = std::max(r.spin_plane, std::abs(lhs - rhs) / n2);
    }

  if (std::abs(D) <= eps_den * n2) {
    r.reconstruction_applicable = false;
    return r;
  }
  const CVec4 j_lo = lower(b.j), k_lo = lower(b.k);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      cplx num_s = 0, num_sd = 0;
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const cplx e = eps_mixed_last2_up(mu, nu, rho, sig);
          const cplx dl = delta_mixed_last2_up(mu, nu, rho, sig);
          const cplx jk = j_lo[rho] * k_lo[sig];
          num_s += (b.sigma * e - b.omega * dl) * jk;
          num_sd += (b.omega * e - b.sigma * dl) * jk;
        }
      const cplx s_lo = eta(mu) * eta(nu) * b.s(mu, nu);
      const cplx sd_lo = eta(mu) * eta(nu) * b.sdual(mu, nu);
      r.s_reconstruction = std::max(r.s_reconstruction, std::abs(s_lo - num_s / D) / n1);
      r.sdual_reconstruction = std::max(r.sdual_reconstruction, std::abs(sd_lo - num_sd / D) / n1);
    }
  return r;
}

TetradResult tetrad(const BilinearSet& b, double eps_den) {
  double M = std::max(std::abs(b.sigma), std::abs(b.omega));
  M = std::max({M, b.j.max_abs(), b.k.max_abs(), b.m.max_abs(), b.n.max_abs()});
  const double scale2 = std::max(1.0, M * M);
  const cplx D = b.density();
  if (D.real() <= eps_den * scale2)
    throw DegenerateDensityError("tetrad: sigma^2 - omega^2 not positive");
  const double norm = 1.0 / std::sqrt(D.real());

  TetradResult out;
  const CVec4* cols[4] = {&b.j, &b.m, &b.n, &b.k};
  for (int mu = 0; mu < 4; ++mu)
    for (int al = 0; al < 4; ++al) out.t(mu, al) = (*cols[al])[mu].real() * norm;

  // (eta t^T eta) t and t (eta t^T eta) must both be the identity.
  Mat4d ete;
  for (int al = 0; al < 4; ++al)
    for (int mu = 0; mu < 4; ++mu) ete(al, mu) = eta(al) * out.t(mu, al) * eta(mu);
  const Mat4d left = ete * out.t;
  const Mat4d right = out.t * ete;
  out.orthonormality_residual =
      std::max((left - Mat4d::identity()).max_abs(), (right - Mat4d::identity()).max_abs());
  return out;
}

DerivativeIdentityResiduals derivative_identities(const BilinearJets& bj, const SpinorJets& psi,
                                                  const DiracRep& rep) {
  DerivativeIdentityResiduals out;

  double m2 = 0;
  for (int a = 0; a < 4; ++a) {
    m2 += std::norm(psi.c[static_cast<std::size_t>(a)].v);
    for (int mu = 0; mu < 4; ++mu) m2 += std::norm(psi.c[static_cast<std::size_t>(a)].g[static_cast<std::size_t>(mu)]);
  }
  const double n4 = std::max(1.0, m2 * m2);

  // psibar (d_mu psi) - (d_mu psibar) psi and the gamma5 variant, from the
  // gradient part of the corresponding bilinear jets restricted to one side.
  const Matrix4c I = Matrix4c::identity();
  auto one_sided = [&](const Matrix4c& Mmat, int mu) {
    const Matrix4c G = rep.gam[0] * Mmat;
    cplx right = 0, left = 0;
    for (int a = 0; a < 4; ++a)
      for (int b2 = 0; b2 < 4; ++b2) {
        const cplx g = G(a, b2);
        if (g == cplx{}) continue;
        right += std::conj(psi.c[static_cast<std::size_t>(a)].v) * g *
                 psi.c[static_cast<std::size_t>(b2)].g[static_cast<std::size_t>(mu)];
        left += std::conj(psi.c[static_cast<std::size_t>(a)].g[static_cast<std::size_t>(mu)]) * g *
                psi.c[static_cast<std::size_t>(b2)].v;
      }
    return right - left;
  };

  const cplx sg = bj.sigma.v, om = bj.omega.v;
  const cplx D = sg * sg - om * om;

  for (int mu = 0; mu < 4; ++mu) {
    const cplx P = one_sided(I, mu);
    const cplx Q = one_sided(rep.g5, mu);

    auto contract_dx = [&](const std::array<Dual4, 4>& a, const std::array<Dual4, 4>& b) {
      cplx s = 0;
      for (int nu = 0; nu < 4; ++nu)
        s += eta(nu) * a[static_cast<std::size_t>(nu)].v *
             b[static_cast<std::size_t>(nu)].g[static_cast<std::size_t>(mu)];
      return s;
    };
    const cplx jdk = contract_dx(bj.j, bj.k);
    const cplx kdj = contract_dx(bj.k, bj.j);
    const cplx mdn = contract_dx(bj.m, bj.n);
    const cplx ndm = contract_dx(bj.n, bj.m);

    out.j_dk_antisymmetry = std::max(out.j_dk_antisymmetry,
                                     std::max(std::abs(jdk + kdj), std::abs(jdk - (P * om - Q * sg))) / n4);
    out.m_dn_antisymmetry = std::max(out.m_dn_antisymmetry,
                                     std::max(std::abs(mdn + ndm), std::abs(mdn - iu * (P * sg - Q * om))) / n4);

    const cplx dsg = bj.sigma.g[static_cast<std::size_t>(mu)];
    const cplx dom = bj.omega.g[static_cast<std::size_t>(mu)];
    const cplx half_dD = sg * dsg - om * dom;
    const cplx jdj = contract_dx(bj.j, bj.j);
    const cplx mdm = contract_dx(bj.m, bj.m);
    const cplx ndn = contract_dx(bj.n, bj.n);
    const cplx kdk = contract_dx(bj.k, bj.k);
    out.self_contraction = std::max({out.self_contraction, std::abs(jdj - half_dD) / n4,
                                     std::abs(mdm + half_dD) / n4, std::abs(ndn + half_dD) / n4,
                                     std::abs(kdk + half_dD) / n4});

    if (std::abs(D) > 1e-10 * std::max(1.0, m2)) {
      out.replacement_scalar = std::max(out.replacement_scalar,
                                        std::abs(P + (jdk * om + iu * mdn * sg) / D) / std::max(1.0, m2));
      out.replacement_pseudo = std::max(out.replacement_pseudo,
                                        std::abs(Q + (jdk * sg + iu * mdn * om) / D) / std::max(1.0, m2));
    } else {
      out.replacement_applicable = false;
    }
  }
  return out;
}

DerivativeIdentityResiduals derivative_identities(const SpinorField& f, const Vec4& x,
                                                  const DiracRep& rep, const DiffEngine& d) {
  const SpinorJets psi = spinor_jets(f, x, d);
  return derivative_identities(bilinear_jets(psi, rep), psi, rep);
}

Spinor random_spinor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Spinor s;
  for (int a = 0; a < 4; ++a) s[a] = cplx{dist(rng), dist(rng)};
  return s;
}

Spinor random_spinor_off_null(std::mt19937_64& rng, double density_cut, const DiracRep& rep) {
  for (int tries = 0; tries < 1000; ++tries) {
    const Spinor s = random_spinor(rng);
    const BilinearSet b = bilinears(s, rep);
    if (std::abs(b.density()) > density_cut) return s;
  }
  throw std::runtime_error("random_spinor_off_null: rejection sampling failed");
}

FierzResiduals fierz_suite(int n, std::uint64_t seed, const DiracRep& rep) {
  std::mt19937_64 rng(seed);
  FierzResiduals worst;
  for (int i = 0; i < n; ++i) {
    const Spinor psi = random_spinor_off_null(rng, 1e-6, rep);
    const FierzResiduals r = fierz_residuals(bilinears(psi, rep));
    worst.inner_jk = std::max(worst.inner_jk, r.inner_jk);
    worst.inner_mn = std::max(worst.inner_mn, r.inner_mn);
    worst.orthogonality = std::max(worst.orthogonality, r.orthogonality);
    worst.spin_plane = std::max(worst.spin_plane, r.spin_plane);
    worst.s_reconstruction = std::max(worst.s_reconstruction, r.s_reconstruction);
    worst.sdual_reconstruction = std::max(worst.sdual_reconstruction, r.sdual_reconstruction);
  }
  return worst;
}

}  // namespace fierzmd
