#include "fierzmd/spherical.hpp"

namespace fierzmd {

namespace {

void check_density(const cplx& D, double eps_den) {
  if (std::abs(D) <= eps_den)
    throw DegenerateDensityError("spherical reduction: sigma^2 - omega^2 vanishes");
}

}  // namespace

SphericalJets spherical_jets(const SphericalProfile& p, double t, double r) {
  if (r <= 0.0) throw std::domain_error("spherical reduction: r must be positive");
  SphericalJets sj;
  sj.t = t;
  sj.rv = r;
  sj.branch = p.branch;
  sj.r = Jet2::var_u(r);
  sj.ja = p.ja(t, r);
  sj.jb = p.jb(t, r);
  sj.sg = p.sigma(t, r);
  sj.om = iu * p.w(t, r);
  const double s = p.branch >= 0 ? 1.0 : -1.0;
  sj.kb = s * sj.ja / sj.r;
  sj.ka = s * sj.r * sj.jb;
  return sj;
}

std::pair<double, double> spherical_k_from_j(const SphericalProfile& p, double t, double r) {
  const SphericalJets sj = spherical_jets(p, t, r);
  return {sj.ka.value().real(), sj.kb.value().real()};
}

SphericalBJets spherical_B_jets(const SphericalJets& sj, const PhysicalParams& pp, double eps_den) {
  const Jet2& sg = sj.sg;
  const Jet2& om = sj.om;
  const Jet2 D = sg * sg - om * om;
  check_density(D.value(), eps_den);
  const double s = sj.branch >= 0 ? 1.0 : -1.0;
  const Jet2 sg_t = sg.dt(), sg_r = sg.du(), om_t = om.dt(), om_r = om.du();
  const Jet2 qD = D * pp.q;
  SphericalBJets out;
  out.Ba = (s * (iu * 0.5) * (sg_r * om - sg * om_r) - pp.mass * sg * sj.ja) / qD;
  out.Bb = ((-s) * (iu * 0.5) * (sg_t * om - sg * om_t) / sj.r - pp.mass * sg * sj.jb) / qD;
  return out;
}

SphericalB spherical_B(const SphericalProfile& p, const PhysicalParams& pp, double t, double r,
                       double eps_den) {
  const SphericalBJets bj = spherical_B_jets(spherical_jets(p, t, r), pp, eps_den);
  return {bj.Ba.value().real(), bj.Bb.value().real()};
}

namespace {

// The transcribed closed-form F_a as a jet (valid to second order).
Jet2 spherical_F_a_jet(const SphericalJets& sj, const PhysicalParams& pp, double eps_den) {
  const Jet2& sg = sj.sg;
  const Jet2& om = sj.om;
  const Jet2& ja = sj.ja;
  const Jet2& jb = sj.jb;
  const Jet2& r = sj.r;
  const double s = sj.branch >= 0 ? 1.0 : -1.0;
  const double m = pp.mass;
  const Jet2 D = sg * sg - om * om;
  check_density(D.value(), eps_den);

  const Jet2 sg_t = sg.dt(), sg_r = sg.du(), om_t = om.dt(), om_r = om.du();
  const Jet2 sg_tt = sg_t.dt(), sg_rr = sg_r.du(), om_tt = om_t.dt(), om_rr = om_r.du();
  const Jet2 ja_r = ja.du(), jb_t = jb.dt();

  const Jet2 block1 =
      (-2.0 * m) * (sg * ja * (sg * sg_r - om * om_r) + r * sg * jb * (sg * sg_t - om * om_t)) +
      (s * iu) * (sg * om * (sg_r * sg_r - sg_t * sg_t + om_r * om_r - om_t * om_t) +
                  (sg * sg + om * om) * (sg_t * om_t - sg_r * om_r));
  const Jet2 block2 = m * (sg_r * ja + sg * ja_r + r * sg_t * jb + r * sg * jb_t) +
                      (s * iu * 0.5) * (sg_tt * om - sg * om_tt - sg_rr * om + sg * om_rr);

  return (block1 / (D * D) + block2 / D) / (pp.q * r);
}

}  // namespace

SphericalF spherical_F(const SphericalProfile& p, const PhysicalParams& pp, double t, double r,
                       double eps_den) {
  const SphericalJets sj = spherical_jets(p, t, r);
  const double s = sj.branch >= 0 ? 1.0 : -1.0;
  SphericalF out;
  out.Fa = spherical_F_a_jet(sj, pp, eps_den).value().real();
  out.Fb = s / (2.0 * pp.q * r * r * r);
  return out;
}

double spherical_F_a_from_B(const SphericalProfile& p, const PhysicalParams& pp, double t, double r) {
  const SphericalJets sj = spherical_jets(p, t, r);
  const SphericalBJets bj = spherical_B_jets(sj, pp);
  const Jet2 fa = -bj.Bb.dt() - bj.Ba.du() / sj.r;
  return fa.value().real();
}

double spherical_F_b_raw(const SphericalProfile& p, const PhysicalParams& pp, double t, double r) {
  const SphericalJets sj = spherical_jets(p, t, r);
  const Jet2 D = sj.sg * sj.sg - sj.om * sj.om;
  check_density(D.value(), 1e-10);
  const double s = sj.branch >= 0 ? 1.0 : -1.0;
  const cplx ja = sj.ja.value(), jb = sj.jb.value();
  const cplx ja2 = ja * ja, jb2 = jb * jb;
  const cplx val = (ja2 * ja2 / (r * r * r) - 2.0 * ja2 * jb2 / r + r * jb2 * jb2) /
                   (D.value() * D.value());
  return (s / (2.0 * pp.q) * val).real();
}

SphericalMDResiduals spherical_md_residuals(const SphericalProfile& p, const PhysicalParams& pp,
                                            double t, double r, double eps_den) {
  const SphericalJets sj = spherical_jets(p, t, r);
  const double q = pp.q, m = pp.mass;
  const double s = sj.branch >= 0 ? 1.0 : -1.0;

  // plain derivative values
  const Jet2 &sgj = sj.sg, &omj = sj.om;
  const cplx sg = sgj.value(), om = omj.value();
  const cplx sg_t = sgj.deriv(1, 0), sg_r = sgj.deriv(0, 1);
  const cplx om_t = omj.deriv(1, 0), om_r = omj.deriv(0, 1);
  const cplx sg_tt = sgj.deriv(2, 0), sg_tr = sgj.deriv(1, 1), sg_rr = sgj.deriv(0, 2);
  const cplx om_tt = omj.deriv(2, 0), om_tr = omj.deriv(1, 1), om_rr = omj.deriv(0, 2);
  const cplx sg_ttt = sgj.deriv(3, 0), sg_ttr = sgj.deriv(2, 1), sg_trr = sgj.deriv(1, 2),
             sg_rrr = sgj.deriv(0, 3);
  const cplx om_ttt = omj.deriv(3, 0), om_ttr = omj.deriv(2, 1), om_trr = omj.deriv(1, 2),
             om_rrr = omj.deriv(0, 3);
  const cplx ja = sj.ja.value(), jb = sj.jb.value();
  const cplx ja_t = sj.ja.deriv(1, 0), ja_r = sj.ja.deriv(0, 1);
  const cplx jb_t = sj.jb.deriv(1, 0), jb_r = sj.jb.deriv(0, 1);
  const cplx ja_rr = sj.ja.deriv(0, 2), ja_tr = sj.ja.deriv(1, 1);
  const cplx jb_tt = sj.jb.deriv(2, 0), jb_tr = sj.jb.deriv(1, 1);

  const cplx D = sg * sg - om * om;
  check_density(D, eps_den);
  const cplx D2 = D * D, D3 = D2 * D;
  const cplx si = s * iu;

  // shared first block of both equations
  const cplx core = -2.0 * m * (sg * ja * (sg * sg_r - om * om_r) + r * sg * jb * (sg * sg_t - om * om_t)) +
                    si * ((sg * sg + om * om) * (sg_t * om_t - sg_r * om_r) +
                          sg * om * (sg_r * sg_r - sg_t * sg_t + om_r * om_r - om_t * om_t));

  const cplx rhs_time =
      -4.0 / D3 * (sg * sg_r - om * om_r) * core +
      1.0 / D2 *
          (-2.0 * m *
               ((3.0 * sg * jb + r * sg_r * jb + r * sg * jb_r) * (sg * sg_t - om * om_t) +
                (2.0 * sg_r * ja + 2.0 * sg * ja_r + 2.0 * sg * ja / r + r * sg_t * jb + r * sg * jb_t) *
                    (sg * sg_r - om * om_r) +
                sg * ja * (sg_r * sg_r + sg * sg_rr - om_r * om_r - om * om_rr) +
                r * sg * jb * (sg * sg_tr + sg_t * sg_r - om * om_tr - om_t * om_r)) +
           si * (2.0 * (sg * sg_r + om * om_r + sg * sg / r + om * om / r) * (sg_t * om_t - sg_r * om_r) +
                 (sg * om_tt - sg_tt * om - sg * om_rr + sg_rr * om) * (sg * sg_r - om * om_r) +
                 (sg * om_r + sg_r * om + 2.0 * sg * om / r) *
                     (sg_r * sg_r - sg_t * sg_t + om_r * om_r - om_t * om_t) +
                 (sg * sg + om * om) * (sg_t * om_tr + sg_tr * om_t - sg_r * om_rr - sg_rr * om_r) +
                 2.0 * sg * om * (sg_r * sg_rr - sg_t * sg_tr + om_r * om_rr - om_t * om_tr))) +
      1.0 / D *
          (m * (sg_rr * ja + 2.0 * sg_r * ja_r + sg * ja_rr + r * sg_tr * jb + r * sg_t * jb_r +
                r * sg_r * jb_t + r * sg * jb_tr + 3.0 * sg_t * jb + 3.0 * sg * jb_t +
                2.0 * sg_r * ja / r + 2.0 * sg * ja_r / r) +
           si * (0.5 * (sg * om_rrr + sg_r * om_rr - sg_rr * om_r - sg_rrr * om - sg * om_ttr -
                        sg_r * om_tt + sg_tt * om_r + sg_ttr * om) -
                 (1.0 / r) * (sg * om_tt - sg_tt * om - sg * om_rr + sg_rr * om)));

  const cplx rhs_radial =
      4.0 / D3 * (sg * sg_t - om * om_t) * core -
      1.0 / D2 *
          (-2.0 * m *
               ((sg * ja_r + sg_r * ja + 2.0 * r * sg_t * jb + 2.0 * r * sg * jb_t) * (sg * sg_t - om * om_t) +
                (sg * ja_t + sg_t * ja) * (sg * sg_r - om * om_r) +
                sg * ja * (sg * sg_tr + sg_t * sg_r - om * om_tr - om_t * om_r) +
                r * sg * jb * (sg_t * sg_t + sg * sg_tt - om_t * om_t - om * om_tt)) +
           si * ((sg_rr * om - sg * om_rr - sg_tt * om + sg * om_tt) * (sg * sg_t - om * om_t) +
                 2.0 * (sg * sg_t + om * om_t) * (sg_t * om_t - sg_r * om_r) +
                 (sg_t * om + sg * om_t) * (sg_r * sg_r - sg_t * sg_t + om_r * om_r - om_t * om_t) +
                 (sg * sg + om * om) * (sg_tt * om_t + sg_t * om_tt - sg_tr * om_r - sg_r * om_tr) +
                 2.0 * sg * om * (sg_tr * sg_r - sg_tt * sg_t + om_tr * om_r - om_tt * om_t))) -
      1.0 / D *
          (m * (sg_tr * ja + sg_t * ja_r + sg_r * ja_t + sg * ja_tr + r * sg_tt * jb +
                2.0 * r * sg_t * jb_t + r * sg * jb_tt) +
           si * 0.5 * (sg_ttt * om + sg_tt * om_t - sg_t * om_tt - sg * om_ttt - sg_trr * om -
                       sg_rr * om_t + sg_t * om_rr + sg * om_trr));

  SphericalMDResiduals out{};
  out.maxwell_time = std::abs(q * q * ja - rhs_time);
  out.maxwell_radial = std::abs(q * q * r * jb - rhs_radial);
  out.fierz = std::abs(ja * ja - r * r * jb * jb - D);
  out.continuity = std::abs(ja_t + 3.0 * jb + r * jb_r);
  // d.k + 2 i m omega in reduced variables, with k carrying the branch sign
  out.axial = std::abs(s * (r * jb_t + 2.0 * ja / r + ja_r) + 2.0 * iu * m * om);

  const Jet2 fa = spherical_F_a_jet(sj, pp, eps_den);
  out.maxwell_time_pipeline =
      std::abs(q * q * ja - q * (3.0 * fa.value() + r * fa.deriv(0, 1)));
  out.maxwell_radial_pipeline = std::abs(q * q * r * jb + q * r * fa.deriv(1, 0));
  return out;
}

BilinearField spherical_lifted_field(const SphericalProfile& p) {
  return [p](const Vec4& pt) {
    const Dual4 t4 = Dual4::var(0, pt[0]);
    const Dual4 x4 = Dual4::var(1, pt[1]);
    const Dual4 y4 = Dual4::var(2, pt[2]);
    const Dual4 z4 = Dual4::var(3, pt[3]);
    const Dual4 r4 = sqrt(x4 * x4 + y4 * y4 + z4 * z4);
    const double t = pt[0], r = r4.v.real();
    const SphericalJets sj = spherical_jets(p, t, r);

    BilinearState st;
    st.sigma = compose12(sj.sg, t4, r4);
    st.omega = compose12(sj.om, t4, r4);
    const Dual4 ja = compose12(sj.ja, t4, r4);
    const Dual4 jb = compose12(sj.jb, t4, r4);
    const Dual4 ka = compose12(sj.ka, t4, r4);
    const Dual4 kb = compose12(sj.kb, t4, r4);
    st.j = {ja, x4 * jb, y4 * jb, z4 * jb};
    st.k = {ka, x4 * kb, y4 * kb, z4 * kb};
    return st;
  };
}

CVec4 spherical_assembled_maxwell_residual(const SphericalProfile& p, const PhysicalParams& pp,
                                           const Vec4& x, const DiffEngine& d, bool include_Fb) {
  // F_{mu nu} assembled from the component functions; Fb from the raw
  // rational form so the cancellation claim is not assumed.
  auto F_at = [&](const Vec4& y) {
    const double r = std::sqrt(y[1] * y[1] + y[2] * y[2] + y[3] * y[3]);
    const SphericalF f = spherical_F(p, pp, y[0], r);
    const double fb = include_Fb ? spherical_F_b_raw(p, pp, y[0], r) : 0.0;
    Matrix4c F;  // complex container reused as a 4x4 value holder
    F(0, 1) = y[1] * f.Fa;
    F(0, 2) = y[2] * f.Fa;
    F(0, 3) = y[3] * f.Fa;
    F(1, 2) = y[3] * fb;
    F(1, 3) = -y[2] * fb;
    F(2, 3) = y[1] * fb;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < mu; ++nu) F(mu, nu) = -F(nu, mu);
    return F;
  };

  CVec4 res;
  std::array<Matrix4c, 4> dF;
  for (int nu = 0; nu < 4; ++nu) dF[static_cast<std::size_t>(nu)] = fd_partial(F_at, x, nu, d);
  const BilinearState st = spherical_lifted_field(p)(x);
  for (int mu = 0; mu < 4; ++mu) {
    cplx div = 0;
    for (int nu = 0; nu < 4; ++nu) div += eta(nu) * eta(mu) * dF[static_cast<std::size_t>(nu)](nu, mu);
    res[mu] = div - pp.q * st.j[static_cast<std::size_t>(mu)].v;
  }
  return res;
}

double monopole_flux(const SphericalProfile& p, const PhysicalParams& pp, double t, double r,
                     int n_theta, int n_phi) {
  // M = (-F_23, F_13, -F_12) evaluated from the raw Fb; flux of M through the
  // radius-r sphere via midpoint quadrature in (cos theta, phi).
  double flux = 0;
  const double dct = 2.0 / n_theta;
  const double dph = 2.0 * M_PI / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = -1.0 + (i + 0.5) * dct;
    const double stn = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j2 = 0; j2 < n_phi; ++j2) {
      const double ph = (j2 + 0.5) * dph;
      const Vec4 pos{{t, r * stn * std::cos(ph), r * stn * std::sin(ph), r * ct}};
      const double fb = spherical_F_b_raw(p, pp, t, r);
      const double F12 = pos[3] * fb, F13 = -pos[2] * fb, F23 = pos[1] * fb;
      const double Mx = -F23, My = F13, Mz = -F12;
      const double rhat_dot_M = (pos[1] * Mx + pos[2] * My + pos[3] * Mz) / r;
      flux += rhat_dot_M * r * r * dct * dph;
    }
  }
  return flux;
}

SphericalProfile random_consistent_spherical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const Poly2 pja = [&] {
    Poly2 p = random_poly2(rng, 3, 0.3);
    p.terms.push_back({3.0 + 0.5 * uni(rng), 0, 0});
    return p;
  }();
  const Poly2 pjb = random_poly2(rng, 3, 0.3);
  const Poly2 pmix = random_poly2(rng, 2, 0.5);

  SphericalProfile prof;
  prof.branch = uni(rng) > 0 ? +1 : -1;
  prof.ja = pja.profile();
  prof.jb = pjb.profile();
  prof.sigma = [pja, pjb, pmix](double t, double r) {
    const Jet2 ja = pja.eval(t, r), jb = pjb.eval(t, r), rj = Jet2::var_u(r);
    const Jet2 D = ja * ja - rj * rj * jb * jb;
    return sqrt(D) * cos(pmix.eval(t, r));
  };
  prof.w = [pja, pjb, pmix](double t, double r) {
    const Jet2 ja = pja.eval(t, r), jb = pjb.eval(t, r), rj = Jet2::var_u(r);
    const Jet2 D = ja * ja - rj * rj * jb * jb;
    return sqrt(D) * sin(pmix.eval(t, r));
  };
  return prof;
}

}  // namespace fierzmd
