#include "fierzmd/cylindrical.hpp"

#include <cmath>

namespace fierzmd {

namespace {

void check_density(const cplx& D, double eps_den) {
  if (std::abs(D) <= eps_den)
    throw DegenerateDensityError("cylindrical reduction: sigma^2 - omega^2 vanishes");
}

// Everything the component-function formulas consume, precomputed as jets.
struct Ctx {
  Jet2 ja, jb, jc, jd, ka, kb, kc, kd, sg, om, rho, D;
  Jet2 ja_t, jb_t, jc_t, jd_t, ka_t, kb_t, kc_t, kd_t, sg_t, om_t;
  Jet2 ja_r, jb_r, jc_r, jd_r, ka_r, kb_r, kc_r, kd_r, sg_r, om_r;
  Jet2 ja_tt, jb_tt, jc_tt, jd_tt, ka_tt, kb_tt, kc_tt, kd_tt, sg_tt, om_tt;
  Jet2 ja_tr, jb_tr, jc_tr, jd_tr, ka_tr, kb_tr, kc_tr, kd_tr, sg_tr, om_tr;
  Jet2 ja_rr, jb_rr, jc_rr, jd_rr, ka_rr, kb_rr, kc_rr, kd_rr, sg_rr, om_rr;
  double q, m;
};

Ctx make_ctx(const CylindricalJets& cj, const PhysicalParams& pp, double eps_den) {
  Ctx c;
  c.q = pp.q;
  c.m = pp.mass;
  c.rho = cj.rho;
  auto fill = [](const Jet2& f, Jet2& base, Jet2& ft, Jet2& fr, Jet2& ftt, Jet2& ftr, Jet2& frr) {
    base = f;
    ft = f.dt();
    fr = f.du();
    ftt = ft.dt();
    ftr = ft.du();
    frr = fr.du();
  };
  fill(cj.ja, c.ja, c.ja_t, c.ja_r, c.ja_tt, c.ja_tr, c.ja_rr);
  fill(cj.jb, c.jb, c.jb_t, c.jb_r, c.jb_tt, c.jb_tr, c.jb_rr);
  fill(cj.jc, c.jc, c.jc_t, c.jc_r, c.jc_tt, c.jc_tr, c.jc_rr);
  fill(cj.jd, c.jd, c.jd_t, c.jd_r, c.jd_tt, c.jd_tr, c.jd_rr);
  fill(cj.ka, c.ka, c.ka_t, c.ka_r, c.ka_tt, c.ka_tr, c.ka_rr);
  fill(cj.kb, c.kb, c.kb_t, c.kb_r, c.kb_tt, c.kb_tr, c.kb_rr);
  fill(cj.kc, c.kc, c.kc_t, c.kc_r, c.kc_tt, c.kc_tr, c.kc_rr);
  fill(cj.kd, c.kd, c.kd_t, c.kd_r, c.kd_tt, c.kd_tr, c.kd_rr);
  fill(cj.sg, c.sg, c.sg_t, c.sg_r, c.sg_tt, c.sg_tr, c.sg_rr);
  fill(cj.om, c.om, c.om_t, c.om_r, c.om_tt, c.om_tr, c.om_rr);
  c.D = c.sg * c.sg - c.om * c.om;
  check_density(c.D.value(), eps_den);
  return c;
}

using Terms = std::vector<std::pair<std::string, Jet2>>;

Terms fa_terms(const Ctx& c) {
  const Jet2 grad_t = c.sg * c.sg_t - c.om * c.om_t;
  const Jet2 grad_r = c.sg * c.sg_r - c.om * c.om_r;
  const Jet2 mix_t = c.sg_t * c.om - c.sg * c.om_t;
  const Jet2 mix_r = c.sg_r * c.om - c.sg * c.om_r;
  const Jet2 p1 = Jet2(-2.0) / (c.q * c.D * c.D * c.D);
  const Jet2 p2 = Jet2(1.0) / (2.0 * c.q * c.D * c.D);

  Terms t;
  t.emplace_back("a1.1", p1 * ((c.jd * c.kc_t - c.jc * c.kd_t - c.kd * c.jc_t + c.kc * c.jd_t -
                                2.0 * c.m * c.sg * c.jb) *
                               grad_t * c.D));
  t.emplace_back("a1.2", p1 * ((c.jc * c.kd_r - c.jd * c.kc_r - c.kc * c.jd_r + c.kd * c.jc_r) *
                               grad_r * c.D));
  t.emplace_back("a1.3", p1 * ((c.jc * c.kd - c.jd * c.kc) * grad_t * grad_t));
  t.emplace_back("a1.4", p1 * ((c.jd * c.kc - c.jc * c.kd) * grad_r * grad_r));
  t.emplace_back("a1.5", p1 * ((2.0 * (c.jc * c.kd - c.jd * c.kc - c.m * c.sg * c.ja) / c.rho) *
                               grad_r * c.D));
  t.emplace_back("a1.6",
                 p1 * (iu * ((c.jb * c.ka - c.ja * c.kb) * mix_t * grad_t +
                             (c.ja * c.kb - c.jb * c.ka) * mix_r * grad_r)));

  t.emplace_back("a2.1", p2 * ((c.jd * c.kc_tt + 2.0 * c.jd_t * c.kc_t + c.jd_tt * c.kc -
                                c.jc * c.kd_tt - 2.0 * c.jc_t * c.kd_t - c.jc_tt * c.kd +
                                c.jc * c.kd_rr + 2.0 * c.jc_r * c.kd_r + c.jc_rr * c.kd -
                                c.jd * c.kc_rr - 2.0 * c.jd_r * c.kc_r - c.jd_rr * c.kc -
                                2.0 * c.m * c.sg_t * c.jb - 2.0 * c.m * c.sg * c.jb_t) *
                               c.D));
  t.emplace_back("a2.2", p2 * ((c.jd * c.kc_t + c.jd_t * c.kc - c.jc * c.kd_t - c.jc_t * c.kd -
                                4.0 * c.m * c.sg * c.jb) *
                               grad_t));
  t.emplace_back("a2.3",
                 p2 * ((c.jc * c.kd_r + c.jc_r * c.kd - c.jd * c.kc_r - c.jd_r * c.kc) * grad_r));
  t.emplace_back("a2.4", p2 * ((c.jc * c.kd - c.jd * c.kc) *
                               (c.sg_t * c.sg_t + c.sg * c.sg_tt - c.om_t * c.om_t - c.om * c.om_tt)));
  t.emplace_back("a2.5", p2 * ((c.jd * c.kc - c.jc * c.kd) *
                               (c.sg_r * c.sg_r + c.sg * c.sg_rr - c.om_r * c.om_r - c.om * c.om_rr)));
  t.emplace_back("a2.6", p2 * ((3.0 * c.jc * c.kd_r + 3.0 * c.jc_r * c.kd - 3.0 * c.jd * c.kc_r -
                                3.0 * c.jd_r * c.kc - 2.0 * c.m * c.sg_r * c.ja -
                                2.0 * c.m * c.sg * c.ja_r) /
                               c.rho * c.D));
  t.emplace_back("a2.7", p2 * ((3.0 * c.jc * c.kd - 3.0 * c.jd * c.kc - 4.0 * c.m * c.sg * c.ja) /
                               c.rho * grad_r));
  t.emplace_back(
      "a2.8",
      p2 * (iu * ((c.jb * c.ka_t + c.jb_t * c.ka - c.ja * c.kb_t - c.ja_t * c.kb) * mix_t +
                  (c.ja * c.kb_r + c.ja_r * c.kb - c.jb * c.ka_r - c.jb_r * c.ka) * mix_r +
                  (c.jb * c.ka - c.ja * c.kb) * (c.sg_tt * c.om - c.sg * c.om_tt) +
                  (c.ja * c.kb - c.jb * c.ka) * (c.sg_rr * c.om - c.sg * c.om_rr) +
                  (c.ja * c.kb - c.jb * c.ka) / c.rho * mix_r)));
  t.emplace_back("a2.9", p2 * ((c.jd * c.ka - c.ja * c.kd) *
                               (c.jb * c.jc_t - c.jc * c.jb_t - c.kb * c.kc_t + c.kc * c.kb_t)));
  t.emplace_back("a2.10", p2 * ((c.jc * c.kb - c.jb * c.kc) *
                                (c.jd * c.ja_t - c.ja * c.jd_t - c.kd * c.ka_t + c.ka * c.kd_t)));
  t.emplace_back(
      "a2.11",
      p2 * ((-1.0) * c.rho *
            ((c.ja * c.kb - c.jb * c.ka) *
                 (c.jd_t * c.jc_r - c.jc_t * c.jd_r - c.kd_t * c.kc_r + c.kc_t * c.kd_r) +
             (c.ja * c.kc - c.jc * c.ka) *
                 (c.jb_t * c.jd_r - c.jd_t * c.jb_r - c.kb_t * c.kd_r + c.kd_t * c.kb_r) +
             (c.ja * c.kd - c.jd * c.ka) *
                 (c.jc_t * c.jb_r - c.jb_t * c.jc_r - c.kc_t * c.kb_r + c.kb_t * c.kc_r) +
             (c.jb * c.kc - c.jc * c.kb) *
                 (c.jd_t * c.ja_r - c.ja_t * c.jd_r - c.kd_t * c.ka_r + c.ka_t * c.kd_r) +
             (c.jb * c.kd - c.jd * c.kb) *
                 (c.ja_t * c.jc_r - c.jc_t * c.ja_r - c.ka_t * c.kc_r + c.kc_t * c.ka_r) +
             (c.jc * c.kd - c.jd * c.kc) *
                 (c.jb_t * c.ja_r - c.ja_t * c.jb_r - c.kb_t * c.ka_r + c.ka_t * c.kb_r))));
  return t;
}

Terms fb_terms(const Ctx& c) {
  const Jet2 grad_t = c.sg * c.sg_t - c.om * c.om_t;
  const Jet2 grad_r = c.sg * c.sg_r - c.om * c.om_r;
  const Jet2 mix_t = c.sg_t * c.om - c.sg * c.om_t;
  const Jet2 mix_r = c.sg_r * c.om - c.sg * c.om_r;
  const Jet2 p1 = (Jet2(-2.0) * grad_t) / (c.q * c.D * c.D * c.D);
  const Jet2 p2 = Jet2(1.0) / (2.0 * c.q * c.D * c.D);

  Terms t;
  t.emplace_back("b1.1", p1 * ((c.jb * c.kd_t + c.jb_t * c.kd - c.jd * c.kb_t - c.jd_t * c.kb -
                                2.0 * c.m * c.sg * c.jc) *
                               c.D));
  t.emplace_back("b1.2", p1 * ((c.jd * c.kb - c.jb * c.kd) * grad_t));
  t.emplace_back("b1.3", p1 * ((c.ja * c.kd_r + c.ja_r * c.kd - c.jd * c.ka_r - c.jd_r * c.ka) /
                               c.rho * c.D));
  t.emplace_back("b1.4", p1 * ((c.jd * c.ka - c.ja * c.kd) / c.rho * grad_r));
  t.emplace_back("b1.5", p1 * (iu * ((c.jc * c.ka - c.ja * c.kc) * mix_t +
                                     c.rho * (c.jc * c.kb - c.jb * c.kc) * mix_r)));

  t.emplace_back("b2.1", p2 * ((c.jb * c.kd_tt + 2.0 * c.jb_t * c.kd_t + c.jb_tt * c.kd -
                                c.jd * c.kb_tt - 2.0 * c.jd_t * c.kb_t - c.jd_tt * c.kb -
                                2.0 * c.m * c.sg_t * c.jc - 2.0 * c.m * c.sg * c.jc_t) *
                               c.D));
  t.emplace_back("b2.2", p2 * ((c.jb * c.kd_t + c.jb_t * c.kd - c.jd * c.kb_t - c.jd_t * c.kb -
                                4.0 * c.m * c.sg * c.jc) *
                               grad_t));
  t.emplace_back("b2.3", p2 * ((c.jd * c.kb - c.jb * c.kd) *
                               (c.sg_t * c.sg_t + c.sg * c.sg_tt - c.om_t * c.om_t - c.om * c.om_tt)));
  t.emplace_back("b2.4", p2 * ((c.ja * c.kd_tr + c.ja_t * c.kd_r + c.ja_r * c.kd_t + c.ja_tr * c.kd -
                                c.jd * c.ka_tr - c.jd_t * c.ka_r - c.jd_r * c.ka_t - c.jd_tr * c.ka) /
                               c.rho * c.D));
  t.emplace_back("b2.5", p2 * (2.0 * (c.ja * c.kd_r + c.ja_r * c.kd - c.jd * c.ka_r - c.jd_r * c.ka) /
                               c.rho * grad_t));
  t.emplace_back("b2.6", p2 * ((c.jd * c.ka_t + c.jd_t * c.ka - c.ja * c.kd_t - c.ja_t * c.kd) /
                               c.rho * grad_r));
  t.emplace_back("b2.7", p2 * ((c.jd * c.ka - c.ja * c.kd) / c.rho *
                               (c.sg_t * c.sg_r + c.sg * c.sg_tr - c.om_t * c.om_r - c.om * c.om_tr)));
  t.emplace_back(
      "b2.8",
      p2 * (iu * ((c.jc * c.ka_t + c.jc_t * c.ka - c.ja * c.kc_t - c.ja_t * c.kc) * mix_t +
                  (c.jc * c.ka - c.ja * c.kc) * (c.sg_tt * c.om - c.sg * c.om_tt) +
                  c.rho * (c.jc * c.kb_t + c.jc_t * c.kb - c.jb * c.kc_t - c.jb_t * c.kc) * mix_r +
                  c.rho * (c.jc * c.kb - c.jb * c.kc) *
                      (c.sg_r * c.om_t + c.sg_tr * c.om - c.sg_t * c.om_r - c.sg * c.om_tr))));
  t.emplace_back("b2.9", p2 * ((c.ja * c.kd - c.jd * c.ka) *
                               (c.jb * c.jb_t + c.jc * c.jc_t - c.kb * c.kb_t - c.kc * c.kc_t)));
  t.emplace_back("b2.10", p2 * ((c.jb * c.kb + c.jc * c.kc) *
                                (c.ja_t * c.jd - c.ja * c.jd_t + c.ka_t * c.kd - c.ka * c.kd_t)));
  t.emplace_back("b2.11",
                 p2 * ((c.jb * c.jb + c.jc * c.jc) * (c.jd_t * c.ka - c.ja_t * c.kd)));
  t.emplace_back("b2.12",
                 p2 * ((c.kb * c.kb + c.kc * c.kc) * (c.ja * c.kd_t - c.jd * c.ka_t)));
  return t;
}

Terms fc_terms(const Ctx& c) {
  const Jet2 grad_t = c.sg * c.sg_t - c.om * c.om_t;
  const Jet2 grad_r = c.sg * c.sg_r - c.om * c.om_r;
  const Jet2 mix_t = c.sg_t * c.om - c.sg * c.om_t;
  const Jet2 mix_r = c.sg_r * c.om - c.sg * c.om_r;
  // Overall sign chosen so that the assembled tensor (F_03 = -F_c) equals the
  // four-curl of the invariant potential with properly lowered components;
  // the four-curl route and the ambient pipeline both fix it this way.
  const Jet2 p1 = (Jet2(-2.0) * grad_t) / (c.q * c.D * c.D * c.D);
  const Jet2 p2 = Jet2(1.0) / (2.0 * c.q * c.D * c.D);

  Terms t;
  t.emplace_back("c1.1", p1 * (2.0 * (c.jc * c.ka - c.ja * c.kc - c.m * c.sg * c.jd) * c.D));
  t.emplace_back("c1.2", p1 * (c.rho * (c.jc * c.ka_r + c.jc_r * c.ka - c.ja * c.kc_r - c.ja_r * c.kc) *
                               c.D));
  t.emplace_back("c1.3", p1 * (c.rho * (c.ja * c.kc - c.jc * c.ka) * grad_r));
  t.emplace_back("c1.4", p1 * (c.rho * c.rho *
                               (c.jc * c.kb_t + c.jc_t * c.kb - c.jb * c.kc_t - c.jb_t * c.kc) * c.D));
  t.emplace_back("c1.5", p1 * (c.rho * c.rho * (c.jb * c.kc - c.jc * c.kb) * grad_t));
  t.emplace_back("c1.6", p1 * (iu * ((c.jd * c.ka - c.ja * c.kd) * mix_t +
                                     c.rho * (c.jd * c.kb - c.jb * c.kd) * mix_r)));

  t.emplace_back("c2.1", p2 * (2.0 * (c.jc * c.ka_t + c.jc_t * c.ka - c.ja * c.kc_t - c.ja_t * c.kc -
                                      c.m * c.sg_t * c.jd - c.m * c.sg * c.jd_t) *
                               c.D));
  t.emplace_back("c2.2", p2 * (4.0 * (c.jc * c.ka - c.ja * c.kc - c.m * c.sg * c.jd) * grad_t));
  t.emplace_back("c2.3", p2 * (c.rho * (c.jc * c.ka_tr + c.jc_t * c.ka_r + c.jc_r * c.ka_t +
                                        c.jc_tr * c.ka - c.ja * c.kc_tr - c.ja_t * c.kc_r -
                                        c.ja_r * c.kc_t - c.ja_tr * c.kc) *
                               c.D));
  t.emplace_back("c2.4", p2 * (2.0 * c.rho *
                               (c.jc * c.ka_r + c.jc_r * c.ka - c.ja * c.kc_r - c.ja_r * c.kc) *
                               grad_t));
  t.emplace_back("c2.5", p2 * (c.rho *
                               (c.ja * c.kc_t + c.ja_t * c.kc - c.jc * c.ka_t - c.jc_t * c.ka) *
                               grad_r));
  t.emplace_back("c2.6", p2 * (c.rho * (c.ja * c.kc - c.jc * c.ka) *
                               (c.sg_t * c.sg_r + c.sg * c.sg_tr - c.om_t * c.om_r - c.om * c.om_tr)));
  t.emplace_back("c2.7", p2 * (c.rho * c.rho *
                               (c.jc * c.kb_tt + 2.0 * c.jc_t * c.kb_t + c.jc_tt * c.kb -
                                c.jb * c.kc_tt - 2.0 * c.jb_t * c.kc_t - c.jb_tt * c.kc) *
                               c.D));
  t.emplace_back("c2.8", p2 * (c.rho * c.rho *
                               (c.jc * c.kb_t + c.jc_t * c.kb - c.jb * c.kc_t - c.jb_t * c.kc) *
                               grad_t));
  t.emplace_back("c2.9", p2 * (c.rho * c.rho * (c.jb * c.kc - c.jc * c.kb) *
                               (c.sg_t * c.sg_t + c.sg * c.sg_tt - c.om_t * c.om_t - c.om * c.om_tt)));
  t.emplace_back(
      "c2.10",
      p2 * (iu * ((c.jd * c.ka - c.ja * c.kd) * (c.sg_tt * c.om - c.sg * c.om_tt) +
                  (c.jd * c.ka_t + c.jd_t * c.ka - c.ja * c.kd_t - c.ja_t * c.kd) * mix_t +
                  c.rho * (c.jd * c.kb_t + c.jd_t * c.kb - c.jb * c.kd_t - c.jb_t * c.kd) * mix_r +
                  c.rho * (c.jd * c.kb - c.jb * c.kd) *
                      (c.sg_r * c.om_t + c.sg_tr * c.om - c.sg_t * c.om_r - c.sg * c.om_tr))));
  return t;
}

Terms fd_terms(const Ctx& c) {
  const Jet2 grad_t = c.sg * c.sg_t - c.om * c.om_t;
  const Jet2 grad_r = c.sg * c.sg_r - c.om * c.om_r;
  const Jet2 mix_t = c.sg_t * c.om - c.sg * c.om_t;
  const Jet2 mix_r = c.sg_r * c.om - c.sg * c.om_r;
  const Jet2 p1 = Jet2(-1.0) / (2.0 * c.q * c.D * c.D);
  const Jet2 p2 = (Jet2(2.0) * grad_r) / (c.q * c.D * c.D * c.D);

  Terms t;
  t.emplace_back("d1.1", p1 * ((2.0 * c.jb * c.kd_t + 2.0 * c.jb_t * c.kd - 2.0 * c.jd * c.kb_t -
                                2.0 * c.jd_t * c.kb + c.ja * c.kd_rr + 2.0 * c.ja_r * c.kd_r +
                                c.ja_rr * c.kd - c.jd * c.ka_rr - 2.0 * c.jd_r * c.ka_r -
                                c.jd_rr * c.ka - 4.0 * c.m * c.sg * c.jc) *
                               c.D));
  t.emplace_back("d1.2", p1 * (2.0 * (c.jd * c.kb - c.jb * c.kd) * grad_t));
  t.emplace_back("d1.3",
                 p1 * ((c.ja * c.kd_r + c.ja_r * c.kd - c.jd * c.ka_r - c.jd_r * c.ka) * grad_r));
  t.emplace_back("d1.4", p1 * ((c.jd * c.ka - c.ja * c.kd) *
                               (c.sg_r * c.sg_r + c.sg * c.sg_rr - c.om_r * c.om_r - c.om * c.om_rr)));
  t.emplace_back("d1.5", p1 * ((c.ja * c.kd_r + c.ja_r * c.kd - c.jd * c.ka_r - c.jd_r * c.ka) /
                               c.rho * c.D));
  t.emplace_back("d1.6", p1 * ((c.jd * c.ka - c.ja * c.kd) / c.rho * grad_r));
  t.emplace_back("d1.7", p1 * (c.rho *
                               (c.jb * c.kd_tr + c.jb_t * c.kd_r + c.jb_r * c.kd_t + c.jb_tr * c.kd -
                                c.jd * c.kb_tr - c.jd_t * c.kb_r - c.jd_r * c.kb_t - c.jd_tr * c.kb -
                                2.0 * c.m * c.sg_r * c.jc - 2.0 * c.m * c.sg * c.jc_r) *
                               c.D));
  t.emplace_back("d1.8", p1 * (c.rho *
                               (c.jd * c.kb_r + c.jd_r * c.kb - c.jb * c.kd_r - c.jb_r * c.kd) *
                               grad_t));
  t.emplace_back("d1.9", p1 * (2.0 * c.rho *
                               (c.jb * c.kd_t + c.jb_t * c.kd - c.jd * c.kb_t - c.jd_t * c.kb -
                                2.0 * c.m * c.sg * c.jc) *
                               grad_r));
  t.emplace_back("d1.10", p1 * (c.rho * (c.jd * c.kb - c.jb * c.kd) *
                                (c.sg_t * c.sg_r + c.sg * c.sg_tr - c.om_t * c.om_r - c.om * c.om_tr)));
  t.emplace_back(
      "d1.11",
      p1 * (iu * (2.0 * (c.jc * c.ka - c.ja * c.kc) * mix_t +
                  c.rho * (c.jc * c.ka_r + c.jc_r * c.ka - c.ja * c.kc_r - c.ja_r * c.kc) * mix_t +
                  3.0 * c.rho * (c.jc * c.kb - c.jb * c.kc) * mix_r +
                  c.rho * (c.jc * c.ka - c.ja * c.kc) *
                      (c.sg_t * c.om_r + c.sg_tr * c.om - c.sg_r * c.om_t - c.sg * c.om_tr) +
                  c.rho * c.rho * (c.jc * c.kb - c.jb * c.kc) * (c.sg_rr * c.om - c.sg * c.om_rr) +
                  c.rho * c.rho * mix_r *
                      (c.jc * c.kb_r + c.jc_r * c.kb - c.jb * c.kc_r - c.jb_r * c.kc))));
  t.emplace_back("d1.12", p1 * ((c.ja * c.kd - c.jd * c.ka) *
                                (c.jb * c.jb + c.jc * c.jc - c.kb * c.kb - c.kc * c.kc)));
  t.emplace_back(
      "d1.13",
      p1 * ((-1.0) * c.rho *
            ((c.ja * c.kb - c.jb * c.ka) * (c.jb * c.jd_r - c.kb * c.kd_r) +
             (c.ja * c.kc - c.jc * c.ka) * (c.jc * c.jd_r - c.kc * c.kd_r) +
             (c.jb * c.kd - c.jd * c.kb) * (c.jb * c.ja_r - c.kb * c.ka_r) +
             (c.jc * c.kd - c.jd * c.kc) * (c.jc * c.ja_r - c.kc * c.ka_r) +
             (c.jd * c.ka - c.ja * c.kd) *
                 (c.jb * c.jb_r + c.jc * c.jc_r - c.kb * c.kb_r - c.kc * c.kc_r))));

  t.emplace_back("d2.1", p2 * ((c.ja_r * c.kd + c.ja * c.kd_r - c.jd * c.ka_r - c.jd_r * c.ka) * c.D));
  t.emplace_back("d2.2", p2 * ((c.jd * c.ka - c.ja * c.kd) * grad_r));
  t.emplace_back("d2.3", p2 * (c.rho * (c.jd * c.kb - c.jb * c.kd) * grad_t));
  t.emplace_back("d2.4", p2 * (c.rho *
                               (c.jb * c.kd_t + c.jb_t * c.kd - c.jd * c.kb_t - c.jd_t * c.kb -
                                2.0 * c.m * c.sg * c.jc) *
                               c.D));
  t.emplace_back("d2.5", p2 * (iu * (c.rho * (c.jc * c.ka - c.ja * c.kc) * mix_t +
                                     c.rho * c.rho * (c.jc * c.kb - c.jb * c.kc) * mix_r)));
  return t;
}

Terms fe_terms(const Ctx& c) {
  const Jet2 grad_t = c.sg * c.sg_t - c.om * c.om_t;
  const Jet2 grad_r = c.sg * c.sg_r - c.om * c.om_r;
  const Jet2 mix_t = c.sg_t * c.om - c.sg * c.om_t;
  const Jet2 mix_r = c.sg_r * c.om - c.sg * c.om_r;
  // Sign fixed the same way as F_c (F_13 = x F_e must match the four-curl).
  const Jet2 p1 = (Jet2(2.0) * grad_r) / (c.q * c.D * c.D * c.D);
  const Jet2 p2 = Jet2(-1.0) / (2.0 * c.q * c.D * c.D);

  Terms t;
  t.emplace_back("e1.1",
                 p1 * ((c.jc * c.ka_r + c.jc_r * c.ka - c.ja * c.kc_r - c.ja_r * c.kc) * c.D));
  t.emplace_back("e1.2", p1 * ((c.ja * c.kc - c.jc * c.ka) * grad_r));
  t.emplace_back("e1.3", p1 * (2.0 * (c.jc * c.ka - c.ja * c.kc - c.m * c.sg * c.jd) / c.rho * c.D));
  t.emplace_back("e1.4", p1 * (c.rho *
                               (c.jc * c.kb_t + c.jc_t * c.kb - c.jb * c.kc_t - c.jb_t * c.kc) *
                               c.D));
  t.emplace_back("e1.5", p1 * (c.rho * (c.jb * c.kc - c.jc * c.kb) * grad_t));
  t.emplace_back("e1.6", p1 * (iu * ((c.jd * c.kb - c.jb * c.kd) * mix_r +
                                     (c.jd * c.ka - c.ja * c.kd) / c.rho * mix_t)));

  t.emplace_back("e2.1", p2 * ((2.0 * c.jc * c.kb_t + 2.0 * c.jc_t * c.kb - 2.0 * c.jb * c.kc_t -
                                2.0 * c.jb_t * c.kc + c.jc * c.ka_rr + 2.0 * c.jc_r * c.ka_r +
                                c.jc_rr * c.ka - c.ja * c.kc_rr - 2.0 * c.ja_r * c.kc_r -
                                c.ja_rr * c.kc) *
                               c.D));
  t.emplace_back("e2.2", p2 * (2.0 * (c.jb * c.kc - c.jc * c.kb) * grad_t));
  t.emplace_back("e2.3",
                 p2 * ((c.jc * c.ka_r + c.jc_r * c.ka - c.ja * c.kc_r - c.ja_r * c.kc) * grad_r));
  t.emplace_back("e2.4", p2 * ((c.ja * c.kc - c.jc * c.ka) *
                               (c.sg_r * c.sg_r + c.sg * c.sg_rr - c.om_r * c.om_r - c.om * c.om_rr)));
  t.emplace_back("e2.5", p2 * ((3.0 * c.jc * c.ka_r + 3.0 * c.jc_r * c.ka - 3.0 * c.ja * c.kc_r -
                                3.0 * c.ja_r * c.kc - 2.0 * c.m * c.sg_r * c.jd -
                                2.0 * c.m * c.sg * c.jd_r) /
                               c.rho * c.D));
  t.emplace_back("e2.6", p2 * ((3.0 * c.jc * c.ka - 3.0 * c.ja * c.kc - 4.0 * c.m * c.sg * c.jd) /
                               c.rho * grad_r));
  t.emplace_back("e2.7", p2 * (c.rho *
                               (c.jc * c.kb_tr + c.jc_t * c.kb_r + c.jc_r * c.kb_t + c.jc_tr * c.kb -
                                c.jb * c.kc_tr - c.jb_t * c.kc_r - c.jb_r * c.kc_t - c.jb_tr * c.kc) *
                               c.D));
  t.emplace_back("e2.8", p2 * (c.rho *
                               (c.jb * c.kc_r + c.jb_r * c.kc - c.jc * c.kb_r - c.jc_r * c.kb) *
                               grad_t));
  t.emplace_back("e2.9", p2 * (2.0 * c.rho *
                               (c.jc * c.kb_t + c.jc_t * c.kb - c.jb * c.kc_t - c.jb_t * c.kc) *
                               grad_r));
  t.emplace_back("e2.10", p2 * (c.rho * (c.jb * c.kc - c.jc * c.kb) *
                                (c.sg_t * c.sg_r + c.sg * c.sg_tr - c.om_t * c.om_r - c.om * c.om_tr)));
  t.emplace_back(
      "e2.11",
      p2 * (iu * ((c.jd * c.kb_r + c.jd_r * c.kb - c.jb * c.kd_r - c.jb_r * c.kd) * mix_r +
                  (c.jd * c.kb - c.jb * c.kd) * (c.sg_rr * c.om - c.sg * c.om_rr) +
                  (c.jd * c.ka_r + c.jd_r * c.ka - c.ja * c.kd_r - c.ja_r * c.kd) / c.rho * mix_t +
                  (c.jd * c.kb - c.jb * c.kd) / c.rho * mix_r +
                  (c.jd * c.ka - c.ja * c.kd) / c.rho *
                      (c.sg_tr * c.om + c.sg_t * c.om_r - c.sg_r * c.om_t - c.sg * c.om_tr))));
  return t;
}

Terms make_terms(const Ctx& c, char which) {
  switch (which) {
    case 'a': return fa_terms(c);
    case 'b': return fb_terms(c);
    case 'c': return fc_terms(c);
    case 'd': return fd_terms(c);
    case 'e': return fe_terms(c);
    default: throw std::invalid_argument("cylindrical F component must be 'a'..'e'");
  }
}

Jet2 sum_terms(const Terms& t) {
  Jet2 s;
  for (const auto& [_, v] : t) s = s + v;
  return s;
}

}  // namespace

CylindricalJets cylindrical_jets(const CylindricalProfile& p, double t, double rho) {
  if (rho <= 0.0) throw std::domain_error("cylindrical reduction: rho must be positive");
  CylindricalJets cj;
  cj.t = t;
  cj.rv = rho;
  cj.rho = Jet2::var_u(rho);
  cj.ja = p.ja(t, rho);
  cj.jb = p.jb(t, rho);
  cj.jc = p.jc(t, rho);
  cj.jd = p.jd(t, rho);
  cj.ka = p.ka(t, rho);
  cj.kb = p.kb(t, rho);
  cj.kc = p.kc(t, rho);
  cj.kd = p.kd(t, rho);
  cj.sg = p.sigma(t, rho);
  cj.om = iu * p.w(t, rho);
  return cj;
}

std::vector<KCandidate> cylindrical_k_elimination(double ja, double jb, double jc, double jd,
                                                  double kb, double kc, double rho) {
  const double S = rho * rho * (jb * kb + jc * kc);
  const double lead = jd * jd - ja * ja;
  if (std::abs(lead) < 1e-12 * std::max(1.0, ja * ja + jd * jd))
    throw std::domain_error("cylindrical k elimination: degenerate quadratic (jd^2 = ja^2)");
  const double ja2 = ja * ja, jd2 = jd * jd;
  const double disc = (ja2 - jd2) * (ja2 - jd2) -
                      rho * rho * (ja2 - jd2) * (jb * jb + jc * jc + kb * kb + kc * kc) +
                      S * S;
  if (disc < 0.0)
    throw std::domain_error("cylindrical k elimination: infeasible (negative discriminant)");
  if (std::abs(ja) < 1e-300)
    throw std::domain_error("cylindrical k elimination: ja vanishes");
  const double root = std::sqrt(disc);
  std::vector<KCandidate> out;
  for (const double sgn : {+1.0, -1.0}) {
    const double kd = (-jd * S + sgn * ja * root) / lead;
    const double ka = (S + jd * kd) / ja;
    out.push_back({ka, kd});
    if (root == 0.0) break;
  }
  return out;
}

std::vector<KCandidate> cylindrical_k_elimination(const CylindricalProfile& p, double t, double rho) {
  const CylindricalJets cj = cylindrical_jets(p, t, rho);
  return cylindrical_k_elimination(cj.ja.value().real(), cj.jb.value().real(),
                                   cj.jc.value().real(), cj.jd.value().real(),
                                   cj.kb.value().real(), cj.kc.value().real(), rho);
}

CylindricalBJets cylindrical_B_jets(const CylindricalJets& cj, const PhysicalParams& pp,
                                    double eps_den) {
  const Ctx c = make_ctx(cj, pp, eps_den);
  const Jet2 grad_t = c.sg * c.sg_t - c.om * c.om_t;
  const Jet2 grad_r = c.sg * c.sg_r - c.om * c.om_r;
  const Jet2 mix_t = c.sg_t * c.om - c.sg * c.om_t;
  const Jet2 mix_r = c.sg_r * c.om - c.sg * c.om_r;
  const Jet2 denom = 2.0 * c.q * c.D * c.D;

  CylindricalBJets out;
  out.Ba = ((c.rho * (c.jc_r * c.kd + c.jc * c.kd_r - c.jd_r * c.kc - c.jd * c.kc_r) +
             2.0 * (c.jc * c.kd - c.jd * c.kc) - 2.0 * c.m * c.sg * c.ja) *
                c.D +
            c.rho * (c.jd * c.kc - c.jc * c.kd) * grad_r +
            iu * c.rho * (c.ja * c.kb - c.jb * c.ka) * mix_r) /
           denom;
  out.Bb = ((c.jd_t * c.kc + c.jd * c.kc_t - c.jc_t * c.kd - c.jc * c.kd_t -
             2.0 * c.m * c.sg * c.jb) *
                c.D +
            (c.jc * c.kd - c.jd * c.kc) * grad_t + iu * (c.jb * c.ka - c.ja * c.kb) * mix_t) /
           denom;
  out.Bc = ((c.jb_t * c.kd + c.jb * c.kd_t - c.jd_t * c.kb - c.jd * c.kb_t +
             (c.ja_r * c.kd + c.ja * c.kd_r - c.jd_r * c.ka - c.jd * c.ka_r) / c.rho -
             2.0 * c.m * c.sg * c.jc) *
                c.D +
            (c.jd * c.kb - c.jb * c.kd) * grad_t + (c.jd * c.ka - c.ja * c.kd) / c.rho * grad_r +
            iu * (c.jc * c.ka - c.ja * c.kc) * mix_t +
            iu * c.rho * (c.jc * c.kb - c.jb * c.kc) * mix_r) /
           denom;
  out.Bd = ((c.rho * c.rho * (c.jc_t * c.kb + c.jc * c.kb_t - c.jb_t * c.kc - c.jb * c.kc_t) +
             c.rho * (c.jc_r * c.ka + c.jc * c.ka_r - c.ja_r * c.kc - c.ja * c.kc_r) +
             2.0 * (c.jc * c.ka - c.ja * c.kc) - 2.0 * c.m * c.sg * c.jd) *
                c.D +
            c.rho * c.rho * (c.jb * c.kc - c.jc * c.kb) * grad_t +
            c.rho * (c.ja * c.kc - c.jc * c.ka) * grad_r +
            iu * (c.jd * c.ka - c.ja * c.kd) * mix_t +
            iu * c.rho * (c.jd * c.kb - c.jb * c.kd) * mix_r) /
           denom;
  return out;
}

CylindricalB cylindrical_B(const CylindricalProfile& p, const PhysicalParams& pp, double t,
                           double rho, double eps_den) {
  const CylindricalBJets b = cylindrical_B_jets(cylindrical_jets(p, t, rho), pp, eps_den);
  return {b.Ba.value().real(), b.Bb.value().real(), b.Bc.value().real(), b.Bd.value().real()};
}

CylindricalFJets cylindrical_F_jets(const CylindricalJets& cj, const PhysicalParams& pp,
                                    double eps_den) {
  const Ctx c = make_ctx(cj, pp, eps_den);
  CylindricalFJets out;
  out.Fa = sum_terms(fa_terms(c));
  out.Fb = sum_terms(fb_terms(c));
  out.Fc = sum_terms(fc_terms(c));
  out.Fd = sum_terms(fd_terms(c));
  out.Fe = sum_terms(fe_terms(c));
  return out;
}

CylindricalF cylindrical_F(const CylindricalProfile& p, const PhysicalParams& pp, double t,
                           double rho, double eps_den) {
  const CylindricalFJets f = cylindrical_F_jets(cylindrical_jets(p, t, rho), pp, eps_den);
  return {f.Fa.value().real(), f.Fb.value().real(), f.Fc.value().real(), f.Fd.value().real(),
          f.Fe.value().real()};
}

std::vector<std::pair<std::string, cplx>> cylindrical_F_terms(const CylindricalProfile& p,
                                                              const PhysicalParams& pp, double t,
                                                              double rho, char which) {
  const Ctx c = make_ctx(cylindrical_jets(p, t, rho), pp, 1e-10);
  std::vector<std::pair<std::string, cplx>> out;
  for (const auto& [name, jet] : make_terms(c, which)) out.emplace_back(name, jet.value());
  return out;
}

CylindricalMDResiduals cylindrical_md_residuals(const CylindricalProfile& p,
                                                const PhysicalParams& pp, double t, double rho,
                                                double eps_den) {
  const CylindricalJets cj = cylindrical_jets(p, t, rho);
  const CylindricalFJets f = cylindrical_F_jets(cj, pp, eps_den);
  const double q = pp.q;

  const cplx ja = cj.ja.value(), jb = cj.jb.value(), jc = cj.jc.value(), jd = cj.jd.value();
  const cplx ka = cj.ka.value(), kb = cj.kb.value(), kc = cj.kc.value(), kd = cj.kd.value();
  const cplx sg = cj.sg.value(), om = cj.om.value();
  const cplx D = sg * sg - om * om;

  // Signs follow from d_nu F^{nu mu} = q j^mu with the assembled tensor
  // (F_01 = -x F_a + y F_b, F_03 = -F_c, F_13 = x F_e, ...); they are
  // continuity-consistent and verified against the ambient pipeline.
  CylindricalMDResiduals out{};
  out.maxwell_time = std::abs(q * ja + (2.0 * f.Fa.value() + rho * f.Fa.deriv(0, 1)));
  out.maxwell_radial = std::abs(q * jb - f.Fa.deriv(1, 0));
  out.maxwell_azimuth = std::abs(q * jc - (f.Fb.deriv(1, 0) + f.Fd.deriv(0, 1) / rho));
  out.maxwell_axial =
      std::abs(q * jd - (2.0 * f.Fe.value() + f.Fc.deriv(1, 0) + rho * f.Fe.deriv(0, 1)));
  out.fierz_inner_j = std::abs(ja * ja - rho * rho * (jb * jb + jc * jc) - jd * jd - D);
  out.fierz_inner_k = std::abs(-ka * ka + rho * rho * (kb * kb + kc * kc) + kd * kd - D);
  out.fierz_orth = std::abs(ja * ka - rho * rho * (jb * kb + jc * kc) - jd * kd);
  out.continuity = std::abs(2.0 * jb + cj.ja.deriv(1, 0) + rho * cj.jb.deriv(0, 1));
  out.axial = std::abs(2.0 * kb + cj.ka.deriv(1, 0) + rho * cj.kb.deriv(0, 1) +
                       2.0 * iu * pp.mass * om);
  return out;
}

BilinearField cylindrical_lifted_field(const CylindricalProfile& p) {
  return [p](const Vec4& pt) {
    const Dual4 t4 = Dual4::var(0, pt[0]);
    const Dual4 x4 = Dual4::var(1, pt[1]);
    const Dual4 y4 = Dual4::var(2, pt[2]);
    const Dual4 z4 = Dual4::var(3, pt[3]);
    (void)z4;
    const Dual4 rho4 = sqrt(x4 * x4 + y4 * y4);
    const double t = pt[0], rho = rho4.v.real();
    const CylindricalJets cj = cylindrical_jets(p, t, rho);

    auto lift = [&](const Jet2& f) { return compose12(f, t4, rho4); };
    BilinearState st;
    st.sigma = lift(cj.sg);
    st.omega = lift(cj.om);
    const Dual4 ja = lift(cj.ja), jb = lift(cj.jb), jc = lift(cj.jc), jd = lift(cj.jd);
    const Dual4 ka = lift(cj.ka), kb = lift(cj.kb), kc = lift(cj.kc), kd = lift(cj.kd);
    st.j = {ja, x4 * jb - y4 * jc, y4 * jb + x4 * jc, jd};
    st.k = {ka, x4 * kb - y4 * kc, y4 * kb + x4 * kc, kd};
    return st;
  };
}

CylindricalProfile random_consistent_cylindrical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const Poly2 pja = [&] {
    Poly2 p = random_poly2(rng, 2, 0.25);
    p.terms.push_back({3.0 + 0.5 * uni(rng), 0, 0});
    return p;
  }();
  const Poly2 pjb = random_poly2(rng, 2, 0.25);
  const Poly2 pjc = random_poly2(rng, 2, 0.25);
  const Poly2 pjd = random_poly2(rng, 2, 0.25);
  const Poly2 pkb = random_poly2(rng, 2, 0.25);
  const Poly2 pkc = random_poly2(rng, 2, 0.25);
  const Poly2 pmix = random_poly2(rng, 2, 0.5);

  // k_a, k_d solved from the two Fierz identities; sigma, w from a polar
  // split of the shared density.
  struct Solved {
    Jet2 D, ka, kd;
  };
  auto solve = [pja, pjb, pjc, pjd, pkb, pkc](double t, double r) {
    const Jet2 rho = Jet2::var_u(r);
    const Jet2 ja = pja.eval(t, r), jb = pjb.eval(t, r), jc = pjc.eval(t, r), jd = pjd.eval(t, r);
    const Jet2 kb = pkb.eval(t, r), kc = pkc.eval(t, r);
    const Jet2 D = ja * ja - rho * rho * (jb * jb + jc * jc) - jd * jd;
    const Jet2 S = rho * rho * (jb * kb + jc * kc);
    const Jet2 E = D - rho * rho * (kb * kb + kc * kc);
    const Jet2 lead = ja * ja - jd * jd;
    const Jet2 kd = (S * jd + ja * sqrt(S * S + lead * E)) / lead;
    const Jet2 ka = (S + jd * kd) / ja;
    return Solved{D, ka, kd};
  };

  CylindricalProfile prof;
  prof.ja = pja.profile();
  prof.jb = pjb.profile();
  prof.jc = pjc.profile();
  prof.jd = pjd.profile();
  prof.kb = pkb.profile();
  prof.kc = pkc.profile();
  prof.ka = [solve](double t, double r) { return solve(t, r).ka; };
  prof.kd = [solve](double t, double r) { return solve(t, r).kd; };
  prof.sigma = [solve, pmix](double t, double r) {
    return sqrt(solve(t, r).D) * cos(pmix.eval(t, r));
  };
  prof.w = [solve, pmix](double t, double r) {
    return sqrt(solve(t, r).D) * sin(pmix.eval(t, r));
  };
  return prof;
}

}  // namespace fierzmd
