#include "doctest.h"

#include <random>

#include "fierzmd/spherical.hpp"

using namespace fierzmd;

namespace {
Vec4 point_on_sphere(double t, double r, double a, double b) {
  const double ct = std::cos(a), st = std::sin(a);
  return {{t, r * st * std::cos(b), r * st * std::sin(b), r * ct}};
}
}  // namespace

TEST_CASE("k reconstruction from j (worked examples)") {
  SphericalProfile p{constant_profile(0.0), constant_profile(1.0), constant_profile(2.0),
                     constant_profile(0.0), +1};
  const auto [ka, kb] = spherical_k_from_j(p, 0.0, 2.0);
  CHECK(ka == 2.0);
  CHECK(kb == 0.0);
  // flipping the branch flips both signs, orthogonality intact
  p.branch = -1;
  const auto [ka2, kb2] = spherical_k_from_j(p, 0.0, 2.0);
  CHECK(ka2 == -2.0);
  CHECK(kb2 == 0.0);
  CHECK_THROWS_AS((void)spherical_k_from_j(p, 0.0, 0.0), std::domain_error);
}

TEST_CASE("orthogonality of the reconstructed pair on random consistent profiles") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const SphericalProfile p = random_consistent_spherical(rng);
    for (int n = 0; n < 5; ++n) {
      const double t = 0.4 * uni(rng), r = 1.2 + 0.35 * uni(rng);
      const SphericalJets sj = spherical_jets(p, t, r);
      const cplx ja = sj.ja.value(), jb = sj.jb.value();
      const cplx ka = sj.ka.value(), kb = sj.kb.value();
      CHECK(std::abs(ja * ka - r * r * jb * kb) <= 1e-10);
    }
  }
}

TEST_CASE("reduced potential: derivative-free cases") {
  const PhysicalParams pp{1.5, 0.7};
  // sigma const, omega = 0, ja const, jb = 0: only the mass term survives
  const double sg = 1.3, ja = 0.8;
  SphericalProfile p{constant_profile(ja), constant_profile(0.0), constant_profile(sg),
                     constant_profile(0.0), +1};
  const SphericalB b = spherical_B(p, pp, 0.2, 1.1);
  CHECK(b.Ba == doctest::Approx(-pp.mass * ja / (pp.q * sg)).epsilon(1e-12));
  CHECK(b.Bb == 0.0);
}

TEST_CASE("degenerate density raises") {
  SphericalProfile p{constant_profile(1.0), constant_profile(0.0), constant_profile(0.0),
                     constant_profile(0.0), +1};
  const PhysicalParams pp{1.0, 0.5};
  CHECK_THROWS_AS((void)spherical_B(p, pp, 0.0, 1.0), DegenerateDensityError);
}

TEST_CASE("monopole component is profile-independent: Fb 2q r^3 = branch sign") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const SphericalProfile p = random_consistent_spherical(rng);
    const PhysicalParams pp{trial % 2 ? 1.0 : -0.8, 0.4};
    const double t = 0.4 * uni(rng), r = 1.2 + 0.35 * uni(rng);
    const SphericalF f = spherical_F(p, pp, t, r);
    CHECK(std::abs(f.Fb * 2.0 * pp.q * r * r * r - p.branch) <= 1e-8);
    // the raw rational form collapses to the same universal value
    CHECK(std::abs(spherical_F_b_raw(p, pp, t, r) - f.Fb) <= 1e-10);
  }
  // the worked number: q = 1, r = 2, branch + gives 1/16
  SphericalProfile p{constant_profile(0.0), constant_profile(1.0), constant_profile(2.0),
                     constant_profile(0.0), +1};
  // make it Fierz-consistent: ja^2 - r^2 jb^2 = -4 != sigma^2 at r=2... use a
  // consistent one instead; Fb never sees the profile anyway:
  CHECK(spherical_F(p, {1.0, 0.0}, 0.0, 2.0).Fb == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("field strength component Fa agrees with the reduced pipeline") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const SphericalProfile p = random_consistent_spherical(rng);
    const PhysicalParams pp{1.0 + 0.5 * trial, 0.3 * trial};
    const double t = 0.4 * uni(rng), r = 1.2 + 0.35 * uni(rng);
    const double fa = spherical_F(p, pp, t, r).Fa;
    CHECK(std::abs(fa - spherical_F_a_from_B(p, pp, t, r)) <=
          1e-10 * std::max(1.0, std::abs(fa)));
  }
}

TEST_CASE("static profiles reduce Fa to its radial terms") {
  // no t-dependence: the formula must coincide with the same profile
  // evaluated at any other time
  std::mt19937_64 rng(29);
  const SphericalProfile p = random_consistent_spherical(rng);
  SphericalProfile stat = p;
  stat.ja = [&p](double, double r) { return p.ja(0.0, r); };
  stat.jb = [&p](double, double r) { return p.jb(0.0, r); };
  stat.sigma = [&p](double, double r) { return p.sigma(0.0, r); };
  stat.w = [&p](double, double r) { return p.w(0.0, r); };
  const PhysicalParams pp{1.2, 0.5};
  const double f1 = spherical_F(stat, pp, -0.3, 1.1).Fa;
  const double f2 = spherical_F(stat, pp, 0.4, 1.1).Fa;
  CHECK(f1 == doctest::Approx(f2).epsilon(1e-12));
}

TEST_CASE("verbatim Maxwell-Dirac equations match the reduced pipeline") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const SphericalProfile p = random_consistent_spherical(rng);
    const PhysicalParams pp{trial % 2 ? 1.0 : 1.7, trial % 3 ? 0.6 : 0.0};
    const double t = 0.4 * uni(rng), r = 1.2 + 0.35 * uni(rng);
    const SphericalMDResiduals md = spherical_md_residuals(p, pp, t, r);
    worst = std::max(worst, std::abs(md.maxwell_time - md.maxwell_time_pipeline));
    worst = std::max(worst, std::abs(md.maxwell_radial - md.maxwell_radial_pipeline));
    CHECK(md.fierz <= 1e-8);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("continuity example: ja = -3tc, jb = c") {
  const double c = 0.7;
  Poly2 ja;
  ja.terms = {{-3.0 * c, 1, 0}};
  SphericalProfile p{ja.profile(), constant_profile(c), constant_profile(3.0),
                     constant_profile(0.0), +1};
  const SphericalMDResiduals md = spherical_md_residuals(p, {1.0, 0.0}, 0.3, 1.2);
  CHECK(md.continuity <= 1e-13);
}

TEST_CASE("4d lift matches the ambient pipeline (transcription oracle)") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst_B = 0, worst_F = 0, worst_MD = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const SphericalProfile p = random_consistent_spherical(rng);
    const PhysicalParams pp{trial % 2 ? 1.0 : 1.6, trial % 2 ? 0.0 : 0.7};
    const BilinearField lifted = spherical_lifted_field(p);
    for (int n = 0; n < 4; ++n) {
      const double t = 0.4 * uni(rng), r = 1.2 + 0.35 * uni(rng);
      const Vec4 x = point_on_sphere(t, r, 1.1 + 0.5 * uni(rng), 2.0 * uni(rng));
      // B
      const CVec4 Bamb = gauge_invariant_B(lifted, pp, x);
      const SphericalB br = spherical_B(p, pp, t, r);
      const CVec4 Bexp{{br.Ba, x[1] * br.Bb, x[2] * br.Bb, x[3] * br.Bb}};
      worst_B = std::max(worst_B, (Bamb - Bexp).max_abs());
      // F
      const DiffEngine d{};
      const AntisymTensor2 Famb = field_strength(lifted, pp, x, d);
      const SphericalF fr = spherical_F(p, pp, t, r);
      AntisymTensor2 Fexp;
      Fexp.set(0, 1, x[1] * fr.Fa);
      Fexp.set(0, 2, x[2] * fr.Fa);
      Fexp.set(0, 3, x[3] * fr.Fa);
      Fexp.set(1, 2, x[3] * fr.Fb);
      Fexp.set(1, 3, -x[2] * fr.Fb);
      Fexp.set(2, 3, x[1] * fr.Fb);
      worst_F = std::max(worst_F, (Famb - Fexp).max_abs());
      // Maxwell residual, mu = 0 component
      const CVec4 amb = maxwell_residual(lifted, pp, x, d);
      const SphericalMDResiduals md = spherical_md_residuals(p, pp, t, r);
      worst_MD = std::max(worst_MD, std::abs(std::abs(amb[0]) - md.maxwell_time / pp.q));
    }
  }
  CHECK(worst_B <= 1e-6);
  CHECK(worst_F <= 1e-6);
  CHECK(worst_MD <= 1e-4);
}

TEST_CASE("monopole flux and cancellation from the coupled equations") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    const SphericalProfile p = random_consistent_spherical(rng);
    const PhysicalParams pp{trial ? 1.0 : 1.3, 0.5};
    const double t = 0.2 * uni(rng), r = 1.2 + 0.3 * uni(rng);
    // flux of the magnetic field equals -branch * 2 pi / q
    const double flux = monopole_flux(p, pp, t, r);
    CHECK(std::abs(flux - (-p.branch * 2.0 * M_PI / pp.q)) <= 1e-6);
    // removing Fb does not change the mu = i Maxwell residuals
    const Vec4 x = point_on_sphere(t, r, 0.9, 0.7);
    const DiffEngine d{};
    const CVec4 with = spherical_assembled_maxwell_residual(p, pp, x, d, true);
    const CVec4 without = spherical_assembled_maxwell_residual(p, pp, x, d, false);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(with[i] - without[i]) <= 1e-10);
  }
}

TEST_CASE("branch symmetry: flipping the sign branch with the pseudoscalar") {
  // Every branch-tagged term in the reduced formulas carries exactly one
  // factor of omega, so the residuals are invariant under flipping the
  // branch together with w -> -w (and under the branch alone when w = 0).
  std::mt19937_64 rng(27);
  SphericalProfile p = random_consistent_spherical(rng);
  const PhysicalParams pp{1.1, 0.6};
  const double t = 0.1, r = 1.3;
  p.branch = +1;
  const SphericalMDResiduals plus = spherical_md_residuals(p, pp, t, r);
  const double fb_plus = spherical_F(p, pp, t, r).Fb;
  SphericalProfile q = p;
  q.branch = -1;
  const Profile2 w_orig = p.w;
  q.w = [w_orig](double tt, double rr) { return -w_orig(tt, rr); };
  const SphericalMDResiduals minus = spherical_md_residuals(q, pp, t, r);
  const double fb_minus = spherical_F(q, pp, t, r).Fb;
  CHECK(fb_plus == -fb_minus);
  CHECK(plus.maxwell_time == doctest::Approx(minus.maxwell_time).epsilon(1e-10));
  CHECK(plus.maxwell_radial == doctest::Approx(minus.maxwell_radial).epsilon(1e-10));
  CHECK(plus.axial == doctest::Approx(minus.axial).epsilon(1e-10));

  // with w = 0 the branch alone is a symmetry of the coupled equations
  SphericalProfile s = p;
  s.w = constant_profile(0.0);
  SphericalProfile s2 = s;
  s2.branch = -1;
  const SphericalMDResiduals a = spherical_md_residuals(s, pp, t, r);
  const SphericalMDResiduals b = spherical_md_residuals(s2, pp, t, r);
  CHECK(a.maxwell_time == doctest::Approx(b.maxwell_time).epsilon(1e-10));
  CHECK(a.maxwell_radial == doctest::Approx(b.maxwell_radial).epsilon(1e-10));
}
