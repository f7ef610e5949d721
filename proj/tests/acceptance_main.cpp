// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "fierzmd/bilinears.hpp"
#include "fierzmd/cylindrical.hpp"
#include "fierzmd/dirac_algebra.hpp"
#include "fierzmd/inversion.hpp"
#include "fierzmd/maxwell.hpp"
#include "fierzmd/p112.hpp"
#include "fierzmd/p1310.hpp"
#include "fierzmd/poincare.hpp"
#include "fierzmd/spherical.hpp"

using namespace fierzmd;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void line(int idx, const char* name, double value, double tol, double secs) {
  const bool pass = value <= tol;
  if (!pass) ++g_failures;
  std::printf("[%s] %2d. %-46s residual %.3e <= %.0e  (%.1fs)\n", pass ? "PASS" : "FAIL", idx,
              name, value, tol, secs);
}

void line_bool(int idx, const char* name, bool pass, double secs) {
  if (!pass) ++g_failures;
  std::printf("[%s] %2d. %-46s (%.1fs)\n", pass ? "PASS" : "FAIL", idx, name, secs);
}

std::mt19937_64 g_rng(20260810);

Vec4 random_vec(double amp) {
  std::uniform_real_distribution<double> uni(-amp, amp);
  return {{uni(g_rng), uni(g_rng), uni(g_rng), uni(g_rng)}};
}

Vec4 on_shell(double mass, double amp) {
  Vec4 p = random_vec(amp);
  p[0] = std::sqrt(mass * mass + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
  return p;
}

// 1. Appendix-A identity suite over all index tuples and 100 random spinors.
void criterion1() {
  Timer tm;
  double worst = 0;
  for (IdentityId id : all_identities())
    worst = std::max(worst, verify_identity(id, DiracRep::standard(), 1, 100).max_abs_residual);
  line(1, "dirac and charge-conjugation identities", worst, 1e-13, tm.seconds());
}

// 2. Fierz suite over 1000 random spinors, repeated in a rotated basis.
void criterion2() {
  Timer tm;
  double worst = 0;
  for (const DiracRep* rep : {&DiracRep::standard(), &DiracRep::chiral()}) {
    const FierzResiduals r = fierz_suite(1000, 2, *rep);
    worst = std::max({worst, r.inner_jk, r.inner_mn, r.orthogonality, r.spin_plane,
                      r.s_reconstruction, r.sdual_reconstruction});
  }
  line(2, "fierz relations, both representations", worst, 1e-10, tm.seconds());
}

// 3. Inversion round-trip for 50 gauged plane waves, both derivative modes,
//    plus agreement of the two inverted forms where both are defined.
void criterion3() {
  Timer tm;
  const PhysicalParams pp{1.3, 0.8};
  const DiffEngine fd{DiffEngine::Mode::central, 1e-3, 4};
  double worst_analytic = 0, worst_fd = 0, worst_forms = 0;
  for (int n = 0; n < 50; ++n) {
    const Vec4 p = on_shell(pp.mass, 1.0);
    const Vec4 a = random_vec(1.0);
    const SpinorField f = plane_wave_field(p, on_shell_u(p, pp.mass, n % 4), a, pp.q);
    const Vec4 x = random_vec(1.0);
    worst_analytic = std::max(worst_analytic, (invert_A_scalar(f, pp, x) - to_cvec(a)).max_abs());
    worst_fd = std::max(
        worst_fd, (invert_A_scalar(f, pp, x, DiracRep::standard(), fd) - to_cvec(a)).max_abs());
  }
  int used = 0;
  for (int n = 0; n < 40 && used < 20; ++n) {
    const Vec4 p = on_shell(pp.mass, 0.4);
    const Vec4 a = random_vec(0.8);
    const SpinorField f =
        two_wave_field(p, on_shell_u(p, pp.mass, 0), on_shell_v(p, pp.mass, 2) * 0.5, a, pp.q);
    const Vec4 x = random_vec(1.0);
    try {
      worst_forms =
          std::max(worst_forms, (invert_A_scalar(f, pp, x) - invert_A_pseudo(f, pp, x)).max_abs());
      ++used;
    } catch (const SupportError&) {
    }
  }
  const bool pass = worst_analytic <= 1e-9 && worst_fd <= 1e-6 && worst_forms <= 1e-9 && used >= 15;
  if (!pass) ++g_failures;
  std::printf(
      "[%s]  3. inversion round-trip                         analytic %.3e <= 1e-09, "
      "stencil %.3e <= 1e-06, forms %.3e <= 1e-09  (%.1fs)\n",
      pass ? "PASS" : "FAIL", worst_analytic, worst_fd, worst_forms, tm.seconds());
}

// 4. Gauge invariance of B and F; A shifts by the phase gradient.
void criterion4() {
  Timer tm;
  const PhysicalParams pp{1.0, 0.7};
  std::uniform_real_distribution<double> uni(-0.3, 0.3);
  double worst_B = 0, worst_F = 0, worst_shift = 0;
  int used = 0;
  for (int trial = 0; trial < 60 && used < 20; ++trial) {
    const Vec4 p = on_shell(pp.mass, 0.4);
    const Vec4 a = random_vec(0.5);
    const SpinorField f =
        two_wave_field(p, on_shell_u(p, pp.mass, 0), on_shell_v(p, pp.mass, 2) * 0.5, a, pp.q);
    Poly4 theta;
    theta.terms = {{uni(g_rng), {1, 0, 0, 0}}, {uni(g_rng), {0, 1, 0, 0}},
                   {uni(g_rng), {0, 0, 2, 0}}, {uni(g_rng), {1, 0, 0, 2}},
                   {uni(g_rng), {0, 1, 1, 1}}};
    const SpinorField f2 = gauge_transformed(f, theta, pp.q);
    const Vec4 x = random_vec(1.0);
    try {
      const CVec4 B1 = gauge_invariant_B(bilinear_field_from_spinor(f), pp, x);
      const CVec4 B2 = gauge_invariant_B(bilinear_field_from_spinor(f2), pp, x);
      const CVec4 A1 = invert_A_scalar(f, pp, x);
      const CVec4 A2 = invert_A_scalar(f2, pp, x);
      const AntisymTensor2 F1 = field_strength(bilinear_field_from_spinor(f), pp, x);
      const AntisymTensor2 F2 = field_strength(bilinear_field_from_spinor(f2), pp, x);
      const Dual4 th = theta.eval_dual(x);
      CVec4 grad_up;
      for (int mu = 0; mu < 4; ++mu) grad_up[mu] = eta(mu) * th.d(mu);
      worst_B = std::max(worst_B, (B1 - B2).max_abs());
      worst_F = std::max(worst_F, (F1 - F2).max_abs());
      worst_shift = std::max(worst_shift, (A2 - A1 + grad_up).max_abs());
      ++used;
    } catch (const std::domain_error&) {
    }
  }
  const double worst = std::max({worst_B, worst_F, worst_shift});
  const bool ok = worst <= 1e-8 && used >= 20;
  if (!ok) ++g_failures;
  std::printf("[%s]  4. gauge invariance of B, F and the A-shift    residual %.3e <= 1e-08"
              "  (%.1fs)\n",
              ok ? "PASS" : "FAIL", worst, tm.seconds());
}

// 5. The ten bilinearized constraints and the continuity pair on solutions.
void criterion5() {
  Timer tm;
  const PhysicalParams pp{1.2, 0.5};
  double worst = 0;
  for (int n = 0; n < 20; ++n) {
    const Vec4 p = on_shell(pp.mass, 0.5);
    const Vec4 a = random_vec(0.7);
    const SpinorField f =
        two_wave_field(p, on_shell_u(p, pp.mass, 0), on_shell_v(p, pp.mass, 2) * 0.5, a, pp.q);
    const Vec4 x = random_vec(1.0);
    for (const auto& e : bilinearized_constraints(f, constant_potential(a), pp, x))
      if (e.applicable) worst = std::max(worst, e.residual);
  }
  line(5, "bilinearized-constraint ledger on solutions", worst, 1e-9, tm.seconds());
}

// 6. Lie-derivative suite: ansatz invariance at 100 points per subgroup and
//    subalgebra closure for all four generator lists.
void criterion6() {
  Timer tm;
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const Profile2 pa = random_poly2(g_rng, 3, 1.0).profile();
  const Profile2 pb = random_poly2(g_rng, 3, 1.0).profile();
  const Profile2 pc = random_poly2(g_rng, 3, 1.0).profile();
  const Profile2 pd = random_poly2(g_rng, 3, 1.0).profile();

  double worst_inv = 0, worst_closure = 0;
  struct CaseSpec {
    SubgroupSpec sub;
    InvariantFieldPair pair;
    bool light_cone;
  };
  std::vector<CaseSpec> cases;
  cases.push_back({make_subgroup(SubgroupName::P3_4),
                   invariant_field(make_subgroup(SubgroupName::P3_4), {{pa, pb}, {}}), false});
  cases.push_back(
      {make_subgroup(SubgroupName::P12_8),
       invariant_field(make_subgroup(SubgroupName::P12_8), {{pa, pb, pc, pd}, {}}), false});
  cases.push_back({make_subgroup(SubgroupName::P11_2, 0.9),
                   invariant_field(make_subgroup(SubgroupName::P11_2, 0.9), {{}, {0.8}}), true});
  cases.push_back({make_subgroup(SubgroupName::P13_10tilde, 1.3),
                   invariant_field(make_subgroup(SubgroupName::P13_10tilde, 1.3),
                                   {{}, {1.0, -0.4, 0.3, 0.7}}),
                   true});
  for (auto& c : cases) {
    worst_closure = std::max(worst_closure, subalgebra_closure_residual(c.sub));
    for (int n = 0; n < 100; ++n) {
      const Vec4 x = c.light_cone
                         ? Vec4{{3.0 + uni(g_rng), uni(g_rng), uni(g_rng), uni(g_rng)}}
                         : Vec4{{2.0 * uni(g_rng), 1.5 + uni(g_rng), 2.0 * uni(g_rng),
                                 2.0 * uni(g_rng)}};
      for (const auto& g : c.sub.generators) {
        const Vec4 rv = lie_derivative_vector(c.pair.vector, g, x);
        for (int mu = 0; mu < 4; ++mu) worst_inv = std::max(worst_inv, std::abs(rv[mu]));
      }
    }
  }
  const bool ok = worst_inv <= 1e-8 && worst_closure <= 1e-12;
  if (!ok) ++g_failures;
  std::printf("[%s]  6. lie-derivative suite                        invariance %.3e <= 1e-08, "
              "closure %.3e <= 1e-12  (%.1fs)\n",
              ok ? "PASS" : "FAIL", worst_inv, worst_closure, tm.seconds());
}

// 7. Spherical monopole: universal Fb, flux quantum, and cancellation.
void criterion7() {
  Timer tm;
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst_fb = 0, worst_flux = 0, worst_cancel = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const SphericalProfile p = random_consistent_spherical(g_rng);
    const PhysicalParams pp{trial % 2 ? 1.0 : 1.4, trial % 3 ? 0.5 : 0.0};
    const double t = 0.3 * uni(g_rng), r = 1.2 + 0.3 * uni(g_rng);
    const SphericalF f = spherical_F(p, pp, t, r);
    worst_fb = std::max(worst_fb, std::abs(f.Fb * 2.0 * pp.q * r * r * r - p.branch));
    if (trial < 5) {
      worst_flux = std::max(
          worst_flux, std::abs(monopole_flux(p, pp, t, r) - (-p.branch * 2.0 * M_PI / pp.q)));
      const Vec4 x{{t, r * 0.5, r * 0.62, r * std::sqrt(1 - 0.25 - 0.3844)}};
      const DiffEngine d{};
      const CVec4 with = spherical_assembled_maxwell_residual(p, pp, x, d, true);
      const CVec4 without = spherical_assembled_maxwell_residual(p, pp, x, d, false);
      for (int i = 1; i < 4; ++i)
        worst_cancel = std::max(worst_cancel, std::abs(with[i] - without[i]));
    }
  }
  const bool ok = worst_fb <= 1e-8 && worst_flux <= 1e-6 && worst_cancel <= 1e-10;
  if (!ok) ++g_failures;
  std::printf("[%s]  7. spherical monopole                          Fb*2qr^3 %.3e <= 1e-08, "
              "flux %.3e <= 1e-06, cancellation %.3e <= 1e-10  (%.1fs)\n",
              ok ? "PASS" : "FAIL", worst_fb, worst_flux, worst_cancel, tm.seconds());
}

// 8. Transcription oracles: every reduced closed form against the ambient
//    4D pipeline on random consistent profiles.
void criterion8() {
  Timer tm;
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst_single = 0;  // one stencil layer: B and F comparisons
  double worst_double = 0;  // two stencil layers: Maxwell comparisons

  for (int trial = 0; trial < 10; ++trial) {
    const PhysicalParams pp{trial % 2 ? 1.0 : 1.6, trial % 2 ? 0.0 : 0.7};
    {  // spherical
      const SphericalProfile p = random_consistent_spherical(g_rng);
      const BilinearField lifted = spherical_lifted_field(p);
      const double t = 0.4 * uni(g_rng), r = 1.2 + 0.35 * uni(g_rng);
      const double a = 1.0 + 0.5 * uni(g_rng), b = 2.0 * uni(g_rng);
      const Vec4 x{{t, r * std::sin(a) * std::cos(b), r * std::sin(a) * std::sin(b),
                    r * std::cos(a)}};
      const SphericalB br = spherical_B(p, pp, t, r);
      const CVec4 Bexp{{br.Ba, x[1] * br.Bb, x[2] * br.Bb, x[3] * br.Bb}};
      worst_single = std::max(worst_single,
                              (gauge_invariant_B(lifted, pp, x) - Bexp).max_abs());
      const DiffEngine d{};
      const SphericalF fr = spherical_F(p, pp, t, r);
      AntisymTensor2 Fexp;
      Fexp.set(0, 1, x[1] * fr.Fa);
      Fexp.set(0, 2, x[2] * fr.Fa);
      Fexp.set(0, 3, x[3] * fr.Fa);
      Fexp.set(1, 2, x[3] * fr.Fb);
      Fexp.set(1, 3, -x[2] * fr.Fb);
      Fexp.set(2, 3, x[1] * fr.Fb);
      worst_single =
          std::max(worst_single, (field_strength(lifted, pp, x, d) - Fexp).max_abs());
      const SphericalMDResiduals md = spherical_md_residuals(p, pp, t, r);
      // the transcribed long equations against their reduced-pipeline twins
      worst_single = std::max(worst_single,
                              std::abs(md.maxwell_time - md.maxwell_time_pipeline));
      worst_single = std::max(worst_single,
                              std::abs(md.maxwell_radial - md.maxwell_radial_pipeline));
      const CVec4 amb = maxwell_residual(lifted, pp, x, d);
      worst_double =
          std::max(worst_double, std::abs(std::abs(amb[0]) - md.maxwell_time / pp.q));
    }
    {  // cylindrical
      const CylindricalProfile p = random_consistent_cylindrical(g_rng);
      const BilinearField lifted = cylindrical_lifted_field(p);
      const double t = 0.4 * uni(g_rng), rho = 1.2 + 0.35 * uni(g_rng);
      const double ang = 3.0 * uni(g_rng);
      const Vec4 x{{t, rho * std::cos(ang), rho * std::sin(ang), 2.0 * uni(g_rng)}};
      const double r2 = rho * rho;
      const CylindricalB br = cylindrical_B(p, pp, t, rho);
      const CVec4 Bexp{{br.Ba, x[1] * br.Bb - x[2] * br.Bc, x[2] * br.Bb + x[1] * br.Bc, br.Bd}};
      worst_single = std::max(worst_single,
                              (gauge_invariant_B(lifted, pp, x) - Bexp).max_abs());
      const DiffEngine d{};
      const AntisymTensor2 Famb = field_strength(lifted, pp, x, d);
      const CylindricalF fr = cylindrical_F(p, pp, t, rho);
      worst_single = std::max(
          worst_single, std::abs(-(x[1] * Famb(0, 1) + x[2] * Famb(0, 2)) / r2 - fr.Fa));
      worst_single = std::max(
          worst_single, std::abs((x[2] * Famb(0, 1) - x[1] * Famb(0, 2)) / r2 - fr.Fb));
      worst_single = std::max(worst_single, std::abs(-Famb(0, 3) - fr.Fc));
      worst_single = std::max(worst_single, std::abs(Famb(1, 2) - fr.Fd));
      worst_single = std::max(
          worst_single, std::abs((x[1] * Famb(1, 3) + x[2] * Famb(2, 3)) / r2 - fr.Fe));
      const CVec4 amb = maxwell_residual(lifted, pp, x, d);
      const CylindricalMDResiduals md = cylindrical_md_residuals(p, pp, t, rho);
      const double sb = std::abs((x[1] * amb[1] + x[2] * amb[2]).real()) / r2;
      const double sc = std::abs((x[2] * amb[1] - x[1] * amb[2]).real()) / r2;
      worst_double = std::max({worst_double, std::abs(std::abs(amb[0]) - md.maxwell_time),
                               std::abs(sb - md.maxwell_radial),
                               std::abs(sc - md.maxwell_azimuth),
                               std::abs(std::abs(amb[3]) - md.maxwell_axial)});
    }
  }
  const bool ok = worst_single <= 1e-5 && worst_double <= 1e-4;
  if (!ok) ++g_failures;
  std::printf("[%s]  8. transcription oracles (4d lift)             single-layer %.3e <= 1e-05, "
              "double-layer %.3e <= 1e-04  (%.1fs)\n",
              ok ? "PASS" : "FAIL", worst_single, worst_double, tm.seconds());
}

// 9. The screw subgroup admits exactly the trivial solution.
void criterion9() {
  Timer tm;
  const P112Report rep = p112_solve({1.0, 0.8});
  bool ok = rep.solution.sigma == 0.0 && rep.solution.w == 0.0 && rep.solution.ja == 0.0 &&
            rep.solution.ka == 0.0 && rep.max_residual <= 1e-12 && rep.steps.size() >= 6;
  // the derivation detectors must also fire on wrong candidates
  const auto bad = p112_check({1.0, 0.8}, {0.0, 0.5, 0.0, 0.0});
  bool fired = false;
  for (const auto& s : bad)
    if (s.name == "fierz_null_cone" && s.residual > 0.2) fired = true;
  ok = ok && fired;
  line_bool(9, "screw reduction yields the trivial solution", ok, tm.seconds());
}

// 10. The non-splitting family: reference member and a parameter grid.
void criterion10() {
  Timer tm;
  const P1310SolveResult ref = p1310_solve(1.0, {1.0, 0.0}, 1.0, 1.0, 0.0);
  bool ok = ref.status == P1310Status::feasible_pair &&
            std::abs(ref.solutions[0].kd - std::sqrt(3.0)) <= 1e-12 &&
            std::abs(p1310_f(ref.solutions[0])) <= 1e-12;

  int feasible = 0;
  double worst_maxwell = 0, worst_cont = 0, worst_alg = 0;
  const std::vector<double> lambdas = {0.5, 1.0, 1.5, 2.0};
  const std::vector<double> jas = {0.25, 1.0, 2.0, 4.0};
  const std::vector<double> jbs = {0.25, 1.0, 2.0, 4.0};
  const std::vector<double> kas = {-0.8, 0.0, 0.8};
  for (double lambda : lambdas)
    for (double ja : jas)
      for (double jb : jbs)
        for (double ka : kas)
          for (double m : {0.0, 0.5}) {
            const P1310SolveResult res = p1310_solve(lambda, {1.0, m}, ja, jb, ka);
            if (res.status == P1310Status::infeasible) {
              if (res.kd_squared >= 0.0) ok = false;
              continue;
            }
            for (const auto& s : res.solutions) {
              const P1310VerifyReport v = p1310_verify(s, 50, 11u);
              worst_alg = std::max(worst_alg, v.max_algebraic());
              if (!v.degenerate) {
                worst_maxwell = std::max(worst_maxwell, v.maxwell);
                worst_cont = std::max(worst_cont, std::max(v.continuity, v.axial));
              }
              ++feasible;
            }
          }
  ok = ok && feasible >= 500 && worst_maxwell <= 1e-6 && worst_cont <= 1e-8 && worst_alg <= 1e-10;
  if (!ok) ++g_failures;
  std::printf("[%s] 10. exact family: %4d members                  f <= 1e-10 (got %.1e), "
              "maxwell %.3e <= 1e-06, continuity %.3e <= 1e-08  (%.1fs)\n",
              ok ? "PASS" : "FAIL", feasible, worst_alg, worst_maxwell, worst_cont, tm.seconds());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s: %d of 10 criteria passed\n", g_failures == 0 ? "OK" : "FAILED",
              10 - g_failures);
  return g_failures;
}
