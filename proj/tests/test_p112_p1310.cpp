#include "doctest.h"

#include <random>

#include "fierzmd/p112.hpp"
#include "fierzmd/p1310.hpp"

using namespace fierzmd;

TEST_CASE("screw reduction: the solver returns the trivial solution") {
  for (const PhysicalParams pp : {PhysicalParams{1.0, 0.0}, PhysicalParams{-0.7, 1.3}}) {
    const P112Report rep = p112_solve(pp);
    CHECK(rep.solution.sigma == 0.0);
    CHECK(rep.solution.w == 0.0);
    CHECK(rep.solution.ja == 0.0);
    CHECK(rep.solution.ka == 0.0);
    CHECK(rep.steps.size() >= 6);
    CHECK(rep.max_residual == 0.0);
  }
}

TEST_CASE("screw reduction: derivation-step detectors fire on bad candidates") {
  const PhysicalParams pp{1.0, 0.9};
  // j_a != 0 violates the Maxwell step linearly
  auto s1 = p112_check(pp, {0.0, 0.0, 0.5, 0.0});
  for (const auto& st : s1)
    if (st.name == "maxwell_ja") CHECK(st.residual == doctest::Approx(0.5 * pp.q));
  // omega = i w nonzero with sigma = 0 violates the null-cone constraint by w^2
  auto s2 = p112_check(pp, {0.0, 0.5, 0.0, 0.0});
  for (const auto& st : s2)
    if (st.name == "fierz_null_cone") CHECK(st.residual == doctest::Approx(0.25));
  // the axial step pins k_a = m w
  auto s3 = p112_check(pp, {0.0, 0.5, 0.0, pp.mass * 0.5});
  for (const auto& st : s3)
    if (st.name == "axial_ka") CHECK(st.residual <= 1e-15);
}

TEST_CASE("non-splitting family: the reference member has kd = +-sqrt(3)") {
  const PhysicalParams pp{1.0, 0.0};
  const P1310SolveResult res = p1310_solve(1.0, pp, 1.0, 1.0, 0.0);
  REQUIRE(res.status == P1310Status::feasible_pair);
  CHECK(res.kd_squared == doctest::Approx(3.0).epsilon(1e-14));
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.solutions[0].kd == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(res.solutions[1].kd == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-14));
  for (const auto& s : res.solutions) {
    CHECK(std::abs(p1310_f(s)) <= 1e-12);
    const P1310VerifyReport v = p1310_verify(s, 50);
    CHECK(v.max_algebraic() <= 1e-12);
    CHECK(v.maxwell <= 1e-6);
    CHECK(v.continuity <= 1e-8);
    CHECK(v.axial <= 1e-8);
  }
}

TEST_CASE("non-splitting family: infeasible and degenerate members") {
  const PhysicalParams pp{1.0, 0.0};
  // ka = 1 makes kd^2 = 3 - 4 = -1
  const P1310SolveResult inf = p1310_solve(1.0, pp, 1.0, 1.0, 1.0);
  CHECK(inf.status == P1310Status::infeasible);
  CHECK(inf.kd_squared == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(inf.solutions.empty());
  // jb = 0 collapses the member onto the null cone
  const P1310SolveResult deg = p1310_solve(1.0, pp, 1.0, 0.0, 0.3);
  CHECK(deg.status == P1310Status::degenerate);
  REQUIRE(deg.solutions.size() == 1);
  CHECK(deg.solutions[0].kc == 0.0);
  CHECK(deg.solutions[0].kd == 0.0);
  CHECK(p1310_verify(deg.solutions[0], 5).degenerate);
  // domain errors
  CHECK_THROWS_AS((void)p1310_solve(-1.0, pp, 1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)p1310_solve(1.0, pp, 0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)p1310_solve(1.0, pp, 1.0, -1.0, 0.0), std::domain_error);
}

TEST_CASE("detectors: perturbing kc grows the Maxwell residual linearly") {
  const PhysicalParams pp{1.0, 0.0};
  const P1310SolveResult res = p1310_solve(1.0, pp, 1.0, 1.0, 0.0);
  SolutionP1310 s = res.solutions[0];
  const double base = p1310_verify(s, 20).maxwell;
  s.kc += 1e-3;
  const double bumped = p1310_verify(s, 20).maxwell;
  CHECK(bumped > 100 * (base + 1e-12));
  CHECK(bumped < 1.0);
}

TEST_CASE("family closure over a parameter grid") {
  // a compressed version of the acceptance grid: every feasible member
  // passes end-to-end verification; every infeasible one has kd^2 < 0.
  int feasible = 0, infeasible = 0;
  for (double lambda : {0.5, 1.0, 2.0})
    for (double ja : {0.25, 1.0})
      for (double jb : {0.25, 2.0})
        for (double ka : {-0.8, 0.0, 0.8})
          for (double m : {0.0, 0.5}) {
            const PhysicalParams pp{1.0, m};
            const P1310SolveResult res = p1310_solve(lambda, pp, ja, jb, ka);
            if (res.status == P1310Status::infeasible) {
              ++infeasible;
              CHECK(res.kd_squared < 0.0);
              continue;
            }
            for (const auto& s : res.solutions) {
              const P1310VerifyReport v = p1310_verify(s, 10, 7u);
              CHECK(v.max_algebraic() <= 1e-10);
              if (!v.degenerate) {
                CHECK(v.maxwell <= 1e-6);
                CHECK(v.continuity <= 1e-8);
                CHECK(v.axial <= 1e-8);
              }
              ++feasible;
            }
          }
  CHECK(feasible >= 20);
  CHECK(infeasible >= 1);
}

TEST_CASE("forcing omega nonzero fires the axial-continuity detector exactly") {
  // constants make d.k vanish, so the residual is |2 i m omega| on the nose
  const PhysicalParams pp{1.0, 0.7};
  const P1310SolveResult res = p1310_solve(1.0, pp, 1.0, 1.0, 0.0);
  const SolutionP1310& s = res.solutions[0];
  const BilinearField base = p1310_lifted_field(s);
  const double w = 0.3;
  const BilinearField forced = [base, w](const Vec4& x) {
    BilinearState st = base(x);
    st.omega = Dual4(iu * w);
    return st;
  };
  const auto cr = continuity_residuals(forced, pp, Vec4{{2.0, 0.1, 0.2, 0.3}});
  CHECK(std::abs(cr.axial - 2.0 * iu * pp.mass * (iu * w)) <= 1e-14);
}

TEST_CASE("both sigma branches produce verifiable members when m > 0") {
  const PhysicalParams pp{1.0, 0.5};
  for (int branch : {+1, -1}) {
    const P1310SolveResult res = p1310_solve(0.8, pp, 1.5, 0.9, 0.2, branch);
    REQUIRE(res.status == P1310Status::feasible_pair);
    for (const auto& s : res.solutions) {
      const P1310VerifyReport v = p1310_verify(s, 20);
      CHECK(v.max_algebraic() <= 1e-12);
      CHECK(v.maxwell <= 1e-6);
    }
  }
}
