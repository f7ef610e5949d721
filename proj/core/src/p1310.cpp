#include "fierzmd/p1310.hpp"

#include <cmath>
#include <random>

#include "fierzmd/maxwell.hpp"

namespace fierzmd {

P1310SolveResult p1310_solve(double lambda, const PhysicalParams& pp, double ja, double jb,
                             double ka, int branch) {
  if (lambda <= 0.0) throw std::domain_error("p1310_solve: lambda must be positive");
  if (pp.q == 0.0) throw std::domain_error("p1310_solve: charge must be nonzero");
  if (ja == 0.0) throw std::domain_error("p1310_solve: ja must be nonzero");
  if (ja * jb < 0.0) throw std::domain_error("p1310_solve: ja*jb < 0 makes sigma imaginary");

  const double q = pp.q, m = pp.mass;
  const double b = branch >= 0 ? 1.0 : -1.0;
  const double prod = ja * jb;
  const double sigma = b * 2.0 * std::sqrt(prod);

  SolutionP1310 base{};
  base.lambda = lambda;
  base.q = q;
  base.mass = m;
  base.ja = ja;
  base.jb = jb;
  base.ka = ka;
  base.branch = branch >= 0 ? +1 : -1;
  base.sigma = sigma;
  base.kb = -jb * ka / ja;
  base.kc = std::pow(lambda, 3) * q * q * sigma * sigma / 4.0 - lambda * m * sigma;

  // Remaining inner-product identity: -4 ja jb - 4 ka kb + kc^2 + kd^2 = 0.
  const double kd2 = 4.0 * prod + 4.0 * ka * base.kb - base.kc * base.kc;

  P1310SolveResult out;
  out.kd_squared = kd2;
  const double tol = 1e-12 * std::max(1.0, std::abs(kd2));
  if (prod == 0.0) {
    base.kd = 0.0;
    out.status = P1310Status::degenerate;
    out.solutions = {base};
    return out;
  }
  if (kd2 < -tol) {
    out.status = P1310Status::infeasible;
    return out;
  }
  if (std::abs(kd2) <= tol) {
    base.kd = 0.0;
    out.status = P1310Status::feasible_boundary;
    out.solutions = {base};
    return out;
  }
  out.status = P1310Status::feasible_pair;
  base.kd = std::sqrt(kd2);
  out.solutions.push_back(base);
  base.kd = -std::sqrt(kd2);
  out.solutions.push_back(base);
  return out;
}

double p1310_f(const SolutionP1310& s) {
  const double prod = s.ja * s.jb;
  const double l2 = s.lambda * s.lambda;
  const double q2 = s.q * s.q;
  const double b = s.branch >= 0 ? 1.0 : -1.0;
  // The paper's two-sign family written through the sign of sigma: the upper
  // sign of the -+ pairs is sigma = +2 sqrt(ja jb).
  return l2 * l2 * l2 * q2 * q2 * prod * prod -
         b * 4.0 * l2 * l2 * q2 * s.mass * std::pow(prod, 1.5) +
         4.0 * (l2 * s.mass * s.mass - 1.0) * prod - 4.0 * s.ka * s.kb + s.kd * s.kd;
}

BilinearField p1310_lifted_field(const SolutionP1310& s) {
  return [s](const Vec4& pt) {
    const Dual4 t4 = Dual4::var(0, pt[0]);
    const Dual4 y4 = Dual4::var(2, pt[2]);
    const Dual4 z4 = Dual4::var(3, pt[3]);
    const double sp = (pt[0] + pt[3]) >= 0 ? 1.0 : -1.0;
    const double sm = (pt[0] - pt[3]) >= 0 ? 1.0 : -1.0;
    (void)t4;
    (void)z4;
    const Dual4 Ep = sp * exp(y4 * (-2.0 / s.lambda));
    const Dual4 Em = sm * exp(y4 * (2.0 / s.lambda));

    BilinearState st;
    st.sigma = Dual4(s.sigma);
    st.omega = Dual4(0.0);
    st.j = {Ep * s.ja + Em * s.jb, Dual4(0.0), Dual4(0.0), Ep * s.ja - Em * s.jb};
    st.k = {Ep * s.ka + Em * s.kb, Dual4(s.kc), Dual4(s.kd), Ep * s.ka - Em * s.kb};
    return st;
  };
}

P1310VerifyReport p1310_verify(const SolutionP1310& s, int n_points, std::uint64_t seed,
                               const DiffEngine& d) {
  P1310VerifyReport rep{};
  const double prod = s.ja * s.jb;
  rep.f_residual = std::abs(p1310_f(s));
  rep.orthogonality = std::abs(s.ja * s.kb + s.jb * s.ka);
  rep.kc_equation = std::abs(s.kc - (std::pow(s.lambda, 3) * s.q * s.q * s.sigma * s.sigma / 4.0 -
                                     s.lambda * s.mass * s.sigma));
  rep.sigma_relation = std::abs(s.sigma * s.sigma - 4.0 * prod);
  rep.inner_product = std::abs(-4.0 * prod - 4.0 * s.ka * s.kb + s.kc * s.kc + s.kd * s.kd);

  if (prod == 0.0) {
    rep.degenerate = true;  // density vanishes; the ambient potential is undefined
    return rep;
  }

  const BilinearField field = p1310_lifted_field(s);
  const PhysicalParams pp{s.q, s.mass};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int n = 0; n < n_points; ++n) {
    // Inside the t^2 > z^2 wedge (both light-cone signs positive), clear of
    // the cone by more than the stencil footprint.
    const double z = 1.2 * uni(rng);
    const double t = std::abs(z) + 0.5 + 1.5 * std::abs(uni(rng));
    const Vec4 x{{t, uni(rng), s.lambda * uni(rng), z}};
    const CVec4 mr = maxwell_residual(field, pp, x, d);
    rep.maxwell = std::max(rep.maxwell, mr.max_abs());
    const ContinuityResiduals cr = continuity_residuals(field, pp, x);
    rep.continuity = std::max(rep.continuity, std::abs(cr.current));
    rep.axial = std::max(rep.axial, std::abs(cr.axial));
  }
  return rep;
}

}  // namespace fierzmd
