#include "doctest.h"

#include <random>

#include "fierzmd/bilinears.hpp"

using namespace fierzmd;

namespace {
Spinor basis_spinor() {
  Spinor e;
  e[0] = 1.0;
  return e;
}
}  // namespace

TEST_CASE("bilinears of the first basis spinor (frozen oracle values)") {
  // Values computed once by direct 4x4 matrix arithmetic in the standard
  // representation and frozen; the k^3 and (m, n) signs are representation
  // artifacts pinned here as regression values.
  const BilinearSet b = bilinears(basis_spinor());
  CHECK(std::abs(b.sigma - 1.0) < 1e-15);
  CHECK(std::abs(b.omega) < 1e-15);
  CHECK((b.j - CVec4{{1, 0, 0, 0}}).max_abs() < 1e-15);
  CHECK((b.k - CVec4{{0, 0, 0, -1}}).max_abs() < 1e-15);
  CHECK((b.m - CVec4{{0, 1, 0, 0}}).max_abs() < 1e-15);
  CHECK((b.n - CVec4{{0, 0, 1, 0}}).max_abs() < 1e-15);
  CHECK(std::abs(b.s(1, 2) - 1.0) < 1e-15);
  CHECK(std::abs(b.s(0, 1)) < 1e-15);
  CHECK(std::abs(dot_lorentz(b.j, b.j) - 1.0) < 1e-15);  // j.j = sigma^2 - omega^2
}

TEST_CASE("zero spinor maps to the zero set") {
  const BilinearSet b = bilinears(Spinor{});
  CHECK(std::abs(b.sigma) == 0.0);
  CHECK(b.j.max_abs() == 0.0);
  CHECK(b.s.max_abs() == 0.0);
}

TEST_CASE("charge conjugation annihilates the self-negating bilinears") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const Spinor psi = random_spinor(rng);
    const Spinor psic = charge_conjugate(psi);
    // psibar^c psi and psibar^c gamma5 gamma_mu psi vanish identically
    const DiracRep& rep = DiracRep::standard();
    auto sandwich = [&](const Matrix4c& G) {
      cplx s = 0;
      const Matrix4c M = rep.gam[0] * G;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s += std::conj(psic[a]) * M(a, b) * psi[b];
      return s;
    };
    CHECK(std::abs(sandwich(Matrix4c::identity())) < 1e-13);
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(sandwich(rep.g5 * rep.gamma(mu))) < 1e-13);
  }
  // double conjugation returns the spinor up to the representation sign
  const Spinor psi = random_spinor(rng);
  const Spinor twice = charge_conjugate(charge_conjugate(psi));
  CHECK((twice - psi * (-1.0)).max_abs() < 1e-14);
}

TEST_CASE("phase rotation fixes the gauge-invariant set and spins (m, n)") {
  std::mt19937_64 rng(2);
  const Spinor psi = random_spinor(rng);
  const double th = 0.7;
  const BilinearSet b0 = bilinears(psi);
  const BilinearSet b1 = bilinears(psi * std::exp(iu * th));
  CHECK(std::abs(b1.sigma - b0.sigma) < 1e-12);
  CHECK(std::abs(b1.omega - b0.omega) < 1e-12);
  CHECK((b1.j - b0.j).max_abs() < 1e-12);
  CHECK((b1.k - b0.k).max_abs() < 1e-12);
  CHECK(max_abs_diff(b1.s, b0.s) < 1e-12);
  // m + i n picks up exp(2 i theta)
  const cplx rot = std::exp(2.0 * iu * th);
  for (int mu = 0; mu < 4; ++mu) {
    const cplx mn0 = (b0.m[mu] + iu * b0.n[mu]) * rot;
    CHECK(std::abs((b1.m[mu] + iu * b1.n[mu]) - mn0) < 1e-12);
  }
  // the plane metric is preserved
  CHECK(std::abs(dot_lorentz(b1.m, b1.m) - dot_lorentz(b0.m, b0.m)) < 1e-12);
  CHECK(std::abs(dot_lorentz(b1.m, b1.n)) < 1e-12);
}

TEST_CASE("fierz residuals over 1000 random spinors, both representations") {
  for (const DiracRep* rep : {&DiracRep::standard(), &DiracRep::chiral()}) {
    const FierzResiduals r = fierz_suite(1000, 42, *rep);
    INFO(rep->name);
    CHECK(r.inner_jk <= 1e-10);
    CHECK(r.inner_mn <= 1e-10);
    CHECK(r.orthogonality <= 1e-10);
    CHECK(r.spin_plane <= 1e-10);
    CHECK(r.s_reconstruction <= 1e-10);
    CHECK(r.sdual_reconstruction <= 1e-10);
  }
}

TEST_CASE("corrupting a current component fires the inner-product detector") {
  std::mt19937_64 rng(3);
  const Spinor psi = random_spinor_off_null(rng);
  BilinearSet b = bilinears(psi);
  const double clean = fierz_residuals(b).inner_jk;
  b.j[0] += 1.0;
  // the unnormalized violation is |2 j0 + 1|
  const double expected = std::abs(2.0 * bilinears(psi).j[0] + 1.0);
  CHECK(expected > 1e-3);
  CHECK(fierz_residuals(b).inner_jk > 1e6 * (clean + 1e-16));
}

TEST_CASE("sigma^2 - omega^2 is never negative for spinor-derived sets") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 1000; ++n) {
    const BilinearSet b = bilinears(random_spinor(rng));
    CHECK(b.density().real() >= -1e-12);
    CHECK(std::abs(b.sigma.imag()) <= 1e-12 * std::max(1.0, std::abs(b.sigma)));
    CHECK(std::abs(b.omega.real()) <= 1e-12 * std::max(1.0, std::abs(b.omega)));
  }
}

TEST_CASE("tetrad contractions give the identity both ways") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const Spinor psi = random_spinor_off_null(rng, 1e-3);
    const BilinearSet b = bilinears(psi);
    if (b.density().real() <= 1e-3) continue;
    const TetradResult t = tetrad(b);
    CHECK(t.orthonormality_residual <= 1e-10);
  }
  // frozen unit case
  const TetradResult t0 = tetrad(bilinears(basis_spinor()));
  CHECK(t0.t(0, 0) == 1.0);
  CHECK(t0.t(3, 3) == -1.0);
  CHECK(t0.orthonormality_residual <= 1e-14);
}

TEST_CASE("tetrad rejects a degenerate density") {
  // A chiral-null spinor: sigma = omega = 0.
  Spinor psi{};
  psi[0] = 1.0;
  psi[2] = 1.0;  // upper+lower equal mix gives sigma = 0
  const BilinearSet b = bilinears(psi);
  REQUIRE(std::abs(b.density()) < 1e-12);
  CHECK_THROWS_AS((void)tetrad(b), DegenerateDensityError);
}

TEST_CASE("derivative identities vanish on constant and plane-wave fields") {
  Spinor u;
  std::mt19937_64 rng(6);
  u = random_spinor(rng);
  const Vec4 x{{0.2, -0.4, 0.8, 0.1}};

  const DerivativeIdentityResiduals c = derivative_identities(constant_spinor_field(u), x);
  CHECK(c.j_dk_antisymmetry <= 1e-14);
  CHECK(c.m_dn_antisymmetry <= 1e-14);
  CHECK(c.self_contraction <= 1e-14);

  const Vec4 p{{1.0, 0.0, 0.0, 0.3}};
  const SpinorField pw = plane_wave_field(p, u, Vec4{}, 1.0);
  const DerivativeIdentityResiduals r = derivative_identities(pw, x);
  CHECK(r.j_dk_antisymmetry <= 1e-10);
  CHECK(r.m_dn_antisymmetry <= 1e-10);
  CHECK(r.self_contraction <= 1e-10);
  if (r.replacement_applicable) {
    CHECK(r.replacement_scalar <= 1e-10);
    CHECK(r.replacement_pseudo <= 1e-10);
  }

  // finite-difference derivatives keep the identities to stencil accuracy
  const DiffEngine fd{DiffEngine::Mode::central, 1e-3, 4};
  const DerivativeIdentityResiduals rf = derivative_identities(pw, x, DiracRep::standard(), fd);
  CHECK(rf.j_dk_antisymmetry <= 1e-7);
  CHECK(rf.m_dn_antisymmetry <= 1e-7);
}

TEST_CASE("antisymmetry properties on random polynomial spinor fields") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-0.4, 0.4);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<Poly4, 4> re, im;
    for (int a = 0; a < 4; ++a) {
      re[a].terms = {{1.0 + uni(rng), {0, 0, 0, 0}},
                     {uni(rng), {1, 0, 0, 0}},
                     {uni(rng), {0, 1, 1, 0}},
                     {uni(rng), {0, 0, 2, 1}}};
      im[a].terms = {{uni(rng), {0, 0, 0, 0}},
                     {uni(rng), {0, 2, 0, 0}},
                     {uni(rng), {1, 0, 0, 1}}};
    }
    const SpinorField f = polynomial_spinor_field(re, im);
    for (int n = 0; n < 20; ++n) {
      const Vec4 x{{uni(rng), uni(rng), uni(rng), uni(rng)}};
      const DerivativeIdentityResiduals r = derivative_identities(f, x);
      CHECK(r.j_dk_antisymmetry <= 1e-10);
      CHECK(r.m_dn_antisymmetry <= 1e-10);
      CHECK(r.self_contraction <= 1e-10);
    }
  }
}
