#include "doctest.h"

#include "fierzmd/dirac_algebra.hpp"

using namespace fierzmd;

TEST_CASE("metric squares of the gamma matrices") {
  const Matrix4c I = Matrix4c::identity();
  CHECK(max_abs_diff(gamma(0) * gamma(0), I) == 0.0);
  CHECK(max_abs_diff(gamma(1) * gamma(1), -I) == 0.0);
  CHECK(max_abs_diff(gamma(0) * gamma(1) + gamma(1) * gamma(0), Matrix4c::zero()) == 0.0);
  CHECK_THROWS_AS((void)gamma(4), std::out_of_range);
  CHECK_THROWS_AS((void)gamma(-1), std::out_of_range);
}

TEST_CASE("gamma5 from the permutation sum oracle") {
  // brute-force sum over all 24 permutations
  Matrix4c sum = Matrix4c::zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sig = 0; sig < 4; ++sig) {
          const int e = levi_civita_lower(mu, nu, rho, sig);
          if (e)
            sum = sum + static_cast<double>(e) * (gamma(mu) * gamma(nu) * gamma(rho) * gamma(sig));
        }
  const Matrix4c oracle = (-iu / 24.0) * sum;
  CHECK(max_abs_diff(gamma5(), oracle) < 1e-14);
  CHECK(max_abs_diff(gamma5() * gamma5(), Matrix4c::identity()) == 0.0);
  CHECK(max_abs_diff(gamma5() * gamma(2) + gamma(2) * gamma5(), Matrix4c::zero()) == 0.0);
}

TEST_CASE("sigma antisymmetry and the gamma product expansion") {
  CHECK(sigma_mn(1, 1).max_abs() == 0.0);
  CHECK(max_abs_diff(sigma_mn(0, 1) + sigma_mn(1, 0), Matrix4c::zero()) == 0.0);
  // gamma^0 gamma^1 = eta^{01} I - i sigma^{01}
  CHECK(max_abs_diff(gamma(0) * gamma(1), (-iu) * sigma_mn(0, 1)) < 1e-15);
}

TEST_CASE("charge conjugation matrix") {
  const Matrix4c C = charge_conj_matrix();
  CHECK(max_abs_diff(C * C.inverse(), Matrix4c::identity()) < 1e-15);
  CHECK(max_abs_diff(C.inverse() * gamma5().transpose() * C, gamma5()) < 1e-15);
  // The tensor transports with a minus sign (composition of the vector rule).
  const Matrix4c s01 = eta(0) * eta(1) * sigma_mn(0, 1);
  CHECK(max_abs_diff(C.inverse() * s01.transpose() * C, -s01) < 1e-15);
}

TEST_CASE("antisymmetric symbols") {
  CHECK(levi_civita(0, 1, 2, 3) == 1);
  CHECK(levi_civita(1, 0, 2, 3) == -1);
  CHECK(levi_civita(0, 0, 2, 3) == 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) CHECK(levi_civita_lower(a, b, c, d) == -levi_civita(a, b, c, d));
  CHECK(std::abs(delta4(0, 1, 0, 1) - (-iu)) == 0.0);
  CHECK(std::abs(delta4(0, 0, 1, 2)) == 0.0);
  CHECK(std::abs(delta4(0, 1, 1, 0) - iu) == 0.0);
  // antisymmetry under both pair swaps
  CHECK(std::abs(delta4(2, 3, 1, 0) + delta4(3, 2, 1, 0)) == 0.0);
  CHECK(std::abs(delta4(2, 3, 1, 0) + delta4(2, 3, 0, 1)) == 0.0);
}

TEST_CASE("the full identity list verifies in both representations") {
  for (const DiracRep* rep : {&DiracRep::standard(), &DiracRep::chiral()}) {
    for (IdentityId id : all_identities()) {
      const IdentityReport r = verify_identity(id, *rep);
      INFO(rep->name, " ", r.name);
      CHECK(r.max_abs_residual <= 1e-13);
    }
  }
}

TEST_CASE("identity lookup by name") {
  CHECK(identity_from_name("sigma_sandwich") == IdentityId::sigma_sandwich);
  CHECK(identity_name(IdentityId::epsilon_contraction) == "epsilon_contraction");
  CHECK_THROWS_AS(identity_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("anticommutator relation holds exactly") {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double etamn = (mu == nu) ? eta(mu) : 0.0;
      const Matrix4c lhs = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      CHECK(max_abs_diff(lhs, Matrix4c::identity() * (2.0 * etamn)) <= 1e-15);
    }
}
