#ifndef FIERZMD_DIRAC_ALGEBRA_HPP
#define FIERZMD_DIRAC_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fierzmd/linalg.hpp"

namespace fierzmd {

// A concrete set of gamma matrices together with the induced gamma5 and
// charge-conjugation matrix. All identity checks are representation-covariant,
// so the same verifier runs against any unitarily rotated set.
struct DiracRep {
  std::array<Matrix4c, 4> gam;
  Matrix4c g5;
  Matrix4c C;
  std::string name;

  const Matrix4c& gamma(int mu) const;
  Matrix4c gamma_lower(int mu) const { return gam[static_cast<std::size_t>(mu)] * eta(mu); }
  Matrix4c sigma(int mu, int nu) const;        // (i/2)[gamma^mu, gamma^nu]

  static const DiracRep& standard();           // Dirac basis, gamma^0 = diag(1,1,-1,-1)
  static DiracRep rotated(const Matrix4c& U, const std::string& name);
  static const DiracRep& chiral();             // standard rotated into the Weyl basis
};

// Accessors in the standard representation.
const Matrix4c& gamma(int mu);
const Matrix4c& gamma5();
Matrix4c sigma_mn(int mu, int nu);
const Matrix4c& charge_conj_matrix();

// Levi-Civita symbol with upper indices, eps^{0123} = +1.
int levi_civita(int mu, int nu, int rho, int sig);
// Lowered version carries det(eta) = -1.
inline int levi_civita_lower(int mu, int nu, int rho, int sig) {
  return -levi_civita(mu, nu, rho, sig);
}

// Rank-4 antisymmetric shorthand delta^{mu nu rho sigma} =
// i(eta^{mu rho} eta^{nu sigma} - eta^{mu sigma} eta^{nu rho}).
cplx delta4(int mu, int nu, int rho, int sig);
// Fully lowered variant (eta is its own inverse, so the same value).
inline cplx delta4_lower(int mu, int nu, int rho, int sig) { return delta4(mu, nu, rho, sig); }

enum class IdentityId : std::uint8_t {
  anticommutator,
  commutator_sigma,
  gamma5_definition,
  gamma5_squared,
  gamma5_anticommute,
  gamma5_sigma_commute,
  gamma_gamma_expansion,
  gamma_contraction,
  gamma5_sandwich,
  triple_gamma,
  gamma_sandwich,
  gamma5_gamma_sandwich,
  quad_gamma,
  gamma_sigma_left,
  gamma_sigma_right,
  gamma_sigma_gamma,
  sigma_sandwich,
  epsilon_contraction,
  cc_gamma,
  cc_gamma5,
  cc_sigma,
  cc_gamma_pair,
  cc_gamma5_gamma,
  cc_bilinear_transport,
  cc_bilinear_examples,
  cc_derivative,
  cc_self_negating,
  conj_bilinear,
};

struct IdentityReport {
  IdentityId id;
  std::string name;
  double max_abs_residual;
};

const std::vector<IdentityId>& all_identities();
std::string identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name);

// Evaluates both sides of the identity over all free index tuples and, where
// spinors appear, over n_spinors random complex spinors drawn from the seeded
// generator. Returns the maximum absolute residual (normalized for the
// spinor-quadratic checks).
IdentityReport verify_identity(IdentityId id, const DiracRep& rep = DiracRep::standard(),
                               std::uint64_t seed = 12345, int n_spinors = 100);

std::vector<IdentityReport> verify_all_identities(const DiracRep& rep = DiracRep::standard(),
                                                  std::uint64_t seed = 12345, int n_spinors = 100);

}  // namespace fierzmd

#endif
