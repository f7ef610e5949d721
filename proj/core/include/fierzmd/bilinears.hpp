#ifndef FIERZMD_BILINEARS_HPP
#define FIERZMD_BILINEARS_HPP

#include <cstdint>
#include <random>

#include "fierzmd/fields.hpp"

namespace fierzmd {

// The full bilinear covariant set at a point.
struct BilinearSet {
  cplx sigma, omega;
  CVec4 j, k, m, n;          // contravariant
  Matrix4c s, sdual;         // s^{mu nu} as a matrix in (mu, nu)

  cplx density() const { return sigma * sigma - omega * omega; }
};

Spinor charge_conjugate(const Spinor& psi, const DiracRep& rep = DiracRep::standard());
BilinearSet bilinears(const Spinor& psi, const DiracRep& rep = DiracRep::standard());

// Residuals of the quadratic Fierz relations, normalized so that tolerances
// are scale-free. Reconstruction entries are flagged inapplicable instead of
// dividing by a vanishing density.
struct FierzResiduals {
  double inner_jk = 0;        // j.j = -k.k = sigma^2 - omega^2
  double inner_mn = 0;        // m.m = n.n = -(sigma^2 - omega^2)
  double orthogonality = 0;   // all six pairwise contractions vanish
  double spin_plane = 0;      // eps_{mu nu rho sigma} j^rho k^sigma = m_mu n_nu - m_nu n_mu
  double s_reconstruction = 0;
  double sdual_reconstruction = 0;
  bool reconstruction_applicable = true;

  double max_applicable() const {
    double r = std::max(std::max(inner_jk, inner_mn), std::max(orthogonality, spin_plane));
    if (reconstruction_applicable)
      r = std::max(r, std::max(s_reconstruction, sdual_reconstruction));
    return r;
  }
};

FierzResiduals fierz_residuals(const BilinearSet& b, double eps_den = 1e-10);

struct TetradResult {
  Mat4d t;                    // t^mu_alpha, columns (j, m, n, k)/sqrt(density)
  double orthonormality_residual;
};

// Throws DegenerateDensityError unless sigma^2 - omega^2 > 0.
TetradResult tetrad(const BilinearSet& b, double eps_den = 1e-10);

// Residuals of the derivative-level Fierz identities at a point, one entry
// per identity class.
struct DerivativeIdentityResiduals {
  double j_dk_antisymmetry = 0;   // j.dk = -k.dj, and its spinor-side value
  double m_dn_antisymmetry = 0;   // m.dn = -n.dm, and its spinor-side value
  double replacement_scalar = 0;  // spinor replacement rule entering via sigma
  double replacement_pseudo = 0;  // spinor replacement rule entering via omega
  double self_contraction = 0;    // x.dx chain equals d(sigma^2 - omega^2)/2
  bool replacement_applicable = true;

  double max_applicable() const {
    double r = std::max(std::max(j_dk_antisymmetry, m_dn_antisymmetry), self_contraction);
    if (replacement_applicable) r = std::max(r, std::max(replacement_scalar, replacement_pseudo));
    return r;
  }
};

DerivativeIdentityResiduals derivative_identities(const SpinorField& f, const Vec4& x,
                                                  const DiracRep& rep = DiracRep::standard(),
                                                  const DiffEngine& d = {});
DerivativeIdentityResiduals derivative_identities(const BilinearJets& bj, const SpinorJets& psi,
                                                  const DiracRep& rep = DiracRep::standard());

// Test/suite distribution: components with real and imaginary parts uniform
// on [-1, 1].
Spinor random_spinor(std::mt19937_64& rng);
// Same, but rejecting |sigma^2 - omega^2| below the cut.
Spinor random_spinor_off_null(std::mt19937_64& rng, double density_cut = 1e-6,
                              const DiracRep& rep = DiracRep::standard());

// Max Fierz residual over n random spinors; the suite behind `verify --suite fierz`.
FierzResiduals fierz_suite(int n, std::uint64_t seed, const DiracRep& rep = DiracRep::standard());

}  // namespace fierzmd

#endif
