#ifndef FIERZMD_CYLINDRICAL_HPP
#define FIERZMD_CYLINDRICAL_HPP

#include <random>
#include <string>
#include <vector>

#include "fierzmd/common.hpp"
#include "fierzmd/fields.hpp"
#include "fierzmd/maxwell.hpp"
#include "fierzmd/profiles.hpp"

namespace fierzmd {

// Dependent functions of (t, rho); omega = i w as in the spherical case.
struct CylindricalProfile {
  Profile2 ja, jb, jc, jd;
  Profile2 ka, kb, kc, kd;
  Profile2 sigma, w;
};

struct CylindricalJets {
  Jet2 ja, jb, jc, jd, ka, kb, kc, kd, sg, om, rho;
  double t, rv;
};

CylindricalJets cylindrical_jets(const CylindricalProfile& p, double t, double rho);

// Both (k_a, k_d) roots of the quadratic obtained by eliminating k through
// the two Fierz identities, given the remaining components.
struct KCandidate {
  double ka, kd;
};
std::vector<KCandidate> cylindrical_k_elimination(double ja, double jb, double jc, double jd,
                                                  double kb, double kc, double rho);
std::vector<KCandidate> cylindrical_k_elimination(const CylindricalProfile& p, double t, double rho);

struct CylindricalB {
  double Ba, Bb, Bc, Bd;
};
CylindricalB cylindrical_B(const CylindricalProfile& p, const PhysicalParams& pp, double t,
                           double rho, double eps_den = 1e-10);
struct CylindricalBJets {
  Jet2 Ba, Bb, Bc, Bd;
};
CylindricalBJets cylindrical_B_jets(const CylindricalJets& cj, const PhysicalParams& pp,
                                    double eps_den = 1e-10);

struct CylindricalF {
  double Fa, Fb, Fc, Fd, Fe;
};
CylindricalF cylindrical_F(const CylindricalProfile& p, const PhysicalParams& pp, double t,
                           double rho, double eps_den = 1e-10);
struct CylindricalFJets {
  Jet2 Fa, Fb, Fc, Fd, Fe;
};
CylindricalFJets cylindrical_F_jets(const CylindricalJets& cj, const PhysicalParams& pp,
                                    double eps_den = 1e-10);

// Labeled additive terms of one component function ('a'..'e'), for
// localizing transcription mismatches by bisection.
std::vector<std::pair<std::string, cplx>> cylindrical_F_terms(const CylindricalProfile& p,
                                                              const PhysicalParams& pp, double t,
                                                              double rho, char which);

struct CylindricalMDResiduals {
  double maxwell_time;     // q j_a - (2 F_a + rho d_rho F_a)
  double maxwell_radial;   // q j_b + d_t F_a
  double maxwell_azimuth;  // q j_c - (-d_t F_b + (1/rho) d_rho F_d)
  double maxwell_axial;    // q j_d - (2 F_e - d_t F_c + rho d_rho F_e)
  double fierz_inner_j;    // j-side of the inner-product identity
  double fierz_inner_k;    // k-side
  double fierz_orth;       // orthogonality identity
  double continuity;       // 2 j_b + j_{a,t} + rho j_{b,rho}
  double axial;            // 2 k_b + k_{a,t} + rho k_{b,rho} + 2 i m omega
};
CylindricalMDResiduals cylindrical_md_residuals(const CylindricalProfile& p,
                                                const PhysicalParams& pp, double t, double rho,
                                                double eps_den = 1e-10);

BilinearField cylindrical_lifted_field(const CylindricalProfile& p);

// Constructive Fierz-consistent random profile on t in [-0.5, 0.5],
// rho in [0.8, 1.6].
CylindricalProfile random_consistent_cylindrical(std::mt19937_64& rng);

}  // namespace fierzmd

#endif
