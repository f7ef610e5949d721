#ifndef FIERZMD_SPHERICAL_HPP
#define FIERZMD_SPHERICAL_HPP

#include <random>
#include <utility>

#include "fierzmd/common.hpp"
#include "fierzmd/fields.hpp"
#include "fierzmd/maxwell.hpp"
#include "fierzmd/profiles.hpp"

namespace fierzmd {

// Dependent functions of (t, r) for the rotation-invariant reduction.
// omega is stored through its real part w (omega = i w), and branch is the
// sign in k_b = branch * j_a / r.
struct SphericalProfile {
  Profile2 ja, jb, sigma, w;
  int branch = +1;
};

// All reduced quantities as jets at a point; omega carries the factor i.
struct SphericalJets {
  Jet2 ja, jb, sg, om, ka, kb, r;
  double t, rv;
  int branch;
};

SphericalJets spherical_jets(const SphericalProfile& p, double t, double r);

// k expressed through j (branch-consistent pair).
std::pair<double, double> spherical_k_from_j(const SphericalProfile& p, double t, double r);

struct SphericalB {
  double Ba, Bb;
};
SphericalB spherical_B(const SphericalProfile& p, const PhysicalParams& pp, double t, double r,
                       double eps_den = 1e-10);
// Jet versions valid to second order, for the reduced field-strength route.
struct SphericalBJets {
  Jet2 Ba, Bb;
};
SphericalBJets spherical_B_jets(const SphericalJets& sj, const PhysicalParams& pp,
                                double eps_den = 1e-10);

struct SphericalF {
  double Fa, Fb;
};
// Closed-form component functions (F_{0i} = x_i Fa, F_{ij} built from Fb).
SphericalF spherical_F(const SphericalProfile& p, const PhysicalParams& pp, double t, double r,
                       double eps_den = 1e-10);
// Fa through the reduced pipeline (-d_t Bb - (1/r) d_r Ba) and the raw
// pre-simplification Fb; both cross-check the closed forms.
double spherical_F_a_from_B(const SphericalProfile& p, const PhysicalParams& pp, double t, double r);
double spherical_F_b_raw(const SphericalProfile& p, const PhysicalParams& pp, double t, double r);

struct SphericalMDResiduals {
  double maxwell_time;    // q^2 j_a minus the transcribed right-hand side
  double maxwell_radial;  // q^2 r j_b minus the transcribed right-hand side
  double fierz;           // j_a^2 - r^2 j_b^2 - (sigma^2 - omega^2)
  double continuity;      // j_{a,t} + 3 j_b + r j_{b,r}
  double axial;           // d.k + 2 i m omega, reduced form
  // residuals of the same two Maxwell equations evaluated through the
  // reduced F_a instead of the transcribed long forms
  double maxwell_time_pipeline;
  double maxwell_radial_pipeline;
};
SphericalMDResiduals spherical_md_residuals(const SphericalProfile& p, const PhysicalParams& pp,
                                            double t, double r, double eps_den = 1e-10);

// Ambient lift of the reduced state (for the 4D transcription oracles).
BilinearField spherical_lifted_field(const SphericalProfile& p);

// Maxwell divergence of the assembled spherically symmetric field strength,
// optionally with the magnetic (Fb) part removed; used to demonstrate that
// the monopole terms cancel from the coupled system.
CVec4 spherical_assembled_maxwell_residual(const SphericalProfile& p, const PhysicalParams& pp,
                                           const Vec4& x, const DiffEngine& d, bool include_Fb);

// Flux of the magnetic field through a sphere of radius r by quadrature.
double monopole_flux(const SphericalProfile& p, const PhysicalParams& pp, double t, double r,
                     int n_theta = 32, int n_phi = 64);

// Constructive Fierz-consistent random profile on t in [-0.5, 0.5],
// r in [0.8, 1.6].
SphericalProfile random_consistent_spherical(std::mt19937_64& rng);

}  // namespace fierzmd

#endif
