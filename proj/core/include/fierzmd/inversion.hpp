#ifndef FIERZMD_INVERSION_HPP
#define FIERZMD_INVERSION_HPP

#include <string>
#include <vector>

#include "fierzmd/bilinears.hpp"
#include "fierzmd/fields.hpp"

namespace fierzmd {

// External potential as a field of contravariant components.
using AField = std::function<CVec4(const Vec4&)>;

inline AField constant_potential(const Vec4& a) {
  return [a](const Vec4&) { return to_cvec(a); };
}

// Algebraic inversion of the Dirac equation for A^mu (scalar-density form).
// Valid on the support of sigma; throws SupportError when sigma vanishes.
CVec4 invert_A_scalar(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                      const DiracRep& rep = DiracRep::standard(), const DiffEngine& d = {});

// Alternative inversion through the pseudoscalar density (no mass term).
CVec4 invert_A_pseudo(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                      const DiracRep& rep = DiracRep::standard(), const DiffEngine& d = {});

// Mean of the two inverted forms, defined where both densities are nonzero.
CVec4 invert_A_combined(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                        const DiracRep& rep = DiracRep::standard(), const DiffEngine& d = {});

// Residual of the tensor-form consistency condition
// i j^nu d_mu k_nu - (2 m omega j_mu + sigma d_nu sdual_mu^nu - omega d_nu s_mu^nu),
// reported with a lower index.
CVec4 consistency_condition(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                            const DiracRep& rep = DiracRep::standard(), const DiffEngine& d = {});

// The gauge-invariant potential built from sigma, omega, j, k and first
// derivatives only (epsilon/delta bilinear form). Contravariant components.
CVec4 gauge_invariant_B(const BilinearState& state, const PhysicalParams& p, double eps_den = 1e-10);
CVec4 gauge_invariant_B(const BilinearField& field, const PhysicalParams& p, const Vec4& x,
                        double eps_den = 1e-10);

// Same quantity computed from a spinor field through the rank-2 tensor form
// (A minus its gauge-dependent m.dn part); used as the cross-check route.
CVec4 gauge_invariant_B_s_form(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                               const DiracRep& rep = DiracRep::standard(), const DiffEngine& d = {});

// The m^nu (d_mu n_nu) / (sigma^2 - omega^2) term connecting A and B,
// contravariant components of the lower-index expression divided by 2q.
CVec4 gauge_dependent_part(const SpinorField& f, const PhysicalParams& p, const Vec4& x,
                           const DiracRep& rep = DiracRep::standard(), const DiffEngine& d = {});

struct LedgerEntry {
  std::string name;
  double residual;
  bool applicable = true;
};

// The ten bilinearized Dirac-equation constraints evaluated against a given
// potential field at a point.
std::vector<LedgerEntry> bilinearized_constraints(const SpinorField& f, const AField& A,
                                                  const PhysicalParams& p, const Vec4& x,
                                                  const DiracRep& rep = DiracRep::standard(),
                                                  const DiffEngine& d = {});

}  // namespace fierzmd

#endif
