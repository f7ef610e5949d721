#include "fierzmd/p112.hpp"

#include <cmath>

namespace fierzmd {

std::vector<P112Step> p112_check(const PhysicalParams& pp, const P112Candidate& c) {
  std::vector<P112Step> steps;
  // Invariant four-vectors are null, so the inner-product identity forces the
  // density to vanish: sigma^2 - omega^2 = sigma^2 + w^2 = 0.
  steps.push_back({"fierz_null_cone", std::abs(c.sigma * c.sigma + c.w * c.w)});
  // The field strength is constant, so the Maxwell equations force j_a = 0.
  steps.push_back({"maxwell_ja", std::abs(pp.q * c.ja)});
  // d.j = 2 j_a reproduces the same constraint.
  steps.push_back({"continuity_ja", std::abs(2.0 * c.ja)});
  // d.k = 2 k_a = -2 i m omega fixes k_a = -i m omega = m w.
  steps.push_back({"axial_ka", std::abs(2.0 * c.ka + 2.0 * iu * pp.mass * (iu * c.w))});
  // sigma real and omega pure imaginary make the null-cone condition split.
  steps.push_back({"reality_sigma", std::abs(c.sigma)});
  steps.push_back({"reality_w", std::abs(c.w)});
  // With w = 0 the axial constraint collapses k_a as well.
  steps.push_back({"trivial_ka", std::abs(c.ka)});
  return steps;
}

P112Report p112_solve(const PhysicalParams& pp) {
  P112Report rep;
  rep.solution = P112Candidate{};  // sigma = omega = 0, j = k = 0
  rep.steps = p112_check(pp, rep.solution);
  rep.max_residual = 0;
  for (const auto& s : rep.steps) rep.max_residual = std::max(rep.max_residual, s.residual);
  return rep;
}

}  // namespace fierzmd
