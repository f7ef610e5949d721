#ifndef FIERZMD_P112_HPP
#define FIERZMD_P112_HPP

#include <string>
#include <vector>

#include "fierzmd/common.hpp"
#include "fierzmd/linalg.hpp"

namespace fierzmd {

// The screw-subgroup reduction collapses all dependent variables to
// constants and admits only the trivial solution. The solver returns it
// together with a machine-checked derivation: each step's premise evaluated
// as a residual on the candidate constants.
struct P112Step {
  std::string name;
  double residual;
};

struct P112Candidate {
  double sigma = 0.0;
  double w = 0.0;  // omega = i w
  double ja = 0.0;
  double ka = 0.0;
};

struct P112Report {
  P112Candidate solution;
  std::vector<P112Step> steps;
  double max_residual;
};

std::vector<P112Step> p112_check(const PhysicalParams& pp, const P112Candidate& c);
P112Report p112_solve(const PhysicalParams& pp);

}  // namespace fierzmd

#endif
