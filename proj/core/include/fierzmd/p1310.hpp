#ifndef FIERZMD_P1310_HPP
#define FIERZMD_P1310_HPP

#include <cstdint>
#include <vector>

#include "fierzmd/common.hpp"
#include "fierzmd/fields.hpp"

namespace fierzmd {

// A member of the exact algebraic solution family of the non-splitting
// reduction: all dependent variables constant, j_c = j_d = 0, omega = 0,
// sigma = branch * 2 sqrt(ja jb).
struct SolutionP1310 {
  double lambda;
  double q;
  double mass;
  double ja, jb;
  double ka, kb, kc, kd;
  int branch;  // sign of sigma
  double sigma;
};

enum class P1310Status { feasible_pair, feasible_boundary, infeasible, degenerate };

struct P1310SolveResult {
  P1310Status status;
  double kd_squared;
  std::vector<SolutionP1310> solutions;
};

// Algebraic construction of the family: k_b from the orthogonality identity,
// k_c from the reduced Maxwell equation through sigma^2 = 4 ja jb, k_d^2 from
// the remaining inner-product identity. Throws std::domain_error on the
// lambda/q/ja preconditions; an imaginary k_d is reported as infeasible,
// not thrown.
P1310SolveResult p1310_solve(double lambda, const PhysicalParams& pp, double ja, double jb,
                             double ka, int branch = +1);

// The reduced algebraic function whose zero set is the family.
double p1310_f(const SolutionP1310& s);

BilinearField p1310_lifted_field(const SolutionP1310& s);

struct P1310VerifyReport {
  double f_residual;
  double orthogonality;    // ja kb + jb ka
  double kc_equation;      // kc - (lambda^3 q^2 sigma^2 / 4 - lambda m sigma)
  double sigma_relation;   // sigma^2 - 4 ja jb
  double inner_product;    // -4 ja jb - 4 ka kb + kc^2 + kd^2
  double maxwell;          // worst ambient Maxwell residual over the samples
  double continuity;       // worst |d.j|
  double axial;            // worst |d.k + 2 i m omega|
  bool degenerate = false; // sigma^2 - omega^2 = 0 member, ambient checks skipped

  double max_algebraic() const {
    return std::max({f_residual, orthogonality, kc_equation, sigma_relation, inner_product});
  }
};

// Lifts the member into the ambient pipeline and evaluates the Maxwell and
// continuity residuals at random points with y in [-lambda, lambda], inside
// the t^2 > z^2 wedge and away from the light cone.
P1310VerifyReport p1310_verify(const SolutionP1310& s, int n_points = 50,
                               std::uint64_t seed = 2024, const DiffEngine& d = {});

}  // namespace fierzmd

#endif
