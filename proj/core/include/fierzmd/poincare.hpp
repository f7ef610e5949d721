#ifndef FIERZMD_POINCARE_HPP
#define FIERZMD_POINCARE_HPP

#include <string>
#include <vector>

#include "fierzmd/jets.hpp"
#include "fierzmd/linalg.hpp"
#include "fierzmd/profiles.hpp"

namespace fierzmd {

// A Poincare algebra element: Lorentz matrix part plus constant translation
// part. The transformation vector field is xi^mu(x) = lorentz * x + translation.
struct GeneratorSpec {
  Mat4d lorentz;
  Vec4 translation;
  std::string label;
};

Vec4 generator_vector_field(const GeneratorSpec& g, const Vec4& x);

GeneratorSpec lorentz_generator(int alpha, int beta);  // l_{alpha beta}
GeneratorSpec boost_K(int i);                          // K_1..K_3
GeneratorSpec rotation_L(int i);                       // L_1..L_3
GeneratorSpec translation_P(int mu);                   // P_0..P_3
GeneratorSpec pwz_B(int i);                            // B_1..B_6
GeneratorSpec pwz_X(int i);                            // X_1..X_4
GeneratorSpec screw_generator(double phi);             // cos(phi) B_1 + sin(phi) B_2
GeneratorSpec nonsplit_generator(double lambda);       // B_2 + lambda X_2

GeneratorSpec commutator(const GeneratorSpec& a, const GeneratorSpec& b);
bool is_lorentz_algebra_member(const Mat4d& X, double tol = 1e-12);

// Ambient fields with analytic first derivatives.
struct ScalarField {
  std::function<Dual4(const Vec4&)> eval;
};
struct VectorField {
  std::function<std::array<Dual4, 4>(const Vec4&)> eval;
};

double lie_derivative_scalar(const ScalarField& f, const GeneratorSpec& g, const Vec4& x);
Vec4 lie_derivative_vector(const VectorField& f, const GeneratorSpec& g, const Vec4& x);

enum class SubgroupName { P3_4, P12_8, P11_2, P13_10tilde };

struct SubgroupSpec {
  SubgroupName name;
  double param = 0.0;  // phi for P11_2, lambda for P13_10tilde
  std::vector<GeneratorSpec> generators;
};

SubgroupSpec make_subgroup(SubgroupName name, double param = 0.0);
SubgroupName subgroup_from_string(const std::string& s);
std::string subgroup_to_string(SubgroupName name);

// Largest deviation of any pairwise commutator from the span of the
// generator list (least-squares projection residual).
double subalgebra_closure_residual(const SubgroupSpec& sub);

// Invariant ansatz constructors. Profiles must be smooth on the sampled
// domain; coordinate singularities (r = 0, rho = 0, l+- = 0) are the
// caller's responsibility to avoid.
VectorField spherical_vector_ansatz(Profile2 a, Profile2 b);
ScalarField spherical_scalar_ansatz(Profile2 f);
VectorField cylindrical_vector_ansatz(Profile2 a, Profile2 b, Profile2 c, Profile2 d);
ScalarField cylindrical_scalar_ansatz(Profile2 f);
VectorField p112_vector_ansatz(double a);
VectorField p1310_vector_ansatz(double a, double b, double c, double d, double lambda);

// Generic profile bundle for the CLI: functions for the first two groups,
// constants for the transitive ones.
struct AnsatzProfile {
  std::vector<Profile2> funcs;      // arity 2 (spherical) or 4 (cylindrical)
  std::vector<double> constants;    // arity 1 (P11_2) or 4 (P13_10tilde)
};

struct InvariantFieldPair {
  VectorField vector;
  ScalarField scalar;
};

// Throws std::invalid_argument on arity mismatch.
InvariantFieldPair invariant_field(const SubgroupSpec& sub, const AnsatzProfile& profile);

}  // namespace fierzmd

#endif
