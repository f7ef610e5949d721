#include "fierzmd/poincare.hpp"

#include <cmath>
#include <stdexcept>

namespace fierzmd {

Vec4 generator_vector_field(const GeneratorSpec& g, const Vec4& x) {
  return g.lorentz * x + g.translation;
}

GeneratorSpec lorentz_generator(int alpha, int beta) {
  // (l_{alpha beta})^mu_nu = delta_alpha^mu eta_{beta nu} - delta_beta^mu eta_{alpha nu}
  Mat4d m;
  for (int nu = 0; nu < 4; ++nu) {
    m(alpha, nu) += (beta == nu) ? eta(beta) : 0.0;
    m(beta, nu) -= (alpha == nu) ? eta(alpha) : 0.0;
  }
  return {m, Vec4{}, "l_" + std::to_string(alpha) + std::to_string(beta)};
}

namespace {
GeneratorSpec scaled(GeneratorSpec g, double s, const std::string& label) {
  g.lorentz = g.lorentz * s;
  g.translation = g.translation * s;
  g.label = label;
  return g;
}
GeneratorSpec sum(const GeneratorSpec& a, const GeneratorSpec& b, const std::string& label) {
  return {a.lorentz + b.lorentz, a.translation + b.translation, label};
}
}  // namespace

GeneratorSpec boost_K(int i) { return scaled(lorentz_generator(0, i), -1.0, "K" + std::to_string(i)); }

GeneratorSpec rotation_L(int i) {
  switch (i) {
    case 1: return scaled(lorentz_generator(2, 3), 1.0, "L1");
    case 2: return scaled(lorentz_generator(1, 3), -1.0, "L2");
    case 3: return scaled(lorentz_generator(1, 2), 1.0, "L3");
    default: throw std::out_of_range("rotation_L index");
  }
}

GeneratorSpec translation_P(int mu) {
  GeneratorSpec g;
  g.translation[mu] = 1.0;
  g.label = "P" + std::to_string(mu);
  return g;
}

GeneratorSpec pwz_B(int i) {
  switch (i) {
    case 1: return scaled(rotation_L(3), 2.0, "B1");
    case 2: return scaled(boost_K(3), -2.0, "B2");
    case 3: return sum(scaled(rotation_L(2), -1.0, ""), scaled(boost_K(1), -1.0, ""), "B3");
    case 4: return sum(rotation_L(1), scaled(boost_K(2), -1.0, ""), "B4");
    case 5: return sum(rotation_L(2), scaled(boost_K(1), -1.0, ""), "B5");
    case 6: return sum(rotation_L(1), boost_K(2), "B6");
    default: throw std::out_of_range("pwz_B index");
  }
}

GeneratorSpec pwz_X(int i) {
  switch (i) {
    case 1: return sum(scaled(translation_P(0), 0.5, ""), scaled(translation_P(3), -0.5, ""), "X1");
    case 2: return scaled(translation_P(2), 1.0, "X2");
    case 3: return scaled(translation_P(1), -1.0, "X3");
    case 4: return sum(scaled(translation_P(0), 0.5, ""), scaled(translation_P(3), 0.5, ""), "X4");
    default: throw std::out_of_range("pwz_X index");
  }
}

GeneratorSpec screw_generator(double phi) {
  return sum(scaled(pwz_B(1), std::cos(phi), ""), scaled(pwz_B(2), std::sin(phi), ""), "B_phi");
}

GeneratorSpec nonsplit_generator(double lambda) {
  return sum(pwz_B(2), scaled(pwz_X(2), lambda, ""), "B_lambda");
}

GeneratorSpec commutator(const GeneratorSpec& a, const GeneratorSpec& b) {
  GeneratorSpec c;
  c.lorentz = a.lorentz * b.lorentz - b.lorentz * a.lorentz;
  c.translation = a.lorentz * b.translation - b.lorentz * a.translation;
  c.label = "[" + a.label + "," + b.label + "]";
  return c;
}

bool is_lorentz_algebra_member(const Mat4d& X, double tol) {
  // (eta X)^T = -(eta X)
  Mat4d ex;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) ex(mu, nu) = eta(mu) * X(mu, nu);
  double worst = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) worst = std::max(worst, std::abs(ex(mu, nu) + ex(nu, mu)));
  return worst <= tol;
}

double lie_derivative_scalar(const ScalarField& f, const GeneratorSpec& g, const Vec4& x) {
  const Dual4 v = f.eval(x);
  const Vec4 xi = generator_vector_field(g, x);
  cplx s = 0;
  for (int mu = 0; mu < 4; ++mu) s += xi[mu] * v.g[static_cast<std::size_t>(mu)];
  return s.real();
}

Vec4 lie_derivative_vector(const VectorField& f, const GeneratorSpec& g, const Vec4& x) {
  const auto v = f.eval(x);
  const Vec4 xi = generator_vector_field(g, x);
  Vec4 out;
  for (int mu = 0; mu < 4; ++mu) {
    cplx s = 0;
    for (int sg = 0; sg < 4; ++sg) {
      s += xi[sg] * v[static_cast<std::size_t>(mu)].g[static_cast<std::size_t>(sg)];
      s -= g.lorentz(mu, sg) * v[static_cast<std::size_t>(sg)].v;  // d_sigma xi^mu = X^mu_sigma
    }
    out[mu] = s.real();
  }
  return out;
}

SubgroupSpec make_subgroup(SubgroupName name, double param) {
  SubgroupSpec sub;
  sub.name = name;
  sub.param = param;
  switch (name) {
    case SubgroupName::P3_4:
      sub.generators = {rotation_L(1), rotation_L(2), rotation_L(3)};
      break;
    case SubgroupName::P12_8:
      sub.generators = {rotation_L(3), translation_P(3)};
      break;
    case SubgroupName::P11_2: {
      if (param <= 0.0 || param >= M_PI || std::abs(param - M_PI / 2) < 1e-12)
        throw std::invalid_argument("P11_2 parameter must lie in (0, pi) away from pi/2");
      sub.generators = {screw_generator(param), pwz_X(1), pwz_X(2), pwz_X(3)};
      break;
    }
    case SubgroupName::P13_10tilde: {
      if (param <= 0.0) throw std::invalid_argument("P13_10tilde parameter must be positive");
      sub.generators = {nonsplit_generator(param), pwz_X(1), pwz_X(3), pwz_X(4)};
      break;
    }
  }
  return sub;
}

SubgroupName subgroup_from_string(const std::string& s) {
  if (s == "spherical" || s == "p3_4") return SubgroupName::P3_4;
  if (s == "cylindrical" || s == "p12_8") return SubgroupName::P12_8;
  if (s == "p11_2") return SubgroupName::P11_2;
  if (s == "p13_10" || s == "p13_10tilde") return SubgroupName::P13_10tilde;
  throw std::invalid_argument("unknown subgroup: " + s);
}

std::string subgroup_to_string(SubgroupName name) {
  switch (name) {
    case SubgroupName::P3_4: return "spherical";
    case SubgroupName::P12_8: return "cylindrical";
    case SubgroupName::P11_2: return "p11_2";
    case SubgroupName::P13_10tilde: return "p13_10";
  }
  return "?";
}

namespace {
// Flatten to R^20 for the span test.
std::array<double, 20> flatten(const GeneratorSpec& g) {
  std::array<double, 20> v{};
  for (int i = 0; i < 16; ++i) v[static_cast<std::size_t>(i)] = g.lorentz.e[static_cast<std::size_t>(i)];
  for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(16 + i)] = g.translation[i];
  return v;
}
}  // namespace

double subalgebra_closure_residual(const SubgroupSpec& sub) {
  const int n = static_cast<int>(sub.generators.size());
  std::vector<std::array<double, 20>> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (const auto& g : sub.generators) basis.push_back(flatten(g));

  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto c = flatten(commutator(sub.generators[static_cast<std::size_t>(a)],
                                        sub.generators[static_cast<std::size_t>(b)]));
      // least squares: minimize |sum_i x_i basis_i - c|
      std::vector<std::vector<double>> G(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n + 1), 0.0));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < 20; ++k)
            G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        for (int k = 0; k < 20; ++k)
          G[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] +=
              basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              c[static_cast<std::size_t>(k)];
      }
      // gaussian elimination with partial pivoting
      for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
          if (std::abs(G[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
              std::abs(G[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
            piv = r;
        std::swap(G[static_cast<std::size_t>(col)], G[static_cast<std::size_t>(piv)]);
        const double d = G[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (std::abs(d) < 1e-14) continue;
        for (int r = 0; r < n; ++r) {
          if (r == col) continue;
          const double fct = G[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / d;
          for (int cc = col; cc <= n; ++cc)
            G[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                fct * G[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
        }
      }
      std::vector<double> x(static_cast<std::size_t>(n), 0.0);
      for (int i = 0; i < n; ++i) {
        const double d = G[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (std::abs(d) > 1e-14)
          x[static_cast<std::size_t>(i)] = G[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] / d;
      }
      for (int k = 0; k < 20; ++k) {
        double r = -c[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i)
          r += x[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        worst = std::max(worst, std::abs(r));
      }
    }
  return worst;
}

namespace {
struct Coords {
  Dual4 t, x, y, z;
};
Coords seed(const Vec4& p) {
  return {Dual4::var(0, p[0]), Dual4::var(1, p[1]), Dual4::var(2, p[2]), Dual4::var(3, p[3])};
}
}  // namespace

VectorField spherical_vector_ansatz(Profile2 a, Profile2 b) {
  VectorField f;
  f.eval = [a, b](const Vec4& p) {
    const Coords c = seed(p);
    const Dual4 r = sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
    const Jet2 aj = a(p[0], r.v.real());
    const Jet2 bj = b(p[0], r.v.real());
    const Dual4 av = compose12(aj, c.t, r);
    const Dual4 bv = compose12(bj, c.t, r);
    return std::array<Dual4, 4>{av, c.x * bv, c.y * bv, c.z * bv};
  };
  return f;
}

ScalarField spherical_scalar_ansatz(Profile2 f) {
  ScalarField s;
  s.eval = [f](const Vec4& p) {
    const Coords c = seed(p);
    const Dual4 r = sqrt(c.x * c.x + c.y * c.y + c.z * c.z);
    return compose12(f(p[0], r.v.real()), c.t, r);
  };
  return s;
}

VectorField cylindrical_vector_ansatz(Profile2 a, Profile2 b, Profile2 c, Profile2 d) {
  VectorField f;
  f.eval = [a, b, c, d](const Vec4& p) {
    const Coords co = seed(p);
    const Dual4 rho = sqrt(co.x * co.x + co.y * co.y);
    const double t = p[0], r = rho.v.real();
    const Dual4 av = compose12(a(t, r), co.t, rho);
    const Dual4 bv = compose12(b(t, r), co.t, rho);
    const Dual4 cv = compose12(c(t, r), co.t, rho);
    const Dual4 dv = compose12(d(t, r), co.t, rho);
    return std::array<Dual4, 4>{av, co.x * bv - co.y * cv, co.y * bv + co.x * cv, dv};
  };
  return f;
}

ScalarField cylindrical_scalar_ansatz(Profile2 f) {
  ScalarField s;
  s.eval = [f](const Vec4& p) {
    const Coords c = seed(p);
    const Dual4 rho = sqrt(c.x * c.x + c.y * c.y);
    return compose12(f(p[0], rho.v.real()), c.t, rho);
  };
  return s;
}

VectorField p112_vector_ansatz(double a) {
  VectorField f;
  f.eval = [a](const Vec4& p) {
    const Coords c = seed(p);
    const Dual4 lp = c.t + c.z;
    return std::array<Dual4, 4>{lp * a, Dual4(0.0), Dual4(0.0), lp * a};
  };
  return f;
}

VectorField p1310_vector_ansatz(double a, double b, double c, double d, double lambda) {
  VectorField f;
  f.eval = [a, b, c, d, lambda](const Vec4& p) {
    const Coords co = seed(p);
    const double sp = (p[0] + p[3]) >= 0 ? 1.0 : -1.0;
    const double sm = (p[0] - p[3]) >= 0 ? 1.0 : -1.0;
    const Dual4 Ep = sp * exp(co.y * (-2.0 / lambda));
    const Dual4 Em = sm * exp(co.y * (2.0 / lambda));
    return std::array<Dual4, 4>{Ep * a + Em * b, Dual4(c), Dual4(d), Ep * a - Em * b};
  };
  return f;
}

InvariantFieldPair invariant_field(const SubgroupSpec& sub, const AnsatzProfile& profile) {
  switch (sub.name) {
    case SubgroupName::P3_4: {
      if (profile.funcs.size() != 2)
        throw std::invalid_argument("spherical ansatz needs profiles (a, b)");
      ScalarField sf = spherical_scalar_ansatz(profile.funcs[0]);
      return {spherical_vector_ansatz(profile.funcs[0], profile.funcs[1]), sf};
    }
    case SubgroupName::P12_8: {
      if (profile.funcs.size() != 4)
        throw std::invalid_argument("cylindrical ansatz needs profiles (a, b, c, d)");
      ScalarField sf = cylindrical_scalar_ansatz(profile.funcs[0]);
      return {cylindrical_vector_ansatz(profile.funcs[0], profile.funcs[1], profile.funcs[2],
                                        profile.funcs[3]),
              sf};
    }
    case SubgroupName::P11_2: {
      if (profile.constants.size() != 1)
        throw std::invalid_argument("P11_2 ansatz needs one constant");
      ScalarField sf;
      const double c0 = profile.constants[0];
      sf.eval = [c0](const Vec4&) { return Dual4(c0); };
      return {p112_vector_ansatz(profile.constants[0]), sf};
    }
    case SubgroupName::P13_10tilde: {
      if (profile.constants.size() != 4)
        throw std::invalid_argument("P13_10tilde ansatz needs constants (a, b, c, d)");
      ScalarField sf;
      const double c0 = profile.constants[0];
      sf.eval = [c0](const Vec4&) { return Dual4(c0); };
      return {p1310_vector_ansatz(profile.constants[0], profile.constants[1], profile.constants[2],
                                  profile.constants[3], sub.param),
              sf};
    }
  }
  throw std::invalid_argument("invariant_field: unknown subgroup");
}

}  // namespace fierzmd
