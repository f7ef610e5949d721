#include "fierzmd/dirac_algebra.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace fierzmd {

namespace {

Matrix4c pauli_block_gamma(int i) {
  // gamma^i = [[0, sigma_i], [-sigma_i, 0]] in the Dirac basis.
  Matrix4c s2;  // embeds sigma_i into the upper-right block
  Matrix4c g;
  auto set_blocks = [&](cplx a00, cplx a01, cplx a10, cplx a11) {
    g(0, 2) = a00;
    g(0, 3) = a01;
    g(1, 2) = a10;
    g(1, 3) = a11;
    g(2, 0) = -a00;
    g(2, 1) = -a01;
    g(3, 0) = -a10;
    g(3, 1) = -a11;
  };
  (void)s2;
  switch (i) {
    case 1: set_blocks(0, 1, 1, 0); break;
    case 2: set_blocks(0, -iu, iu, 0); break;
    case 3: set_blocks(1, 0, 0, -1); break;
    default: throw std::out_of_range("gamma index");
  }
  return g;
}

DiracRep make_standard() {
  DiracRep rep;
  rep.name = "dirac";
  Matrix4c g0;
  g0(0, 0) = 1;
  g0(1, 1) = 1;
  g0(2, 2) = -1;
  g0(3, 3) = -1;
  rep.gam[0] = g0;
  for (int i = 1; i < 4; ++i) rep.gam[static_cast<std::size_t>(i)] = pauli_block_gamma(i);
  rep.g5 = iu * rep.gam[0] * rep.gam[1] * rep.gam[2] * rep.gam[3];
  rep.C = iu * rep.gam[2] * rep.gam[0];
  return rep;
}

int factorial_parity_sign(std::array<int, 4> p) {
  // +1/-1/0 from permutation parity with repeats giving 0.
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(j)]) return 0;
      if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) sign = -sign;
    }
  return sign;
}

struct SpinorRng {
  std::mt19937_64 eng;
  std::uniform_real_distribution<double> dist{-1.0, 1.0};
  explicit SpinorRng(std::uint64_t seed) : eng(seed) {}
  CVec4 spinor() {
    CVec4 s;
    for (int i = 0; i < 4; ++i) s[i] = cplx{dist(eng), dist(eng)};
    return s;
  }
};

// psi-bar M psi with psi-bar = psi^dagger gamma^0.
cplx sandwich(const CVec4& chi, const Matrix4c& M, const CVec4& psi, const DiracRep& rep) {
  const CVec4 Mp = M * psi;
  cplx s = 0;
  for (int a = 0; a < 4; ++a) {
    cplx bar = 0;
    for (int b = 0; b < 4; ++b) bar += std::conj(chi[b]) * rep.gam[0](b, a);
    s += bar * Mp[a];
  }
  return s;
}

CVec4 conj_vec(const CVec4& v) {
  return {{std::conj(v[0]), std::conj(v[1]), std::conj(v[2]), std::conj(v[3])}};
}

// psi^c = C psibar^T = C gamma0^T conj(psi).
CVec4 charge_conj(const CVec4& psi, const DiracRep& rep) {
  return rep.C * (rep.gam[0].transpose() * conj_vec(psi));
}

const std::map<IdentityId, std::string>& name_table() {
  static const std::map<IdentityId, std::string> t = {
      {IdentityId::anticommutator, "anticommutator"},
      {IdentityId::commutator_sigma, "commutator_sigma"},
      {IdentityId::gamma5_definition, "gamma5_definition"},
      {IdentityId::gamma5_squared, "gamma5_squared"},
      {IdentityId::gamma5_anticommute, "gamma5_anticommute"},
      {IdentityId::gamma5_sigma_commute, "gamma5_sigma_commute"},
      {IdentityId::gamma_gamma_expansion, "gamma_gamma_expansion"},
      {IdentityId::gamma_contraction, "gamma_contraction"},
      {IdentityId::gamma5_sandwich, "gamma5_sandwich"},
      {IdentityId::triple_gamma, "triple_gamma"},
      {IdentityId::gamma_sandwich, "gamma_sandwich"},
      {IdentityId::gamma5_gamma_sandwich, "gamma5_gamma_sandwich"},
      {IdentityId::quad_gamma, "quad_gamma"},
      {IdentityId::gamma_sigma_left, "gamma_sigma_left"},
      {IdentityId::gamma_sigma_right, "gamma_sigma_right"},
      {IdentityId::gamma_sigma_gamma, "gamma_sigma_gamma"},
      {IdentityId::sigma_sandwich, "sigma_sandwich"},
      {IdentityId::epsilon_contraction, "epsilon_contraction"},
      {IdentityId::cc_gamma, "cc_gamma"},
      {IdentityId::cc_gamma5, "cc_gamma5"},
      {IdentityId::cc_sigma, "cc_sigma"},
      {IdentityId::cc_gamma_pair, "cc_gamma_pair"},
      {IdentityId::cc_gamma5_gamma, "cc_gamma5_gamma"},
      {IdentityId::cc_bilinear_transport, "cc_bilinear_transport"},
      {IdentityId::cc_bilinear_examples, "cc_bilinear_examples"},
      {IdentityId::cc_derivative, "cc_derivative"},
      {IdentityId::cc_self_negating, "cc_self_negating"},
      {IdentityId::conj_bilinear, "conj_bilinear"},
  };
  return t;
}

}  // namespace

const Matrix4c& DiracRep::gamma(int mu) const {
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma index out of range");
  return gam[static_cast<std::size_t>(mu)];
}

Matrix4c DiracRep::sigma(int mu, int nu) const {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::out_of_range("sigma index out of range");
  const Matrix4c& a = gam[static_cast<std::size_t>(mu)];
  const Matrix4c& b = gam[static_cast<std::size_t>(nu)];
  return (iu * 0.5) * (a * b - b * a);
}

const DiracRep& DiracRep::standard() {
  static const DiracRep rep = make_standard();
  return rep;
}

DiracRep DiracRep::rotated(const Matrix4c& U, const std::string& name) {
  const DiracRep& base = standard();
  DiracRep rep;
  rep.name = name;
  const Matrix4c Ut = U.transpose();
  for (int mu = 0; mu < 4; ++mu)
    rep.gam[static_cast<std::size_t>(mu)] = U * base.gam[static_cast<std::size_t>(mu)] * Ut;
  rep.g5 = iu * rep.gam[0] * rep.gam[1] * rep.gam[2] * rep.gam[3];
  rep.C = iu * rep.gam[2] * rep.gam[0];
  return rep;
}

const DiracRep& DiracRep::chiral() {
  static const DiracRep rep = [] {
    // Real orthogonal rotation from the Dirac to the Weyl basis, block form
    // (1/sqrt2) [[I, -I], [I, I]].
    Matrix4c U;
    const double s = 1.0 / std::sqrt(2.0);
    U(0, 0) = s;
    U(1, 1) = s;
    U(0, 2) = -s;
    U(1, 3) = -s;
    U(2, 0) = s;
    U(3, 1) = s;
    U(2, 2) = s;
    U(3, 3) = s;
    return rotated(U, "chiral");
  }();
  return rep;
}

const Matrix4c& gamma(int mu) { return DiracRep::standard().gamma(mu); }
const Matrix4c& gamma5() { return DiracRep::standard().g5; }
Matrix4c sigma_mn(int mu, int nu) { return DiracRep::standard().sigma(mu, nu); }
const Matrix4c& charge_conj_matrix() { return DiracRep::standard().C; }

int levi_civita(int mu, int nu, int rho, int sig) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || rho < 0 || rho > 3 || sig < 0 || sig > 3)
    throw std::out_of_range("levi_civita index out of range");
  return factorial_parity_sign({mu, nu, rho, sig});
}

cplx delta4(int mu, int nu, int rho, int sig) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || rho < 0 || rho > 3 || sig < 0 || sig > 3)
    throw std::out_of_range("delta4 index out of range");
  const double a = (mu == rho ? eta(mu) : 0.0) * (nu == sig ? eta(nu) : 0.0);
  const double b = (mu == sig ? eta(mu) : 0.0) * (nu == rho ? eta(nu) : 0.0);
  return iu * (a - b);
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [id, _] : name_table()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string identity_name(IdentityId id) { return name_table().at(id); }

IdentityId identity_from_name(const std::string& name) {
  for (const auto& [id, n] : name_table())
    if (n == name) return id;
  throw std::invalid_argument("unknown identity: " + name);
}

IdentityReport verify_identity(IdentityId id, const DiracRep& rep, std::uint64_t seed,
                               int n_spinors) {
  const Matrix4c I = Matrix4c::identity();
  const Matrix4c Z = Matrix4c::zero();
  auto g = [&](int mu) -> const Matrix4c& { return rep.gam[static_cast<std::size_t>(mu)]; };
  auto g_lo = [&](int mu) { return rep.gamma_lower(mu); };
  auto sg = [&](int mu, int nu) { return rep.sigma(mu, nu); };
  const Matrix4c& g5 = rep.g5;
  const Matrix4c& C = rep.C;
  const Matrix4c Cinv = C.inverse();

  double res = 0;
  auto upd = [&](double v) { res = std::max(res, v); };
  auto updm = [&](const Matrix4c& lhs, const Matrix4c& rhs) { upd(max_abs_diff(lhs, rhs)); };

  switch (id) {
    case IdentityId::anticommutator:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const double etamn = (mu == nu) ? eta(mu) : 0.0;
          updm(g(mu) * g(nu) + g(nu) * g(mu), I * (2.0 * etamn));
        }
      break;
    case IdentityId::commutator_sigma:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          updm(g(mu) * g(nu) - g(nu) * g(mu), (-2.0 * iu) * sg(mu, nu));
      break;
    case IdentityId::gamma5_definition: {
      Matrix4c sum = Z;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          for (int rho = 0; rho < 4; ++rho)
            for (int si = 0; si < 4; ++si) {
              const int e = levi_civita_lower(mu, nu, rho, si);
              if (e) sum = sum + static_cast<double>(e) * (g(mu) * g(nu) * g(rho) * g(si));
            }
      updm(g5, (-iu * (1.0 / 24.0)) * sum);
      updm(g5, iu * g(0) * g(1) * g(2) * g(3));
      updm(g5, (-iu) * g_lo(0) * g_lo(1) * g_lo(2) * g_lo(3));
      break;
    }
    case IdentityId::gamma5_squared:
      updm(g5 * g5, I);
      break;
    case IdentityId::gamma5_anticommute:
      for (int mu = 0; mu < 4; ++mu) updm(g5 * g(mu) + g(mu) * g5, Z);
      break;
    case IdentityId::gamma5_sigma_commute:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) updm(g5 * sg(mu, nu) - sg(mu, nu) * g5, Z);
      break;
    case IdentityId::gamma_gamma_expansion:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const double etamn = (mu == nu) ? eta(mu) : 0.0;
          updm(g(mu) * g(nu), I * etamn - iu * sg(mu, nu));
        }
      break;
    case IdentityId::gamma_contraction: {
      Matrix4c sum = Z;
      for (int mu = 0; mu < 4; ++mu) sum = sum + g(mu) * g_lo(mu);
      updm(sum, I * 4.0);
      break;
    }
    case IdentityId::gamma5_sandwich: {
      Matrix4c sum = Z;
      for (int mu = 0; mu < 4; ++mu) sum = sum + g(mu) * g5 * g_lo(mu);
      updm(sum, g5 * (-4.0));
      break;
    }
    case IdentityId::triple_gamma:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          for (int lam = 0; lam < 4; ++lam) {
            Matrix4c rhs = Z;
            if (mu == nu) rhs = rhs + eta(mu) * g(lam);
            if (nu == lam) rhs = rhs + eta(nu) * g(mu);
            if (mu == lam) rhs = rhs - eta(mu) * g(nu);
            for (int si = 0; si < 4; ++si) {
              const int e = levi_civita(mu, nu, lam, si);
              if (e) rhs = rhs - iu * static_cast<double>(e) * (g5 * g_lo(si));
            }
            updm(g(mu) * g(nu) * g(lam), rhs);
          }
      break;
    case IdentityId::gamma_sandwich:
      for (int mu = 0; mu < 4; ++mu) {
        Matrix4c sum = Z;
        for (int nu = 0; nu < 4; ++nu) sum = sum + g(nu) * g(mu) * g_lo(nu);
        updm(sum, g(mu) * (-2.0));
      }
      break;
    case IdentityId::gamma5_gamma_sandwich:
      for (int mu = 0; mu < 4; ++mu) {
        Matrix4c sum = Z;
        for (int nu = 0; nu < 4; ++nu) sum = sum + g(nu) * g5 * g(mu) * g_lo(nu);
        updm(sum, g5 * g(mu) * 2.0);
      }
      break;
    case IdentityId::quad_gamma:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          for (int si = 0; si < 4; ++si)
            for (int ep = 0; ep < 4; ++ep) {
              auto etad = [](int a, int b) { return a == b ? eta(a) : 0.0; };
              Matrix4c rhs = I * (etad(mu, nu) * etad(si, ep) + etad(nu, si) * etad(mu, ep) -
                                  etad(mu, si) * etad(nu, ep));
              rhs = rhs - iu * etad(mu, nu) * sg(si, ep);
              rhs = rhs - iu * etad(nu, si) * sg(mu, ep);
              rhs = rhs + iu * etad(mu, si) * sg(nu, ep);
              rhs = rhs + iu * etad(mu, ep) * sg(si, nu);
              rhs = rhs + iu * etad(nu, ep) * sg(mu, si);
              rhs = rhs + iu * etad(si, ep) * sg(nu, mu);
              const int e = levi_civita(mu, nu, si, ep);
              if (e) rhs = rhs - iu * static_cast<double>(e) * g5;
              updm(g(mu) * g(nu) * g(si) * g(ep), rhs);
            }
      break;
    case IdentityId::gamma_sigma_left:
      for (int ep = 0; ep < 4; ++ep)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            Matrix4c rhs = Z;
            if (ep == mu) rhs = rhs + iu * eta(ep) * g(nu);
            if (ep == nu) rhs = rhs - iu * eta(ep) * g(mu);
            for (int si = 0; si < 4; ++si) {
              const int e = levi_civita(mu, nu, ep, si);
              if (e) rhs = rhs + static_cast<double>(e) * (g5 * g_lo(si));
            }
            updm(g(ep) * sg(mu, nu), rhs);
          }
      break;
    case IdentityId::gamma_sigma_right:
      for (int ep = 0; ep < 4; ++ep)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            Matrix4c rhs = Z;
            if (nu == ep) rhs = rhs + iu * eta(nu) * g(mu);
            if (mu == ep) rhs = rhs - iu * eta(mu) * g(nu);
            for (int si = 0; si < 4; ++si) {
              const int e = levi_civita(mu, nu, ep, si);
              if (e) rhs = rhs + static_cast<double>(e) * (g5 * g_lo(si));
            }
            updm(sg(mu, nu) * g(ep), rhs);
          }
      break;
    case IdentityId::gamma_sigma_gamma:
      for (int mu = 0; mu < 4; ++mu)
        for (int si = 0; si < 4; ++si)
          for (int ep = 0; ep < 4; ++ep)
            for (int nu = 0; nu < 4; ++nu) {
              auto etad = [](int a, int b) { return a == b ? eta(a) : 0.0; };
              Matrix4c rhs = I * (iu * (etad(ep, nu) * etad(mu, si) - etad(si, nu) * etad(mu, ep)));
              rhs = rhs + etad(ep, nu) * sg(mu, si) - etad(si, nu) * sg(mu, ep);
              const int e1 = levi_civita(si, ep, nu, mu);
              if (e1) rhs = rhs - static_cast<double>(e1) * g5;
              for (int lam = 0; lam < 4; ++lam) {
                const int e2 = levi_civita(si, ep, nu, lam);
                if (e2) rhs = rhs + iu * static_cast<double>(e2) * (g5 * sg(mu, lam) * eta(lam));
              }
              updm(g(mu) * sg(si, ep) * g(nu), rhs);
            }
      break;
    case IdentityId::sigma_sandwich:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          Matrix4c sum = Z;
          for (int si = 0; si < 4; ++si) sum = sum + g(si) * sg(mu, nu) * g_lo(si);
          updm(sum, Z);
        }
      break;
    case IdentityId::epsilon_contraction:
      for (int rho = 0; rho < 4; ++rho)
        for (int si = 0; si < 4; ++si)
          for (int ep = 0; ep < 4; ++ep)
            for (int mu = 0; mu < 4; ++mu)
              for (int nu = 0; nu < 4; ++nu)
                for (int tau = 0; tau < 4; ++tau) {
                  double lhs = 0;
                  for (int lam = 0; lam < 4; ++lam) {
                    // eps_lam^{mu nu tau} raises three indices of the lowered symbol.
                    const double raised = eta(mu) * eta(nu) * eta(tau) *
                                          levi_civita_lower(lam, mu, nu, tau);
                    lhs += -levi_civita(lam, rho, si, ep) * raised;
                  }
                  auto etad = [](int a, int b) { return a == b ? eta(a) : 0.0; };
                  const double rhs = etad(rho, mu) * etad(si, nu) * etad(ep, tau) -
                                     etad(rho, mu) * etad(ep, nu) * etad(si, tau) +
                                     etad(rho, nu) * etad(si, tau) * etad(ep, mu) -
                                     etad(rho, nu) * etad(ep, tau) * etad(si, mu) +
                                     etad(rho, tau) * etad(si, mu) * etad(ep, nu) -
                                     etad(rho, tau) * etad(ep, mu) * etad(si, nu);
                  upd(std::abs(lhs - rhs));
                }
      break;
    case IdentityId::cc_gamma:
      for (int mu = 0; mu < 4; ++mu)
        updm(Cinv * g_lo(mu).transpose() * C, -g_lo(mu));
      break;
    case IdentityId::cc_gamma5:
      updm(Cinv * g5.transpose() * C, g5);
      break;
    case IdentityId::cc_sigma:
      // Sign fixed by composing the gamma transport rule twice; the same sign
      // is what makes psibar^c sigma psi^c = +psibar sigma psi come out right.
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          const Matrix4c s_lo = eta(mu) * eta(nu) * sg(mu, nu);
          updm(Cinv * s_lo.transpose() * C, -s_lo);
        }
      break;
    case IdentityId::cc_gamma_pair:
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          updm(Cinv * (g_lo(mu) * g_lo(nu)).transpose() * C, g_lo(nu) * g_lo(mu));
      break;
    case IdentityId::cc_gamma5_gamma:
      for (int mu = 0; mu < 4; ++mu)
        updm(Cinv * (g5 * g_lo(mu)).transpose() * C, g5 * g_lo(mu));
      break;
    case IdentityId::cc_bilinear_transport: {
      SpinorRng rng(seed);
      std::vector<Matrix4c> basis = {I, g5};
      for (int mu = 0; mu < 4; ++mu) basis.push_back(g(mu));
      for (int mu = 0; mu < 4; ++mu) basis.push_back(g5 * g(mu));
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) basis.push_back(sg(mu, nu));
      for (int n = 0; n < n_spinors; ++n) {
        const CVec4 psi = rng.spinor(), chi = rng.spinor();
        const CVec4 psic = charge_conj(psi, rep), chic = charge_conj(chi, rep);
        for (const auto& G : basis) {
          const cplx lhs = sandwich(psic, G, chic, rep);
          const cplx rhs = -sandwich(chi, Cinv * G.transpose() * C, psi, rep);
          upd(std::abs(lhs - rhs));
        }
      }
      break;
    }
    case IdentityId::cc_bilinear_examples: {
      SpinorRng rng(seed);
      for (int n = 0; n < n_spinors; ++n) {
        const CVec4 psi = rng.spinor();
        const CVec4 psic = charge_conj(psi, rep);
        upd(std::abs(sandwich(psic, I, psic, rep) + sandwich(psi, I, psi, rep)));
        for (int mu = 0; mu < 4; ++mu)
          upd(std::abs(sandwich(psic, g_lo(mu), psic, rep) - sandwich(psi, g_lo(mu), psi, rep)));
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            const Matrix4c s_lo = eta(mu) * eta(nu) * sg(mu, nu);
            upd(std::abs(sandwich(psic, s_lo, psic, rep) - sandwich(psi, s_lo, psi, rep)));
          }
      }
      break;
    }
    case IdentityId::cc_derivative: {
      SpinorRng rng(seed);
      for (int n = 0; n < n_spinors; ++n) {
        const CVec4 psi = rng.spinor();
        std::array<CVec4, 4> dpsi;
        for (auto& d : dpsi) d = rng.spinor();
        const CVec4 psic = charge_conj(psi, rep);
        for (int mu = 0; mu < 4; ++mu) {
          cplx lhs = 0, rhs = 0;
          for (int nu = 0; nu < 4; ++nu) {
            const CVec4 dpsic = rep.C * (rep.gam[0].transpose() * conj_vec(dpsi[static_cast<std::size_t>(nu)]));
            lhs += sandwich(psic, g_lo(mu) * g(nu), dpsic, rep);
            rhs -= sandwich(dpsi[static_cast<std::size_t>(nu)], g(nu) * g_lo(mu), psi, rep);
          }
          upd(std::abs(lhs - rhs));
        }
      }
      break;
    }
    case IdentityId::cc_self_negating: {
      SpinorRng rng(seed);
      for (int n = 0; n < n_spinors; ++n) {
        const CVec4 psi = rng.spinor();
        const CVec4 psic = charge_conj(psi, rep);
        upd(std::abs(sandwich(psic, I, psi, rep)));
        upd(std::abs(sandwich(psic, g5, psi, rep)));
        for (int mu = 0; mu < 4; ++mu)
          upd(std::abs(sandwich(psic, g5 * g_lo(mu), psi, rep)));
      }
      break;
    }
    case IdentityId::conj_bilinear: {
      SpinorRng rng(seed);
      std::vector<Matrix4c> basis = {I, g5};
      for (int mu = 0; mu < 4; ++mu) basis.push_back(g(mu));
      for (int mu = 0; mu < 4; ++mu) basis.push_back(g5 * g(mu));
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) basis.push_back(sg(mu, nu));
      for (int n = 0; n < n_spinors; ++n) {
        const CVec4 psi = rng.spinor(), chi = rng.spinor();
        for (const auto& G : basis) {
          const cplx lhs = std::conj(sandwich(chi, G, psi, rep));
          const cplx rhs = sandwich(psi, rep.gam[0] * G.adjoint() * rep.gam[0], chi, rep);
          upd(std::abs(lhs - rhs));
        }
      }
      break;
    }
    default:
      throw std::invalid_argument("verify_identity: unknown id");
  }

  return {id, identity_name(id), res};
}

std::vector<IdentityReport> verify_all_identities(const DiracRep& rep, std::uint64_t seed,
                                                  int n_spinors) {
  std::vector<IdentityReport> out;
  for (IdentityId id : all_identities()) out.push_back(verify_identity(id, rep, seed, n_spinors));
  return out;
}

}  // namespace fierzmd
