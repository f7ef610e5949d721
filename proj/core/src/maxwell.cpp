#include "fierzmd/maxwell.hpp"

namespace fierzmd {

namespace {

// Raw complex F_{mu nu} prior to antisymmetrization.
std::array<std::array<cplx, 4>, 4> field_strength_raw(const BilinearField& field,
                                                      const PhysicalParams& p, const Vec4& x,
                                                      const DiffEngine& d, double eps_den) {
  auto B_lower = [&](const Vec4& y) { return lower(gauge_invariant_B(field, p, y, eps_den)); };

  std::array<CVec4, 4> dB;  // dB[mu] = d_mu B_nu
  for (int mu = 0; mu < 4; ++mu) dB[static_cast<std::size_t>(mu)] = fd_partial(B_lower, x, mu, d);

  const BilinearState st = field(x);
  const Dual4 D = st.sigma * st.sigma - st.omega * st.omega;
  const cplx D2 = D.v * D.v;

  // eps^{sigma rho kappa tau} j_kappa k_tau [(d_mu j_sigma)(d_nu j_rho) -
  // (d_mu k_sigma)(d_nu k_rho)] / (2 q D^2), all indices on j, k lowered.
  std::array<std::array<cplx, 4>, 4> rational{};
  for (int si = 0; si < 4; ++si)
    for (int rho = 0; rho < 4; ++rho)
      for (int ka = 0; ka < 4; ++ka)
        for (int ta = 0; ta < 4; ++ta) {
          const int e = levi_civita(si, rho, ka, ta);
          if (!e) continue;
          const cplx jk = static_cast<double>(e) * eta(ka) * st.j[static_cast<std::size_t>(ka)].v *
                          eta(ta) * st.k[static_cast<std::size_t>(ta)].v;
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
              const cplx djdj = eta(si) * st.j[static_cast<std::size_t>(si)].g[static_cast<std::size_t>(mu)] *
                                eta(rho) * st.j[static_cast<std::size_t>(rho)].g[static_cast<std::size_t>(nu)];
              const cplx dkdk = eta(si) * st.k[static_cast<std::size_t>(si)].g[static_cast<std::size_t>(mu)] *
                                eta(rho) * st.k[static_cast<std::size_t>(rho)].g[static_cast<std::size_t>(nu)];
              rational[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] += jk * (djdj - dkdk);
            }
        }

  std::array<std::array<cplx, 4>, 4> F{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      F[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          dB[static_cast<std::size_t>(mu)][nu] - dB[static_cast<std::size_t>(nu)][mu] +
          rational[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] / (2.0 * p.q * D2);
  return F;
}

}  // namespace

FieldStrengthDebug field_strength_debug(const BilinearField& field, const PhysicalParams& p,
                                        const Vec4& x, const DiffEngine& d, double eps_den) {
  const auto raw = field_strength_raw(field, p, x, d, eps_den);
  FieldStrengthDebug out{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const cplx v = raw[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
      const cplx w = raw[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)];
      out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
      out.max_sym = std::max(out.max_sym, std::abs((v + w) * 0.5));
      if (mu < nu) out.F.set(mu, nu, 0.5 * (v - w).real());
    }
  return out;
}

AntisymTensor2 field_strength(const BilinearField& field, const PhysicalParams& p, const Vec4& x,
                              const DiffEngine& d, double eps_den) {
  return field_strength_debug(field, p, x, d, eps_den).F;
}

CVec4 maxwell_residual(const BilinearField& field, const PhysicalParams& p, const Vec4& x,
                       const DiffEngine& d, double eps_den) {
  DiffEngine outer = d;
  outer.h = 2.0 * d.h;

  auto F_at = [&](const Vec4& y) {
    const auto raw = field_strength_raw(field, p, y, d, eps_den);
    std::array<cplx, 16> flat{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        flat[static_cast<std::size_t>(4 * mu + nu)] =
            0.5 * (raw[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] -
                   raw[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)]);
    return flat;
  };
  // Stencil on the flattened tensor; std::array lacks arithmetic, so wrap it.
  struct FlatF {
    std::array<cplx, 16> v{};
    FlatF operator+(const FlatF& o) const {
      FlatF r;
      for (int i = 0; i < 16; ++i) r.v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + o.v[static_cast<std::size_t>(i)];
      return r;
    }
    FlatF operator-(const FlatF& o) const {
      FlatF r;
      for (int i = 0; i < 16; ++i) r.v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - o.v[static_cast<std::size_t>(i)];
      return r;
    }
    FlatF operator*(double s) const {
      FlatF r;
      for (int i = 0; i < 16; ++i) r.v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] * s;
      return r;
    }
  };
  auto F_wrapped = [&](const Vec4& y) { return FlatF{F_at(y)}; };

  std::array<FlatF, 4> dF;
  for (int nu = 0; nu < 4; ++nu) dF[static_cast<std::size_t>(nu)] = fd_partial(F_wrapped, x, nu, outer);

  const BilinearState st = field(x);
  CVec4 res;
  for (int mu = 0; mu < 4; ++mu) {
    cplx div = 0;
    for (int nu = 0; nu < 4; ++nu) {
      // F^{nu mu} = eta(nu) eta(mu) F_{nu mu}
      div += eta(nu) * eta(mu) * dF[static_cast<std::size_t>(nu)].v[static_cast<std::size_t>(4 * nu + mu)];
    }
    res[mu] = div - p.q * st.j[static_cast<std::size_t>(mu)].v;
  }
  return res;
}

ContinuityResiduals continuity_residuals(const BilinearField& field, const PhysicalParams& p,
                                         const Vec4& x) {
  const BilinearState st = field(x);
  cplx dj = 0, dk = 0;
  for (int mu = 0; mu < 4; ++mu) {
    dj += st.j[static_cast<std::size_t>(mu)].g[static_cast<std::size_t>(mu)];
    dk += st.k[static_cast<std::size_t>(mu)].g[static_cast<std::size_t>(mu)];
  }
  return {dj, dk + 2.0 * iu * p.mass * st.omega.v};
}

}  // namespace fierzmd
