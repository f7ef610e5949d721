// Command-line front end: suite orchestration, declarative field and profile
// specifications, machine-readable reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fierzmd/bilinears.hpp"
#include "fierzmd/cylindrical.hpp"
#include "fierzmd/dirac_algebra.hpp"
#include "fierzmd/inversion.hpp"
#include "fierzmd/maxwell.hpp"
#include "fierzmd/p112.hpp"
#include "fierzmd/p1310.hpp"
#include "fierzmd/poincare.hpp"
#include "fierzmd/spherical.hpp"

using json = nlohmann::ordered_json;
using namespace fierzmd;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

struct Report {
  std::string command;
  json config;
  std::vector<Check> checks;
  json payload;  // command-specific extras

  void add(const std::string& name, double residual, double tol) {
    checks.push_back({name, residual, tol});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  json to_json() const {
    json out;
    out["command"] = command;
    out["version"] = kVersion;
    out["config"] = config;
    json jc = json::array();
    int failed = 0;
    for (const auto& c : checks) {
      jc.push_back({{"name", c.name},
                    {"residual", c.residual},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass()}});
      if (!c.pass()) ++failed;
    }
    out["checks"] = jc;
    if (!payload.is_null()) out["payload"] = payload;
    out["summary"] = {{"total", checks.size()},
                      {"passed", checks.size() - static_cast<std::size_t>(failed)},
                      {"failed", failed},
                      {"pass", failed == 0}};
    return out;
  }
  std::string to_csv() const {
    std::ostringstream os;
    os << "name,residual,tolerance,pass\n";
    for (const auto& c : checks) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", c.residual, c.tolerance);
      os << c.name << "," << buf << "," << (c.pass() ? "true" : "false") << "\n";
    }
    return os.str();
  }
};

void emit(const Report& rep, const std::string& path, const std::string& format) {
  const std::string text = format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
  }
}

Vec4 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected a 4-vector array");
  return {{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()}};
}

Spinor spinor_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("expected a spinor as 4 [re, im] pairs");
  Spinor s;
  for (int a = 0; a < 4; ++a) s[a] = cplx{j[a][0].get<double>(), j[a][1].get<double>()};
  return s;
}

Poly4 poly4_from_json(const json& j) {
  Poly4 p;
  for (const auto& t : j)
    p.terms.push_back({t[0].get<double>(),
                       {t[1].get<int>(), t[2].get<int>(), t[3].get<int>(), t[4].get<int>()}});
  return p;
}

// Declarative spinor-field specs: plane_wave, two_wave, polynomial_phase.
SpinorField field_from_json(const json& spec, const PhysicalParams& pp) {
  if (spec.contains("plane_wave")) {
    const json& pw = spec["plane_wave"];
    const Vec4 p = vec_from_json(pw.at("p"));
    const Vec4 a = pw.contains("a") ? vec_from_json(pw["a"]) : Vec4{};
    Spinor u;
    if (pw.contains("u")) {
      u = spinor_from_json(pw["u"]);
    } else {
      u = on_shell_u(p, pp.mass, pw.value("u_basis", 0));
    }
    return plane_wave_field(p, u, a, pp.q);
  }
  if (spec.contains("two_wave")) {
    const json& tw = spec["two_wave"];
    const Vec4 p = vec_from_json(tw.at("p"));
    const Vec4 a = tw.contains("a") ? vec_from_json(tw["a"]) : Vec4{};
    const Spinor u = on_shell_u(p, pp.mass, tw.value("u_basis", 0));
    const Spinor v = on_shell_v(p, pp.mass, tw.value("v_basis", 2)) * tw.value("v_scale", 0.5);
    return two_wave_field(p, u, v, a, pp.q);
  }
  if (spec.contains("polynomial_phase")) {
    const json& pp2 = spec["polynomial_phase"];
    const Spinor u = spinor_from_json(pp2.at("u"));
    const Poly4 theta = poly4_from_json(pp2.at("theta"));
    return gauge_transformed(constant_spinor_field(u), theta, pp.q);
  }
  throw std::invalid_argument("unsupported field spec (expected plane_wave, two_wave "
                              "or polynomial_phase)");
}

Profile2 profile_from_json(const json& j) {
  Poly2 p;
  for (const auto& t : j) p.terms.push_back({t[0].get<double>(), t[1].get<int>(), t[2].get<int>()});
  return p.profile();
}

json cvec_to_json(const CVec4& v) {
  json out = json::array();
  for (int mu = 0; mu < 4; ++mu) out.push_back({v[mu].real(), v[mu].imag()});
  return out;
}

struct CommonOpts {
  double q = 1.0;
  double mass = 0.0;
  std::uint64_t seed = 12345;
  int count = 20;
  std::string output;
  std::string format = "json";
  std::string config_path;

  void attach(CLI::App* cmd, bool with_params = true) {
    if (with_params) {
      cmd->add_option("--q", q, "charge (nonzero)");
      cmd->add_option("--m", mass, "mass (>= 0)");
    }
    cmd->add_option("--seed", seed, "sampling seed (fixed seed gives identical reports)");
    cmd->add_option("--count", count, "number of sample points / trials");
    cmd->add_option("--output", output, "report path (default stdout)");
    cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--config", config_path, "JSON config file with field/profile specs");
  }
  json load_config() const {
    if (config_path.empty()) return {};
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot read config: " + config_path);
    json j;
    in >> j;
    return j;
  }
  PhysicalParams params() const {
    if (q == 0.0) throw std::invalid_argument("charge must be nonzero");
    if (mass < 0.0) throw std::invalid_argument("mass must be nonnegative");
    return {q, mass};
  }
};

int run_verify(const CommonOpts& opts, const std::string& suite, const std::string& rep_name,
               int n_spinors) {
  Report rep;
  rep.command = "verify";
  rep.config = {{"suite", suite}, {"rep", rep_name}, {"spinors", n_spinors}, {"seed", opts.seed}};
  const DiracRep& rep_obj = rep_name == "chiral" ? DiracRep::chiral() : DiracRep::standard();

  if (suite == "dirac" || suite == "all") {
    for (IdentityId id : all_identities()) {
      const IdentityReport r = verify_identity(id, rep_obj, opts.seed, n_spinors);
      rep.add("dirac." + r.name, r.max_abs_residual, 1e-13);
    }
  }
  if (suite == "fierz" || suite == "all") {
    const FierzResiduals r = fierz_suite(std::max(n_spinors, 1000), opts.seed, rep_obj);
    rep.add("fierz.inner_jk", r.inner_jk, 1e-10);
    rep.add("fierz.inner_mn", r.inner_mn, 1e-10);
    rep.add("fierz.orthogonality", r.orthogonality, 1e-10);
    rep.add("fierz.spin_plane", r.spin_plane, 1e-10);
    rep.add("fierz.s_reconstruction", r.s_reconstruction, 1e-10);
    rep.add("fierz.sdual_reconstruction", r.sdual_reconstruction, 1e-10);
  }
  if (suite == "derivative" || suite == "all") {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0;
    for (int n = 0; n < opts.count; ++n) {
      Vec4 p{{0, uni(rng), uni(rng), uni(rng)}};
      const double m = 0.5 + 0.5 * std::abs(uni(rng));
      p[0] = std::sqrt(m * m + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
      const SpinorField f = plane_wave_field(p, on_shell_u(p, m, n % 4), Vec4{}, 1.0);
      const Vec4 x{{uni(rng), uni(rng), uni(rng), uni(rng)}};
      worst = std::max(worst, derivative_identities(f, x, rep_obj).max_applicable());
    }
    rep.add("derivative.plane_wave_identities", worst, 1e-10);
  }
  if (suite == "ledger" || suite == "all") {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const PhysicalParams pp{1.2, 0.6};
    double worst = 0;
    for (int n = 0; n < opts.count; ++n) {
      Vec4 p{{0, 0.4 * uni(rng), 0.4 * uni(rng), 0.4 * uni(rng)}};
      p[0] = std::sqrt(pp.mass * pp.mass + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
      const Vec4 a{{uni(rng), uni(rng), uni(rng), uni(rng)}};
      const SpinorField f =
          two_wave_field(p, on_shell_u(p, pp.mass, 0), on_shell_v(p, pp.mass, 2) * 0.5, a, pp.q);
      const Vec4 x{{uni(rng), uni(rng), uni(rng), uni(rng)}};
      for (const auto& e : bilinearized_constraints(f, constant_potential(a), pp, x, rep_obj))
        if (e.applicable) worst = std::max(worst, e.residual);
    }
    rep.add("ledger.bilinearized_constraints", worst, 1e-9);
  }
  if (rep.checks.empty()) throw std::invalid_argument("unknown suite: " + suite);
  emit(rep, opts.output, opts.format);
  return rep.all_pass() ? 0 : 1;
}

int run_invert(const CommonOpts& opts) {
  const PhysicalParams pp = opts.params();
  const json cfg = opts.load_config();
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  Report rep;
  rep.command = "invert";
  rep.config = {{"q", pp.q}, {"m", pp.mass}, {"seed", opts.seed}, {"count", opts.count}};
  json points = json::array();

  double worst_roundtrip = 0, worst_ledger = 0;
  for (int n = 0; n < opts.count; ++n) {
    SpinorField f;
    Vec4 a{};
    if (cfg.contains("field")) {
      f = field_from_json(cfg["field"], pp);
      if (cfg["field"].begin().value().contains("a"))
        a = vec_from_json(cfg["field"].begin().value()["a"]);
    } else {
      Vec4 p{{0, 0.5 * uni(rng), 0.5 * uni(rng), 0.5 * uni(rng)}};
      const double m = std::max(pp.mass, 0.5);
      p[0] = std::sqrt(m * m + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
      a = Vec4{{uni(rng), uni(rng), uni(rng), uni(rng)}};
      f = two_wave_field(p, on_shell_u(p, m, 0), on_shell_v(p, m, 2) * 0.5, a,
                         pp.q);
    }
    const Vec4 x{{uni(rng), uni(rng), uni(rng), uni(rng)}};
    json pt;
    pt["x"] = {x[0], x[1], x[2], x[3]};
    try {
      const CVec4 As = invert_A_scalar(f, pp, x);
      pt["A_scalar_form"] = cvec_to_json(As);
      worst_roundtrip = std::max(worst_roundtrip, (As - to_cvec(a)).max_abs());
    } catch (const SupportError&) {
      pt["A_scalar_form"] = "degenerate";
    }
    try {
      pt["A_pseudo_form"] = cvec_to_json(invert_A_pseudo(f, pp, x));
    } catch (const SupportError&) {
      pt["A_pseudo_form"] = "degenerate";
    }
    try {
      pt["B"] = cvec_to_json(gauge_invariant_B(bilinear_field_from_spinor(f), pp, x));
    } catch (const DegenerateDensityError&) {
      pt["B"] = "degenerate";
    }
    json ledger = json::array();
    for (const auto& e : bilinearized_constraints(f, constant_potential(a), pp, x)) {
      ledger.push_back({{"name", e.name},
                        {"residual", e.residual},
                        {"applicable", e.applicable}});
      if (e.applicable) worst_ledger = std::max(worst_ledger, e.residual);
    }
    pt["ledger"] = ledger;
    points.push_back(pt);
  }
  rep.payload["points"] = points;
  rep.add("invert.roundtrip", worst_roundtrip, 1e-9);
  rep.add("invert.ledger", worst_ledger, 1e-9);
  emit(rep, opts.output, opts.format);
  return rep.all_pass() ? 0 : 1;
}

SphericalProfile spherical_profile_from_json(const json& j) {
  SphericalProfile p;
  p.ja = profile_from_json(j.at("ja"));
  p.jb = profile_from_json(j.at("jb"));
  p.sigma = profile_from_json(j.at("sigma"));
  p.w = profile_from_json(j.at("w"));
  p.branch = j.value("branch", +1);
  return p;
}

CylindricalProfile cylindrical_profile_from_json(const json& j) {
  CylindricalProfile p;
  p.ja = profile_from_json(j.at("ja"));
  p.jb = profile_from_json(j.at("jb"));
  p.jc = profile_from_json(j.at("jc"));
  p.jd = profile_from_json(j.at("jd"));
  p.ka = profile_from_json(j.at("ka"));
  p.kb = profile_from_json(j.at("kb"));
  p.kc = profile_from_json(j.at("kc"));
  p.kd = profile_from_json(j.at("kd"));
  p.sigma = profile_from_json(j.at("sigma"));
  p.w = profile_from_json(j.at("w"));
  return p;
}

int run_residual(const CommonOpts& opts, const std::string& group) {
  const PhysicalParams pp = opts.params();
  const json cfg = opts.load_config();
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  Report rep;
  rep.command = "residual";
  rep.config = {{"group", group}, {"q", pp.q}, {"m", pp.mass}, {"seed", opts.seed},
                {"count", opts.count}};
  json points = json::array();

  if (group == "spherical") {
    const SphericalProfile prof = cfg.contains("profile")
                                      ? spherical_profile_from_json(cfg["profile"])
                                      : random_consistent_spherical(rng);
    double worst_fierz = 0, worst_pipeline = 0;
    for (int n = 0; n < opts.count; ++n) {
      const double t = 0.4 * uni(rng), r = 1.2 + 0.35 * uni(rng);
      const SphericalMDResiduals md = spherical_md_residuals(prof, pp, t, r);
      points.push_back({{"t", t},
                        {"r", r},
                        {"maxwell_time", md.maxwell_time},
                        {"maxwell_radial", md.maxwell_radial},
                        {"fierz", md.fierz},
                        {"continuity", md.continuity},
                        {"axial", md.axial}});
      worst_fierz = std::max(worst_fierz, md.fierz);
      worst_pipeline = std::max({worst_pipeline,
                                 std::abs(md.maxwell_time - md.maxwell_time_pipeline),
                                 std::abs(md.maxwell_radial - md.maxwell_radial_pipeline)});
    }
    rep.add("residual.fierz_consistency", worst_fierz, 1e-8);
    rep.add("residual.verbatim_vs_pipeline", worst_pipeline, 1e-9);
  } else if (group == "cylindrical") {
    const CylindricalProfile prof = cfg.contains("profile")
                                        ? cylindrical_profile_from_json(cfg["profile"])
                                        : random_consistent_cylindrical(rng);
    double worst_fierz = 0;
    for (int n = 0; n < opts.count; ++n) {
      const double t = 0.4 * uni(rng), rho = 1.2 + 0.35 * uni(rng);
      const CylindricalMDResiduals md = cylindrical_md_residuals(prof, pp, t, rho);
      points.push_back({{"t", t},
                        {"rho", rho},
                        {"maxwell_time", md.maxwell_time},
                        {"maxwell_radial", md.maxwell_radial},
                        {"maxwell_azimuth", md.maxwell_azimuth},
                        {"maxwell_axial", md.maxwell_axial},
                        {"fierz_inner_j", md.fierz_inner_j},
                        {"fierz_inner_k", md.fierz_inner_k},
                        {"fierz_orth", md.fierz_orth},
                        {"continuity", md.continuity},
                        {"axial", md.axial}});
      worst_fierz = std::max({worst_fierz, md.fierz_inner_j, md.fierz_inner_k, md.fierz_orth});
    }
    rep.add("residual.fierz_consistency", worst_fierz, 1e-8);
  } else {
    throw std::invalid_argument("residual: group must be spherical or cylindrical");
  }
  rep.payload["points"] = points;
  if (opts.format == "csv") {
    // the per-point table is the payload people want as CSV
    std::ostringstream os;
    bool header = false;
    for (const auto& pt : points) {
      if (!header) {
        bool first = true;
        for (auto it = pt.begin(); it != pt.end(); ++it) {
          os << (first ? "" : ",") << it.key();
          first = false;
        }
        os << "\n";
        header = true;
      }
      bool first = true;
      for (auto it = pt.begin(); it != pt.end(); ++it) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", it.value().get<double>());
        os << (first ? "" : ",") << buf;
        first = false;
      }
      os << "\n";
    }
    if (opts.output.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream out(opts.output);
      out << os.str();
    }
    return rep.all_pass() ? 0 : 1;
  }
  emit(rep, opts.output, opts.format);
  return rep.all_pass() ? 0 : 1;
}

int run_lie_check(const CommonOpts& opts, const std::string& group, double phi, double lambda) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const SubgroupName name = subgroup_from_string(group);
  const double param = name == SubgroupName::P11_2 ? phi : lambda;
  const SubgroupSpec sub = make_subgroup(name, param);

  AnsatzProfile profile;
  if (name == SubgroupName::P3_4) {
    profile.funcs = {random_poly2(rng, 3, 1.0).profile(), random_poly2(rng, 3, 1.0).profile()};
  } else if (name == SubgroupName::P12_8) {
    for (int i = 0; i < 4; ++i) profile.funcs.push_back(random_poly2(rng, 3, 1.0).profile());
  } else if (name == SubgroupName::P11_2) {
    profile.constants = {uni(rng)};
  } else {
    profile.constants = {uni(rng), uni(rng), uni(rng), uni(rng)};
  }
  const InvariantFieldPair pair = invariant_field(sub, profile);

  double worst = 0;
  const bool light_cone = name == SubgroupName::P11_2 || name == SubgroupName::P13_10tilde;
  for (int n = 0; n < opts.count; ++n) {
    const Vec4 x = light_cone
                       ? Vec4{{3.0 + uni(rng), uni(rng), uni(rng), uni(rng)}}
                       : Vec4{{2.0 * uni(rng), 1.5 + uni(rng), 2.0 * uni(rng), 2.0 * uni(rng)}};
    for (const auto& g : sub.generators) {
      const Vec4 rv = lie_derivative_vector(pair.vector, g, x);
      for (int mu = 0; mu < 4; ++mu) worst = std::max(worst, std::abs(rv[mu]));
      worst = std::max(worst, std::abs(lie_derivative_scalar(pair.scalar, g, x)));
    }
  }

  Report rep;
  rep.command = "lie-check";
  rep.config = {{"group", group}, {"param", param}, {"seed", opts.seed}, {"count", opts.count}};
  rep.add("lie.subalgebra_closure", subalgebra_closure_residual(sub), 1e-12);
  rep.add("lie.ansatz_invariance", worst, 1e-8);
  emit(rep, opts.output, opts.format);
  return rep.all_pass() ? 0 : 1;
}

int run_reduce(const CommonOpts& opts, const std::string& group, double phi, double lambda,
               double ja, double jb, double ka, int branch) {
  const PhysicalParams pp = opts.params();
  Report rep;
  rep.command = "reduce";
  rep.config = {{"group", group}, {"q", pp.q}, {"m", pp.mass}, {"seed", opts.seed}};

  if (group == "p11_2") {
    rep.config["phi"] = phi;
    (void)make_subgroup(SubgroupName::P11_2, phi);  // validate the parameter
    const P112Report r = p112_solve(pp);
    json steps = json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"name", s.name}, {"residual", s.residual}});
      rep.add("p11_2." + s.name, s.residual, 1e-12);
    }
    rep.payload["solution"] = {{"sigma", r.solution.sigma},
                               {"w", r.solution.w},
                               {"j", {0.0, 0.0, 0.0, 0.0}},
                               {"k", {0.0, 0.0, 0.0, 0.0}}};
    rep.payload["derivation"] = steps;
  } else if (group == "p13_10") {
    rep.config["lambda"] = lambda;
    rep.config.update({{"ja", ja}, {"jb", jb}, {"ka", ka}, {"branch", branch}});
    const P1310SolveResult res = p1310_solve(lambda, pp, ja, jb, ka, branch);
    rep.payload["status"] = res.status == P1310Status::feasible_pair      ? "feasible"
                            : res.status == P1310Status::feasible_boundary ? "boundary"
                            : res.status == P1310Status::degenerate        ? "degenerate"
                                                                           : "infeasible";
    rep.payload["kd_squared"] = res.kd_squared;
    json sols = json::array();
    for (const auto& s : res.solutions) {
      const P1310VerifyReport v = p1310_verify(s, opts.count, opts.seed);
      sols.push_back({{"ja", s.ja}, {"jb", s.jb}, {"ka", s.ka}, {"kb", s.kb},
                      {"kc", s.kc}, {"kd", s.kd}, {"sigma", s.sigma},
                      {"f_residual", v.f_residual}, {"maxwell", v.maxwell},
                      {"continuity", std::max(v.continuity, v.axial)},
                      {"degenerate", v.degenerate}});
      rep.add("p13_10.f", v.f_residual, 1e-12);
      if (!v.degenerate) {
        rep.add("p13_10.maxwell", v.maxwell, 1e-6);
        rep.add("p13_10.continuity", std::max(v.continuity, v.axial), 1e-8);
      }
    }
    rep.payload["solutions"] = sols;
  } else if (group == "spherical" || group == "cylindrical") {
    return run_residual(opts, group);
  } else {
    throw std::invalid_argument("reduce: unknown group " + group);
  }
  emit(rep, opts.output, opts.format);
  return rep.all_pass() ? 0 : 1;
}

int run_solve_p1310(const CommonOpts& opts, double lambda, double ja, double jb, double ka,
                    int branch, int verify_points) {
  const PhysicalParams pp = opts.params();
  Report rep;
  rep.command = "solve-p1310";
  rep.config = {{"lambda", lambda}, {"q", pp.q}, {"m", pp.mass},
                {"ja", ja},         {"jb", jb},  {"ka", ka},
                {"branch", branch}, {"seed", opts.seed}};
  const P1310SolveResult res = p1310_solve(lambda, pp, ja, jb, ka, branch);
  rep.payload["status"] = res.status == P1310Status::feasible_pair      ? "feasible"
                          : res.status == P1310Status::feasible_boundary ? "boundary"
                          : res.status == P1310Status::degenerate        ? "degenerate"
                                                                         : "infeasible";
  rep.payload["kd_squared"] = res.kd_squared;
  json sols = json::array();
  for (const auto& s : res.solutions) {
    const P1310VerifyReport v = p1310_verify(s, verify_points, opts.seed);
    sols.push_back({{"lambda", s.lambda},
                    {"q", s.q},
                    {"m", s.mass},
                    {"ja", s.ja},
                    {"jb", s.jb},
                    {"ka", s.ka},
                    {"kb", s.kb},
                    {"kc", s.kc},
                    {"kd", s.kd},
                    {"sigma", s.sigma},
                    {"omega", 0.0},
                    {"residuals",
                     {{"f", v.f_residual},
                      {"orthogonality", v.orthogonality},
                      {"kc_equation", v.kc_equation},
                      {"sigma_relation", v.sigma_relation},
                      {"inner_product", v.inner_product},
                      {"maxwell", v.maxwell},
                      {"continuity", v.continuity},
                      {"axial", v.axial}}},
                    {"degenerate", v.degenerate}});
    rep.add("p13_10.f", v.f_residual, 1e-12);
    if (!v.degenerate) rep.add("p13_10.maxwell", v.maxwell, 1e-6);
  }
  rep.payload["solutions"] = sols;
  emit(rep, opts.output, opts.format);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numeric verification engine for the gauge-invariant Fierz-bilinear "
               "formulation of the Maxwell-Dirac equations"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity verification suite");
  CommonOpts vo;
  std::string suite = "all", rep_name = "standard";
  int n_spinors = 100;
  verify->add_option("--suite", suite, "dirac | fierz | derivative | ledger | all");
  verify->add_option("--rep", rep_name, "standard | chiral")
      ->check(CLI::IsMember({"standard", "chiral"}));
  verify->add_option("--spinors", n_spinors, "random spinors per identity");
  vo.attach(verify, false);

  // invert
  auto* invert = app.add_subcommand("invert", "invert the Dirac equation for the potential");
  CommonOpts io;
  io.attach(invert);

  // residual
  auto* residual = app.add_subcommand("residual", "reduced Maxwell-Dirac residual tables");
  CommonOpts ro;
  std::string res_group = "spherical";
  residual->add_option("--group", res_group, "spherical | cylindrical");
  ro.attach(residual);

  // lie-check
  auto* lie = app.add_subcommand("lie-check", "subgroup closure and ansatz invariance");
  CommonOpts lo;
  std::string lie_group = "spherical";
  double lie_phi = 0.9, lie_lambda = 1.0;
  lie->add_option("--group", lie_group, "spherical | cylindrical | p11_2 | p13_10");
  lie->add_option("--phi", lie_phi, "screw parameter for p11_2");
  lie->add_option("--lambda", lie_lambda, "non-splitting parameter for p13_10");
  lo.attach(lie, false);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "symmetry-reduced system reports");
  CommonOpts co;
  std::string red_group = "spherical";
  double red_phi = 0.9, red_lambda = 1.0, red_ja = 1.0, red_jb = 1.0, red_ka = 0.0;
  int red_branch = +1;
  reduce->add_option("--group", red_group, "spherical | cylindrical | p11_2 | p13_10");
  reduce->add_option("--phi", red_phi, "screw parameter");
  reduce->add_option("--lambda", red_lambda, "non-splitting parameter");
  reduce->add_option("--ja", red_ja);
  reduce->add_option("--jb", red_jb);
  reduce->add_option("--ka", red_ka);
  reduce->add_option("--branch", red_branch);
  co.attach(reduce);

  // solve-p1310
  auto* solve = app.add_subcommand("solve-p1310", "exact algebraic family member solver");
  CommonOpts so;
  double s_lambda = 1.0, s_ja = 1.0, s_jb = 1.0, s_ka = 0.0;
  int s_branch = +1, s_points = 50;
  solve->add_option("--lambda", s_lambda)->required();
  solve->add_option("--ja", s_ja)->required();
  solve->add_option("--jb", s_jb)->required();
  solve->add_option("--ka", s_ka);
  solve->add_option("--branch", s_branch);
  solve->add_option("--verify-points", s_points);
  so.attach(solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(vo, suite, rep_name, n_spinors);
    if (invert->parsed()) return run_invert(io);
    if (residual->parsed()) return run_residual(ro, res_group);
    if (lie->parsed()) return run_lie_check(lo, lie_group, lie_phi, lie_lambda);
    if (reduce->parsed())
      return run_reduce(co, red_group, red_phi, red_lambda, red_ja, red_jb, red_ka, red_branch);
    if (solve->parsed()) return run_solve_p1310(so, s_lambda, s_ja, s_jb, s_ka, s_branch, s_points);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
