#include "skewgeom/suites.hpp"

#include "skewgeom/curvature.hpp"
#include "skewgeom/errors.hpp"
#include "skewgeom/hermitian.hpp"
#include "skewgeom/liegroup.hpp"
#include "skewgeom/sampling.hpp"
#include "skewgeom/structure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace skewgeom {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kCurvatureTol = 1e-9;
constexpr double kRicciTol = 1e-8;
constexpr double kFrameTol = 1e-12;

Environment make_env(const SuiteOptions& opt) {
  Environment env;
  env.seed = opt.seed;
  env.points = opt.points;
  if (opt.tol) env.tolerance_overrides["*"] = *opt.tol;
  return env;
}

bool admissible(const MetricFunctions& funcs, const ChartPoint& p) {
  const MetricJets j = evaluate(funcs, p);
  return positivity_holds(j.A.value, j.B.value);
}

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double jet_scale(const Jet2& a) {
  return std::max({std::abs(a.value), max_abs(a.grad), max_abs(a.hess)});
}

}  // namespace

std::vector<Family> corpus_families() {
  return {{"constant", "5", "1"},
          {"parallel", "x1 + x3 + 5", "x2"},
          {"diagonal", "5 + x2", "0"},
          {"sine", "6 + sin(x1)", "1"},
          {"exponential", "exp(x4) + 4", "x3 * 0.1"}};
}

std::vector<std::string> corpus_alphas() { return {"2", "exp(x1)", "1 + 0.1 * sin(x2)"}; }

MetricFunctions parse_family(const std::string& A, const std::string& B) {
  return {parse(A), parse(B)};
}

VerificationReport chart_suite(const MetricFunctions& funcs, const SuiteOptions& opt) {
  VerificationReport rep("chart-verify", make_env(opt));
  const SampleSet s = sample_points(opt.points, opt.seed,
                                    [&](const ChartPoint& p) { return admissible(funcs, p); });
  int parallel = 0;
  double max_ns = 0.0;
  for (const ChartPoint& p : s.points) {
    const MetricJets j = evaluate(funcs, p);
    const double sc = input_scale(j);
    const MetricPack pack = build_pack(j);
    auto obs = [&](const char* id, const char* ref, double r) {
      rep.observe(id, ref, r / sc, kIdentityTol);
    };

    obs("chart.pack_invariants",
        "S^4 = -id, S is a g-isometry, Phi = S - S^3, inverses of g and g~ and their closed forms",
        check_invariants(pack).max());
    obs("chart.christoffel_compatibility", "nabla g = 0 for the Levi-Civita symbols of g",
        metric_compatibility_residual(j, christoffel(j)));

    const FundamentalData fd = fundamental(j);
    const FundamentalData fc = fundamental_closed_form(j);
    obs("chart.fundamental_table",
        "F, theta, theta* through the connection equal their closed forms in dA, dB",
        std::max({max_abs(fd.F - fc.F), max_abs(fd.theta - fc.theta),
                  max_abs(fd.theta_star - fc.theta_star)}));
    obs("chart.fundamental_symmetry", "F(x, y, z) = F(x, z, y)", symmetry_residual(fd));
    obs("chart.theta_star", "theta* = -1/2 Phi theta", theta_star_residual(fd, pack));
    obs("chart.c1",
        "F_kij = 1/4 (g_kj th_i + g_ki th_j + g~_kj th*_i + g~_ki th*_j)", verify_c1(fd, pack));
    obs("chart.c3", "F(x, Jy, Jz) + F(y, Jz, Jx) + F(z, Jx, Jy) = 0", verify_c3(fd, pack));

    const NablaS ns = nabla_S(j);
    const bool pde = max_abs(parallel_conditions(j)) < kIdentityTol;
    rep.count("chart.parallel_S_iff_pde",
              "nabla S = 0 iff A1 - B2 + B4 = A2 - B1 - B3 = A3 - B2 - B4 = A4 - B3 + B1 = 0",
              ns.is_parallel != pde);
    parallel += ns.is_parallel;
    max_ns = std::max(max_ns, ns.max_abs);

    const Tensor3d nj = nabla_J(j);
    obs("hermitian.nablaJ_table", "nabla J through the connection equals its closed form",
        max_abs(nj - nabla_J_closed_form(j)));
    obs("hermitian.nablaJ_operator", "g((nabla J) y, z) = -(nabla Omega)(y, z)",
        max_abs(nabla_J_operator(j) + nj));
    obs("hermitian.nablaJ_skew", "(nabla_x Omega)(y, z) = -(nabla_x Omega)(z, y)",
        skew_residual(nj));
    obs("hermitian.omega", "omega through the connection equals its closed form",
        max_abs(omega(j) - omega_closed_form(j)));
    obs("hermitian.lck",
        "nabla_k J_ij = 1/2 (g_ki w_j - g_kj w_i + J_ki w~_j - J_kj w~_i)", verify_lck(j));
    rep.count("hermitian.parallel_J_iff_parallel_S", "nabla J = 0 iff nabla S = 0",
              (max_abs(nj) < kIdentityTol) != ns.is_parallel);
  }
  rep.note("S parallel at " + std::to_string(parallel) + "/" + std::to_string(s.points.size()) +
           " points; max |nabla S| = " + fmt("%.3e", max_ns));
  rep.note(std::to_string(s.rejected) + " of " + std::to_string(s.draws) + " draws rejected");
  return rep;
}

VerificationReport conformal_suite(const MetricFunctions& funcs, const ConformalFactor& alpha,
                                   const SuiteOptions& opt) {
  VerificationReport rep("conformal-verify", make_env(opt));
  const SampleSet s = sample_points(opt.points, opt.seed, [&](const ChartPoint& p) {
    return admissible(funcs, p) && eval(alpha.alpha, p) > 0.0;
  });
  int f_zero = 0;
  double max_fbar = 0.0;
  for (const ChartPoint& p : s.points) {
    const MetricJets j = evaluate(funcs, p);
    const Jet2 a = eval_jet2(alpha.alpha, p);
    const double sc = std::max(input_scale(j), 1.0 + jet_scale(a));
    auto obs = [&](const char* id, const char* ref, double r) {
      rep.observe(id, ref, r / sc, kIdentityTol);
    };
    const BarredPack bp = transform(j, a);
    obs("conformal.c1_barred",
        "F of alpha g equals 1/4 (g- th- + g- th- + g~- th-* + g~- th-*) with th- = th + "
        "(2/alpha) Phi d alpha, th-* = th* - (2/alpha) d alpha",
        verify_barred_identity(bp));
    obs("conformal.gamma_bar",
        "Levi-Civita of alpha g = Gamma + (1/2 alpha)(d alpha_i d^k_j + d alpha_j d^k_i - g_ij "
        "grad^k alpha)",
        max_abs(bp.gammabar - bp.gammabar_direct));
    obs("conformal.F_bar_nabla", "F of alpha g = alpha (nabla-bar g~) + g~ (x) d alpha",
        max_abs(bp.Fbar - bp.Fbar_barred_nabla));
    obs("conformal.theta_laws", "barred theta, theta* from the laws equal the direct contractions",
        std::max(max_abs(bp.thetabar - bp.thetabar_direct),
                 max_abs(bp.thetastarbar - bp.thetastarbar_direct)));
    obs("conformal.theta_star_barred", "barred theta* = -1/2 Phi barred theta",
        barred_theta_star_residual(bp));
    rep.count("conformal.positivity", "alpha g stays positive definite",
              !positivity_holds(a.value * j.A.value, a.value * j.B.value));
    max_fbar = std::max(max_fbar, max_abs(bp.Fbar));

    if (max_abs(fundamental(j).F) < kIdentityTol) {
      ++f_zero;
      const FZeroImage img = f_zero_image(j, a);
      obs("conformal.f_zero_image",
          "for F = 0: F of alpha g = 1/2 (g_kj (Phi d alpha)_i + g_ki (Phi d alpha)_j - g~_kj "
          "alpha_i - g~_ki alpha_j)",
          img.residual);
      rep.count("conformal.f_zero_iff_constant", "for F = 0: F of alpha g = 0 iff d alpha = 0",
                (img.max_Fbar < kIdentityTol) != (img.max_dalpha < kIdentityTol));
    }
  }
  rep.note("F = 0 at " + std::to_string(f_zero) + "/" + std::to_string(s.points.size()) +
           " points; max |F of alpha g| = " + fmt("%.3e", max_fbar));
  rep.note(std::to_string(s.rejected) + " of " + std::to_string(s.draws) + " draws rejected");
  return rep;
}

VerificationReport curvature_suite(const MetricFunctions& funcs, const SuiteOptions& opt,
                                   const std::optional<Vec4d>& direction) {
  VerificationReport rep("curvature-report", make_env(opt));
  const SampleSet s = sample_points(opt.points, opt.seed,
                                    [&](const ChartPoint& p) { return admissible(funcs, p); });
  CubeSampler dirs(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  constexpr double kCosCutoff = 1e-3;
  int skipped = 0, evaluated = 0, flat_tilde = 0, flat_g = 0;
  int classes[3] = {0, 0, 0};
  double tau_lo = std::numeric_limits<double>::infinity(), tau_hi = -tau_lo, max_T = 0.0;

  for (std::size_t n = 0; n < s.points.size(); ++n) {
    const MetricJets j = evaluate(funcs, s.points[n]);
    const double sc = input_scale(j);
    const MetricPack pack = build_pack(j);
    const CurvaturePack c = curvature(j);
    const TildeConnection tc = tilde_connection(j);
    auto obs = [&](const char* id, const char* ref, double r, double tol) {
      rep.observe(id, ref, r / sc, tol);
    };

    obs("curvature.symmetries",
        "R_ijks = -R_jiks = -R_ijsk = R_ksij, first Bianchi, rho symmetric", symmetries(c).max(),
        kCurvatureTol);
    obs("curvature.tilde_symmetries", "the same identities for R~ and rho~",
        tilde_symmetries(c).max(), kCurvatureTol);

    double tau2 = 0.0, taus2 = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int jx = 0; jx < 4; ++jx)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            tau2 += pack.g_inv(i, jx) * pack.g_inv(k, l) * c.R(k, i, jx, l);
            taus2 += pack.gt_inv(i, jx) * pack.g_inv(k, l) * c.R(k, i, jx, l);
          }
    obs("curvature.scalar_contraction",
        "tau and tau* equal the double contractions of R taken in one pass",
        std::max(std::abs(tau2 - c.tau), std::abs(taus2 - c.tau_star)), kCurvatureTol);
    obs("curvature.tilde_connection_routes",
        "Christoffel symbols of g~ = Gamma + 1/4 g~^ks (g_ij th_s + g~_ij th*_s)",
        tc.route_residual, kCurvatureTol);
    obs("curvature.deformation_tensor", "T^k_ij = -1/4 (g_ij th*^k + 1/2 g~_ij th^k)",
        tc.torsion_residual, kCurvatureTol);
    obs("curvature.tilde_raise", "g~^sk th_s = -th*^k", tilde_raise_residual(j), kCurvatureTol);
    obs("curvature.ricci_relation",
        "rho~ = rho + 1/4 (tau~* - tau) g + 1/4 (tau~ - tau*) g~", ricci_relation_residual(c, pack),
        kRicciTol);

    std::vector<Vec4d> xs;
    xs.push_back(Vec4d::UnitX());
    xs.push_back(Vec4d(1, 1, 0, 0));
    Vec4d rnd = dirs.vector();
    if (rnd.norm() < 1e-3) rnd = Vec4d(1, 2, 3, 4);
    xs.push_back(rnd);
    if (direction) xs.push_back(*direction);
    for (const Vec4d& x : xs) {
      const DirectionReport d = direction_report(pack, c, x, kCosCutoff);
      obs("curvature.direction_cos", "g(x, Sx) = g(x, x) cos phi and g~(x, x) = 2 g(x, x) cos phi",
          d.gcos_residual, kIdentityTol);
      rep.count("curvature.s_basis_angle", "an S-basis has pi/4 < phi < 3pi/4",
                d.induces_s_basis &&
                    !(d.phi > std::numbers::pi / 4 && d.phi < 3 * std::numbers::pi / 4));
      if (d.r_tilde) {
        ++evaluated;
        obs("curvature.directional_relation",
            "r~(x) = r(x)/(2 cos phi) + (tau~* - tau)/(8 cos phi) + (tau~ - tau*)/4",
            d.relation_residual, kRicciTol);
      } else {
        ++skipped;
      }
    }
    if (direction && n == 0) {
      const DirectionReport d = direction_report(pack, c, *direction, kCosCutoff);
      rep.note("direction at first point: cos phi = " + fmt("%.10g", d.cos_phi) +
               ", phi = " + fmt("%.10g", d.phi) + " rad, r = " + fmt("%.6g", d.r) +
               (d.r_tilde ? ", r~ = " + fmt("%.6g", *d.r_tilde) : ", " + d.notice) +
               (d.induces_s_basis ? ", S-basis" : ", no S-basis"));
    }

    const FlatnessCheck ft = flat_tilde_check(pack, c, rnd);
    if (ft.applies) {
      ++flat_tilde;
      obs("curvature.flat_tilde_form",
          "R~ = 0 gives rho = tau/4 g + tau*/4 g~ and r(x) = r(Sx) = r(S^2x) = r(S^3x)",
          std::max({ft.coefficient_residual, ft.fit_residual, ft.direction_spread}), kRicciTol);
    }
    const FlatnessCheck fg = flat_metric_check(pack, c, rnd);
    if (fg.applies) {
      ++flat_g;
      obs("curvature.flat_metric_form",
          "R = 0 gives rho~ = tau~/4 g~ + tau~*/4 g and r~(x) = r~(Sx) = r~(S^2x) = r~(S^3x)",
          std::max({fg.coefficient_residual, fg.fit_residual, fg.direction_spread}), kRicciTol);
    }
    if (max_abs(fundamental(j).F) < kIdentityTol) {
      obs("curvature.equal_connections",
          "F = 0 gives T = 0, R~(x, y) z = R(x, y) z, rho~ = rho, tau~* = tau, tau~ = tau*",
          std::max({max_abs(c.T), max_abs(c.R_tilde_endo - c.R_endo), max_abs(c.rho_tilde - c.rho),
                    std::abs(c.tau_tilde_star - c.tau), std::abs(c.tau_tilde - c.tau_star)}),
          kCurvatureTol);
    }

    const EinsteinDiagnosis e = einstein_diagnose(pack, c);
    ++classes[static_cast<int>(e.cls)];
    tau_lo = std::min(tau_lo, c.tau);
    tau_hi = std::max(tau_hi, c.tau);
    max_T = std::max(max_T, max_abs(c.T));
  }
  rep.note("tau in [" + fmt("%.6g", tau_lo) + ", " + fmt("%.6g", tau_hi) + "]; max |T| = " +
           fmt("%.3e", max_T));
  rep.note("einstein " + std::to_string(classes[0]) + ", almost_einstein " +
           std::to_string(classes[1]) + ", neither " + std::to_string(classes[2]));
  rep.note("directional relation evaluated " + std::to_string(evaluated) + " times, skipped " +
           std::to_string(skipped) + " times (|cos phi| <= 1e-3)");
  rep.note("R~ flat at " + std::to_string(flat_tilde) + " points, R flat at " +
           std::to_string(flat_g) + " points");
  return rep;
}

namespace {

void observe_frame_basics(VerificationReport& rep, const LieFrameReport& r) {
  rep.observe("lie.jacobi", "Jacobi identity of the brackets", jacobi_residual(r.spec.C),
              kFrameTol);
  rep.observe("lie.torsion_free", "nabla_x y - nabla_y x = [x, y] on the frame", r.torsion,
              kFrameTol);
  rep.observe("lie.metric_compatible", "g(nabla_x y, z) + g(y, nabla_x z) = 0 on the frame",
              r.compatibility, kFrameTol);
  rep.observe("lie.curvature_symmetries", "frame R pair symmetries and first Bianchi",
              r.curv.symmetry_residual, kFrameTol);
}

bool is_unit_cell(double a, double b) { return a == 1.0 && b == 1.0; }

// Holds below 1e-12 at (1, 1); fails by more than 1e-2 elsewhere.
bool iff_violated(double a, double b, double residual) {
  return is_unit_cell(a, b) ? !(residual < kFrameTol) : !(residual > 1e-2);
}

}  // namespace

VerificationReport lie_suite(double a, double b, const SuiteOptions& opt) {
  const LieAlgebraSpec spec = g45_spec(a, b);
  Environment env = make_env(opt);
  env.points = 1;
  VerificationReport rep("lie-report", env);
  const LieFrameReport r = lie_report(spec);
  observe_frame_basics(rep, r);

  Tensor3d table;
  table(3, 0, 0) = -1;
  table(0, 0, 3) = 1;
  table(3, 1, 1) = -a;
  table(1, 1, 3) = a;
  table(2, 2, 3) = b;
  table(3, 2, 2) = -b;
  rep.observe("lie.connection_table",
              "nabla_1 e1 = -e4, nabla_1 e4 = e1, nabla_2 e2 = -a e4, nabla_2 e4 = a e2, "
              "nabla_3 e4 = b e3, nabla_3 e3 = -b e4, all others 0",
              max_abs(r.nabla - table), kFrameTol);
  rep.observe("lie.omega", "omega = (0, b + 1, 0, 0)",
              max_abs(r.j.omega - Vec4d(0, b + 1, 0, 0)), kFrameTol);
  rep.count("lie.c1_iff_unit", "the c1 identity holds iff a = b = 1",
            iff_violated(a, b, r.f.c1_residual));
  rep.count("lie.lck_iff_unit", "the LCK identity holds iff a = b = 1",
            iff_violated(a, b, r.j.lck_residual));
  rep.count("lie.c1_iff_lck", "the c1 identity holds iff the LCK identity holds",
            r.f.c1_holds != r.j.lck_holds);
  if (is_unit_cell(a, b)) {
    const Tensor4d& R = r.curv.R;
    const double rr = std::max({std::abs(R(0, 1, 0, 1) - 1), std::abs(R(0, 3, 0, 3) - 1),
                                std::abs(R(1, 2, 1, 2) - 1), std::abs(R(2, 3, 2, 3) - 1),
                                std::abs(R(0, 2, 0, 2) - 1), std::abs(R(1, 3, 1, 3) - 1)});
    rep.observe("lie.unit_curvature",
                "a = b = 1: tau = -12, rho = -3 id, R_1212 = R_1414 = R_2323 = R_3434 = R_1313 = "
                "R_2424 = 1",
                std::max({std::abs(r.curv.tau + 12),
                          max_abs(r.curv.rho + 3 * Mat4d::Identity()), rr}),
                kFrameTol);
    rep.count("lie.unit_einstein", "a = b = 1: rho = tau/4 g", !r.curv.einstein);
  }
  rep.note("tau = " + fmt("%.12g", r.curv.tau) + ", einstein = " +
           (r.curv.einstein ? "true" : "false"));
  rep.note("c1 residual = " + fmt("%.3e", r.f.c1_residual) +
           (r.f.c1_holds ? " (holds)" : " (fails)") + ", LCK residual = " +
           fmt("%.3e", r.j.lck_residual) + (r.j.lck_holds ? " (holds)" : " (fails)"));
  rep.note("theta = (" + fmt("%g", r.f.theta[0]) + ", " + fmt("%g", r.f.theta[1]) + ", " +
           fmt("%g", r.f.theta[2]) + ", " + fmt("%g", r.f.theta[3]) + "), theta* = (" +
           fmt("%g", r.f.theta_star[0]) + ", " + fmt("%g", r.f.theta_star[1]) + ", " +
           fmt("%g", r.f.theta_star[2]) + ", " + fmt("%g", r.f.theta_star[3]) + ")");
  return rep;
}

VerificationReport lie_grid_suite(const SuiteOptions& opt) {
  const std::vector<GridCell> cells = grid_sweep();
  Environment env = make_env(opt);
  env.points = static_cast<int>(cells.size());
  VerificationReport rep("lie-grid", env);
  int passing = 0, outside_lck = 0;
  std::string passing_cells;
  for (const GridCell& c : cells) {
    bool rejected = false;
    try {
      g45_spec(c.a, c.b);
    } catch (const PreconditionError&) {
      rejected = true;
    }
    rep.count("lie.grid.domain", "cells with b > a are outside -1 <= b <= a <= 1",
              rejected != !c.admissible);
    if (!c.admissible) {
      outside_lck += c.lck_holds;
      continue;
    }
    rep.count("lie.grid.c1_iff_unit", "on the grid the c1 identity holds exactly at (1, 1)",
              iff_violated(c.a, c.b, c.c1_residual));
    rep.count("lie.grid.lck_iff_unit", "on the grid the LCK identity holds exactly at (1, 1)",
              iff_violated(c.a, c.b, c.lck_residual));
    rep.count("lie.grid.c1_iff_lck", "on the grid c1 holds iff LCK holds",
              c.c1_holds != c.lck_holds);
    if (c.c1_holds && c.lck_holds) {
      ++passing;
      passing_cells += "(" + fmt("%g", c.a) + ", " + fmt("%g", c.b) + ") ";
    }
  }
  rep.note("cells where both identities hold: " + std::to_string(passing) + " " + passing_cells);
  rep.note("outside the parameter range the LCK residual |b - 1|/2 vanishes on " +
           std::to_string(outside_lck) + " cells of the row b = 1");
  return rep;
}

VerificationReport full_suite(const SuiteOptions& opt) {
  VerificationReport all("all", make_env(opt));
  std::vector<Family> fams = corpus_families();
  for (const Family& f : fams) {
    const MetricFunctions funcs = parse_family(f.A, f.B);
    all.merge(chart_suite(funcs, opt), "chart/" + f.name + "/");
    all.merge(curvature_suite(funcs, opt), "curvature/" + f.name + "/");
    const std::vector<std::string> alphas = corpus_alphas();
    for (std::size_t k = 0; k < alphas.size(); ++k)
      all.merge(conformal_suite(funcs, {parse(alphas[k])}, opt),
                "conformal/" + f.name + "/alpha" + std::to_string(k + 1) + "/");
  }
  all.merge(chart_suite(parse_family("x1 + x3 + 5", "2 * x2"), opt), "chart/nonparallel/");
  all.merge(lie_suite(1.0, 1.0, opt), "lie/unit/");
  all.merge(lie_suite(0.5, 0.5, opt), "lie/half/");
  all.merge(lie_grid_suite(opt), "lie/grid/");
  return all;
}

}  // namespace skewgeom
