#include "skewgeom/curvature.hpp"

#include "skewgeom/errors.hpp"
#include "skewgeom/geometry.hpp"
#include "skewgeom/structure.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace skewgeom {

namespace {

Tensor3<Dual4> dual_gamma_g(const MetricJets& jets) {
  const MetricField<Dual4> f = second_order(jets.A, jets.B);
  return levi_civita(invert4(metric_matrix(f.A, f.B)), metric_partials(f));
}

Tensor3<Dual4> dual_gamma_gt(const MetricJets& jets) {
  const MetricField<Dual4> f = second_order(jets.A, jets.B);
  return levi_civita(invert4(associated_matrix(f.A, f.B)), associated_partials(f));
}

}  // namespace

Mat4d ricci(const Tensor4d& R, const Mat4d& inv) {
  Mat4d rho = Mat4d::Zero();
  for (int y = 0; y < 4; ++y)
    for (int z = 0; z < 4; ++z) {
      double s = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += inv(i, j) * R(i, y, z, j);
      rho(y, z) = s;
    }
  return rho;
}

CurvaturePack riemann(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  CurvaturePack c;
  c.R_endo = curvature_endomorphism(dual_gamma_g(jets));
  c.R = lower_curvature(c.R_endo, pack.g);
  c.rho = ricci(c.R, pack.g_inv);
  c.tau = contract(c.rho, pack.g_inv);
  c.tau_star = contract(c.rho, pack.gt_inv);
  return c;
}

CurvaturePack riemann(const MetricFunctions& funcs, const ChartPoint& p) {
  return riemann(evaluate(funcs, p));
}

CurvaturePack tilde_curvature(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const Tensor3<Dual4> gt_sym = dual_gamma_gt(jets);
  CurvaturePack c;
  c.gamma_tilde = values(gt_sym);
  c.T = c.gamma_tilde - values(dual_gamma_g(jets));
  c.R_tilde_endo = curvature_endomorphism(gt_sym);
  c.R_tilde = lower_curvature(c.R_tilde_endo, pack.gt);
  c.rho_tilde = ricci(c.R_tilde, pack.gt_inv);
  c.tau_tilde = contract(c.rho_tilde, pack.gt_inv);
  c.tau_tilde_star = contract(c.rho_tilde, pack.g_inv);
  return c;
}

CurvaturePack tilde_curvature(const MetricFunctions& funcs, const ChartPoint& p) {
  return tilde_curvature(evaluate(funcs, p));
}

CurvaturePack curvature(const MetricJets& jets) {
  CurvaturePack c = tilde_curvature(jets);
  const CurvaturePack g = riemann(jets);
  c.R_endo = g.R_endo;
  c.R = g.R;
  c.rho = g.rho;
  c.tau = g.tau;
  c.tau_star = g.tau_star;
  return c;
}

CurvaturePack curvature(const MetricFunctions& funcs, const ChartPoint& p) {
  return curvature(evaluate(funcs, p));
}

TildeConnection tilde_connection(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const MetricField<double> f = first_order(jets.A, jets.B);
  const Tensor3d gamma = levi_civita(pack.g_inv, metric_partials(f));
  const FundamentalData fd = fundamental(jets);

  TildeConnection tc;
  tc.christoffel = levi_civita(pack.gt_inv, associated_partials(f));
  tc.T = tc.christoffel - gamma;

  const Vec4d th_up = pack.g_inv * fd.theta;
  const Vec4d ths_up = pack.g_inv * fd.theta_star;
  tc.deformed = gamma;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
          s += pack.gt_inv(k, a) * (pack.g(i, j) * fd.theta[a] + pack.gt(i, j) * fd.theta_star[a]);
        tc.deformed(k, i, j) += 0.25 * s;
        tc.T_closed(k, i, j) = -0.25 * (pack.g(i, j) * ths_up[k] + 0.5 * pack.gt(i, j) * th_up[k]);
      }
  tc.route_residual = max_abs(tc.christoffel - tc.deformed);
  tc.torsion_residual = max_abs(tc.T - tc.T_closed);
  return tc;
}

TildeConnection tilde_connection(const MetricFunctions& funcs, const ChartPoint& p) {
  return tilde_connection(evaluate(funcs, p));
}

double tilde_raise_residual(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const FundamentalData fd = fundamental(jets);
  return max_abs(pack.gt_inv * fd.theta + pack.g_inv * fd.theta_star);
}

double CurvatureSymmetries::max() const {
  return std::max({first_pair, second_pair, exchange, bianchi, ricci});
}

CurvatureSymmetries symmetries(const Tensor4d& R, const Mat4d& rho) {
  CurvatureSymmetries s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double v = R(i, j, k, l);
          s.first_pair = std::max(s.first_pair, std::abs(v + R(j, i, k, l)));
          s.second_pair = std::max(s.second_pair, std::abs(v + R(i, j, l, k)));
          s.exchange = std::max(s.exchange, std::abs(v - R(k, l, i, j)));
          s.bianchi = std::max(s.bianchi, std::abs(v + R(j, k, i, l) + R(k, i, j, l)));
        }
  s.ricci = max_abs(rho - rho.transpose());
  return s;
}

CurvatureSymmetries symmetries(const CurvaturePack& c) { return symmetries(c.R, c.rho); }

CurvatureSymmetries tilde_symmetries(const CurvaturePack& c) {
  return symmetries(c.R_tilde, c.rho_tilde);
}

double ricci_relation_residual(const CurvaturePack& c, const MetricPack& pack) {
  const Mat4d rhs = c.rho + 0.25 * (c.tau_tilde_star - c.tau) * pack.g +
                    0.25 * (c.tau_tilde - c.tau_star) * pack.gt;
  return max_abs(c.rho_tilde - rhs);
}

double verify_ricci_relation(const MetricJets& jets) {
  return ricci_relation_residual(curvature(jets), build_pack(jets));
}

double verify_ricci_relation(const MetricFunctions& funcs, const ChartPoint& p) {
  return verify_ricci_relation(evaluate(funcs, p));
}

double ricci_curvature(const Mat4d& rho, const Mat4d& h, const Vec4d& x) {
  return x.dot(rho * x) / x.dot(h * x);
}

DirectionReport direction_report(const MetricPack& pack, const CurvaturePack& c, const Vec4d& x,
                                 double cos_cutoff) {
  const double gxx = x.dot(pack.g * x);
  if (!(gxx > 0.0)) throw PreconditionError("direction has zero length");

  DirectionReport d;
  d.x = x;
  const Vec4d sx = pack.S * x;
  const double gxsx = x.dot(pack.g * sx);
  const double gtxx = x.dot(pack.gt * x);
  d.cos_phi = gxsx / gxx;
  d.phi = std::acos(std::clamp(d.cos_phi, -1.0, 1.0));
  d.gcos_residual = std::max(std::abs(gxsx - gxx * d.cos_phi), std::abs(gtxx - 2.0 * gxx * d.cos_phi));

  Mat4d basis;
  basis.col(0) = pack.S * pack.S * sx;
  basis.col(1) = pack.S * sx;
  basis.col(2) = sx;
  basis.col(3) = x;
  d.s_basis_det = determinant4(basis);
  d.induces_s_basis = std::abs(d.s_basis_det) > 1e-10;

  d.r = x.dot(c.rho * x) / gxx;
  if (std::abs(d.cos_phi) <= cos_cutoff || gtxx == 0.0) {
    d.notice = "phi too close to pi/2; r~ relation skipped";
    return d;
  }
  const double rt = x.dot(c.rho_tilde * x) / gtxx;
  d.r_tilde = rt;
  const double cs = d.cos_phi;
  d.relation_residual = std::abs(rt - d.r / (2.0 * cs) - (c.tau_tilde_star - c.tau) / (8.0 * cs) -
                                  0.25 * (c.tau_tilde - c.tau_star));
  return d;
}

const char* to_string(EinsteinClass c) {
  switch (c) {
    case EinsteinClass::einstein: return "einstein";
    case EinsteinClass::almost_einstein: return "almost_einstein";
    case EinsteinClass::neither: return "neither";
  }
  return "neither";
}

EinsteinDiagnosis einstein_diagnose(const Mat4d& g, const Mat4d& gt, const Mat4d& rho,
                                    double tol) {
  Eigen::Matrix<double, 10, 2> M;
  Eigen::Matrix<double, 10, 1> y;
  int row = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j, ++row) {
      M(row, 0) = g(i, j);
      M(row, 1) = gt(i, j);
      y[row] = 0.5 * (rho(i, j) + rho(j, i));
    }
  const Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 10, 2>> qr(M);
  if (qr.rank() < 2) throw PreconditionError("g and g~ are linearly dependent; fit is degenerate");
  const Eigen::Vector2d coef = qr.solve(y);

  EinsteinDiagnosis e;
  e.beta = coef[0];
  e.gamma_coef = coef[1];
  e.fit_residual = max_abs(M * coef - y);
  if (e.fit_residual >= tol)
    e.cls = EinsteinClass::neither;
  else
    e.cls = std::abs(e.gamma_coef) < tol ? EinsteinClass::einstein : EinsteinClass::almost_einstein;
  return e;
}

EinsteinDiagnosis einstein_diagnose(const MetricPack& pack, const CurvaturePack& c, double tol) {
  return einstein_diagnose(pack.g, pack.gt, c.rho, tol);
}

namespace {

double spread(const Mat4d& rho, const Mat4d& h, const Mat4d& S, Vec4d x) {
  double lo = 0.0, hi = 0.0;
  for (int n = 0; n < 4; ++n, x = S * x) {
    const double hx = x.dot(h * x);
    if (std::abs(hx) < 1e-12) return 0.0;
    const double r = x.dot(rho * x) / hx;
    lo = n == 0 ? r : std::min(lo, r);
    hi = n == 0 ? r : std::max(hi, r);
  }
  return hi - lo;
}

}  // namespace

FlatnessCheck flat_tilde_check(const MetricPack& pack, const CurvaturePack& c, const Vec4d& x,
                               double flat_tol) {
  FlatnessCheck f;
  f.applies = max_abs(c.R_tilde) < flat_tol;
  if (!f.applies) return f;
  const EinsteinDiagnosis e = einstein_diagnose(pack.g, pack.gt, c.rho, flat_tol);
  f.fit_residual = e.fit_residual;
  f.coefficient_residual = std::abs(e.beta - c.tau / 4) + std::abs(e.gamma_coef - c.tau_star / 4);
  f.direction_spread = spread(c.rho, pack.g, pack.S, x);
  return f;
}

FlatnessCheck flat_metric_check(const MetricPack& pack, const CurvaturePack& c, const Vec4d& x,
                                double flat_tol) {
  FlatnessCheck f;
  f.applies = max_abs(c.R) < flat_tol;
  if (!f.applies) return f;
  const EinsteinDiagnosis e = einstein_diagnose(pack.gt, pack.g, c.rho_tilde, flat_tol);
  f.fit_residual = e.fit_residual;
  f.coefficient_residual =
      std::abs(e.beta - c.tau_tilde / 4) + std::abs(e.gamma_coef - c.tau_tilde_star / 4);
  f.direction_spread = spread(c.rho_tilde, pack.gt, pack.S, x);
  return f;
}

}  // namespace skewgeom
