#include "skewgeom/chart.hpp"

#include "skewgeom/errors.hpp"
#include "skewgeom/geometry.hpp"
#include "skewgeom/structure.hpp"

#include <algorithm>
#include <cmath>

namespace skewgeom {

MetricJets evaluate(const MetricFunctions& funcs, const ChartPoint& p) {
  return {eval_jet2(funcs.A, p), eval_jet2(funcs.B, p)};
}

bool positivity_holds(double a, double b) { return a > std::sqrt(2.0) * std::abs(b); }

double input_scale(const MetricJets& jets) {
  double m = 0.0;
  for (const Jet2* j : {&jets.A, &jets.B}) {
    m = std::max(m, std::abs(j->value));
    m = std::max(m, j->grad.cwiseAbs().maxCoeff());
    m = std::max(m, j->hess.cwiseAbs().maxCoeff());
  }
  return 1.0 + m;
}

MetricPack build_pack(const MetricJets& jets) {
  const double a = jets.A.value, b = jets.B.value;
  if (!positivity_holds(a, b)) throw PositivityError(a, std::sqrt(2.0) * std::abs(b));
  MetricPack p;
  p.A_jet = jets.A;
  p.B_jet = jets.B;
  p.g = metric_matrix(a, b);
  p.gt = associated_matrix(a, b);
  p.g_inv = invert4(p.g);
  p.gt_inv = invert4(p.gt);
  p.S = as<double>(structure_S());
  p.Phi = as<double>(structure_Phi());
  p.J = as<double>(structure_J());
  p.D = a * a - 2.0 * b * b;
  return p;
}

MetricPack build_pack(const MetricFunctions& funcs, const ChartPoint& p) {
  return build_pack(evaluate(funcs, p));
}

double PackInvariants::max() const {
  return std::max({s_fourth, isometry, phi, g_inverse, gt_inverse, g_inverse_closed,
                   gt_inverse_closed, phi_from_g, phi_from_gt});
}

PackInvariants check_invariants(const MetricPack& p) {
  PackInvariants r;
  const Mat4i s = structure_S();
  r.s_fourth = double((s * s * s * s + Mat4i::Identity()).cwiseAbs().maxCoeff());
  r.isometry = max_abs(p.S.transpose() * p.g * p.S - p.g);
  r.phi = max_abs(p.Phi - (p.S - p.S * p.S * p.S));
  const Mat4d id = Mat4d::Identity();
  r.g_inverse = max_abs(p.g * p.g_inv - id);
  r.gt_inverse = max_abs(p.gt * p.gt_inv - id);
  const double a = p.A_jet.value, b = p.B_jet.value;
  r.g_inverse_closed = max_abs(p.g_inv - metric_inverse_closed_form(a, b));
  r.gt_inverse_closed = max_abs(p.gt_inv - associated_inverse_closed_form(a, b));
  // g~_ij g^is = Phi_j^s reads (g~^T g^-1)(j, s); Phi is symmetric.
  r.phi_from_g = max_abs(p.gt.transpose() * p.g_inv - p.Phi);
  r.phi_from_gt = max_abs(p.g.transpose() * p.gt_inv - 0.5 * p.Phi);
  return r;
}

namespace {

Tensor3d connection_of(const MetricField<double>& f, const Mat4d& g_inv) {
  return levi_civita(g_inv, metric_partials(f));
}

}  // namespace

Connection christoffel(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  return {connection_of(first_order(jets.A, jets.B), pack.g_inv)};
}

Connection christoffel(const MetricFunctions& funcs, const ChartPoint& p) {
  return christoffel(evaluate(funcs, p));
}

double metric_compatibility_residual(const MetricJets& jets, const Connection& c) {
  const MetricField<double> f = first_order(jets.A, jets.B);
  const Tensor3d ng =
      covariant_derivative(c.gamma, metric_matrix(f.A, f.B), metric_partials(f));
  return max_abs(ng);
}

namespace {

FundamentalData contract_fundamental(const Tensor3d& F, const MetricPack& pack) {
  FundamentalData fd;
  fd.F = F;
  fd.theta = contract(F, 0, 1, pack.g_inv);
  // theta*_k = g^ij F(e_i, S e_j, e_k) = sum g^ij S(m, j) F(i, m, k)
  const Mat4d pair = pack.g_inv * pack.S.transpose();
  fd.theta_star = contract(F, 0, 1, pair);
  return fd;
}

}  // namespace

FundamentalData fundamental(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const MetricField<double> f = first_order(jets.A, jets.B);
  const Tensor3d gamma = connection_of(f, pack.g_inv);
  const Tensor3d F = covariant_derivative(gamma, pack.gt, associated_partials(f));
  return contract_fundamental(F, pack);
}

FundamentalData fundamental(const MetricFunctions& funcs, const ChartPoint& p) {
  return fundamental(evaluate(funcs, p));
}

FundamentalData fundamental_closed_form(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const double A = jets.A.value, B = jets.B.value, D = pack.D;
  const double A1 = jets.A.grad[0], A2 = jets.A.grad[1], A3 = jets.A.grad[2],
               A4 = jets.A.grad[3];
  const double B1 = jets.B.grad[0], B2 = jets.B.grad[1], B3 = jets.B.grad[2],
               B4 = jets.B.grad[3];

  Tensor3d F;
  // Entries are set at (i, j, k) and mirrored to (i, k, j); indices 1-based.
  auto set = [&F](int i, int j, int k, double v) {
    F(i - 1, j - 1, k - 1) = v;
    F(i - 1, k - 1, j - 1) = v;
  };
  const double h = 0.5;
  set(1, 1, 1, A2 - A4 - 2 * B1);
  set(1, 1, 2, h * (A3 - B2 - B4));
  set(1, 1, 4, h * (A3 - B2 - B4));
  set(1, 2, 2, B1 + B3 - A2);
  set(3, 2, 2, B1 + B3 - A2);
  set(1, 1, 3, h * (A2 + A4 - 2 * B3));
  set(3, 2, 4, -h * (A2 + A4 - 2 * B3));
  set(1, 3, 3, 0.0);
  set(3, 1, 1, 0.0);
  set(1, 3, 4, h * (A3 - B2 - B4));
  set(1, 2, 3, -h * (A3 - B2 - B4));
  set(2, 1, 1, B2 - B4 - A1);
  set(4, 1, 1, -(B2 - B4 - A1));
  set(1, 2, 4, h * (A2 - 2 * B1 - A4));
  set(3, 1, 3, h * (A2 - 2 * B1 - A4));
  set(2, 2, 2, A1 - 2 * B2 + A3);
  set(2, 1, 3, h * (2 * B2 - A1 - A3));
  set(4, 2, 4, -h * (2 * B2 - A1 - A3));
  set(2, 4, 4, 0.0);
  set(4, 2, 2, 0.0);
  set(2, 1, 2, h * (B3 - B1 - A4));
  set(2, 1, 4, h * (B3 - B1 - A4));
  set(2, 3, 3, B2 + B4 - A3);
  set(4, 3, 3, B2 + B4 - A3);
  set(2, 3, 4, h * (B3 - B1 - A4));
  set(2, 2, 3, -h * (B3 - B1 - A4));
  set(3, 3, 3, -2 * B3 + A2 + A4);
  set(2, 2, 4, h * (A3 - 2 * B4 - A1));
  set(4, 1, 3, h * (A3 - 2 * B4 - A1));
  set(3, 1, 2, h * (B2 - B4 - A1));
  set(3, 1, 4, h * (B2 - B4 - A1));
  set(3, 3, 4, h * (B2 - B4 - A1));
  set(3, 2, 3, -h * (B2 - B4 - A1));
  set(3, 4, 4, B3 - B1 - A4);
  set(1, 4, 4, -(B3 - B1 - A4));
  set(4, 1, 2, h * (A2 - B1 - B3));
  set(4, 1, 4, h * (A2 - B1 - B3));
  set(4, 4, 4, -2 * B4 - A1 + A3);
  set(4, 3, 4, h * (A2 - B1 - B3));
  set(4, 2, 3, -h * (A2 - B1 - B3));

  FundamentalData fd;
  fd.F = F;
  const double c = 2.0 / D;
  fd.theta << c * (A * (A2 - A4 - 2 * B1) - 2 * B * (B2 - B4 - A1)),
      c * (A * (A1 + A3 - 2 * B2) - 2 * B * (B1 + B3 - A2)),
      c * (A * (A2 + A4 - 2 * B3) - 2 * B * (B2 + B4 - A3)),
      c * (A * (A3 - A1 - 2 * B4) - 2 * B * (B3 - B1 - A4));
  fd.theta_star << c * (A * (B2 - B4 - A1) - B * (A2 - A4 - 2 * B1)),
      c * (A * (B1 + B3 - A2) - B * (A1 + A3 - 2 * B2)),
      c * (A * (B2 + B4 - A3) - B * (A2 + A4 - 2 * B3)),
      c * (A * (B3 - B1 - A4) - B * (A3 - A1 - 2 * B4));
  return fd;
}

FundamentalData fundamental_closed_form(const MetricFunctions& funcs, const ChartPoint& p) {
  return fundamental_closed_form(evaluate(funcs, p));
}

Vec4d theta_as_printed(const MetricJets& jets) {
  const double A = jets.A.value, B = jets.B.value, D = A * A - 2 * B * B;
  const Vec4d a = jets.A.grad, b = jets.B.grad;
  const double c = 2.0 / D;
  Vec4d t;
  t << c * (A * (a[1] - a[3] - 2 * b[0]) - 2 * B * (b[1] - b[3] - a[0])),
      c * (A * (a[0] + a[2] - 2 * b[1]) - 2 * B * (b[0] + b[2] - a[1])),
      c * (A * (a[1] + a[3] - 2 * b[2]) + 2 * B * (b[1] + b[3] - a[2])),
      c * (A * (a[2] - a[0] - 2 * b[3]) + 2 * B * (b[2] - b[0] - a[3]));
  return t;
}

double symmetry_residual(const FundamentalData& fd) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(fd.F(i, j, k) - fd.F(i, k, j)));
  return m;
}

double theta_star_residual(const FundamentalData& fd, const MetricPack& pack) {
  return max_abs(fd.theta_star + 0.5 * pack.Phi * fd.theta);
}

NablaS nabla_S(const MetricJets& jets, double tol) {
  const MetricPack pack = build_pack(jets);
  const Tensor3d gamma = connection_of(first_order(jets.A, jets.B), pack.g_inv);
  NablaS r;
  r.components = covariant_derivative_endomorphism(gamma, pack.S);
  r.max_abs = max_abs(r.components);
  r.is_parallel = r.max_abs < tol;
  return r;
}

NablaS nabla_S(const MetricFunctions& funcs, const ChartPoint& p, double tol) {
  return nabla_S(evaluate(funcs, p), tol);
}

Vec4d parallel_conditions(const MetricJets& jets) {
  const Vec4d a = jets.A.grad, b = jets.B.grad;
  Vec4d r;
  r << std::abs(a[0] - b[1] + b[3]), std::abs(a[1] - b[0] - b[2]),
      std::abs(a[2] - b[1] - b[3]), std::abs(a[3] - b[2] + b[0]);
  return r;
}

Tensor3d c1_right_side(const Mat4d& g, const Mat4d& gt, const Vec4d& th, const Vec4d& ths) {
  Tensor3d r;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        r(k, i, j) = 0.25 * (g(k, j) * th[i] + g(k, i) * th[j] + gt(k, j) * ths[i] +
                             gt(k, i) * ths[j]);
  return r;
}

double verify_c1(const FundamentalData& fd, const MetricPack& pack) {
  return max_abs(fd.F - c1_right_side(pack.g, pack.gt, fd.theta, fd.theta_star));
}

double verify_c3(const FundamentalData& fd, const MetricPack& pack) {
  // FJJ(a, b, c) = F(e_a, J e_b, J e_c)
  const Mat4d& J = pack.J;
  Tensor3d fjj;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) s += fd.F(a, m, n) * J(m, b) * J(n, c);
        fjj(a, b, c) = s;
      }
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        worst = std::max(worst, std::abs(fjj(a, b, c) + fjj(b, c, a) + fjj(c, a, b)));
  return worst;
}

}  // namespace skewgeom
