#include "skewgeom/hermitian.hpp"

#include "skewgeom/geometry.hpp"
#include "skewgeom/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <utility>

namespace skewgeom {

Mat4d kahler_form(const MetricPack& pack) { return pack.g * pack.J; }

Tensor3d nabla_J(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const MetricField<double> f = first_order(jets.A, jets.B);
  const Tensor3d gamma = levi_civita(pack.g_inv, metric_partials(f));
  Partials<double> dj = metric_partials(f);
  for (auto& m : dj) m = m * pack.J;
  return covariant_derivative(gamma, kahler_form(pack), dj);
}

Tensor3d nabla_J(const MetricFunctions& funcs, const ChartPoint& p) {
  return nabla_J(evaluate(funcs, p));
}

Tensor3d nabla_J_closed_form(const MetricJets& jets) {
  const Vec4d a = jets.A.grad, b = jets.B.grad;
  const double A1 = a[0], A2 = a[1], A3 = a[2], A4 = a[3];
  const double B1 = b[0], B2 = b[1], B3 = b[2], B4 = b[3];
  Tensor3d t;
  // sign * v at (i, j, k), -sign * v at (i, k, j); indices 1-based.
  auto put = [&t](double v, std::initializer_list<std::pair<int, std::array<int, 3>>> at) {
    for (const auto& [sign, idx] : at) {
      t(idx[0] - 1, idx[1] - 1, idx[2] - 1) = sign * v;
      t(idx[0] - 1, idx[2] - 1, idx[1] - 1) = -sign * v;
    }
  };
  put(0.5 * (B1 + B3 - A2), {{1, {3, 1, 2}}, {-1, {3, 3, 4}}, {1, {1, 2, 3}}, {-1, {1, 1, 4}}});
  put(0.5 * (A4 + B1 - B3), {{1, {1, 3, 4}}, {-1, {1, 1, 2}}, {1, {3, 2, 3}}, {-1, {3, 1, 4}}});
  put(0.5 * (B2 + B4 - A3), {{1, {2, 3, 4}}, {-1, {2, 1, 2}}, {1, {4, 2, 3}}, {-1, {4, 1, 4}}});
  put(0.5 * (A1 + B4 - B2), {{1, {4, 1, 2}}, {-1, {4, 3, 4}}, {1, {2, 2, 3}}, {-1, {2, 1, 4}}});
  return t;
}

Tensor3d nabla_J_operator(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const Tensor3d gamma = levi_civita(pack.g_inv, metric_partials(first_order(jets.A, jets.B)));
  const Tensor3d endo = covariant_derivative_endomorphism(gamma, pack.J);  // (i, p, j)
  Tensor3d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double s = 0.0;
        for (int p = 0; p < 4; ++p) s += pack.g(k, p) * endo(i, p, j);
        r(i, j, k) = s;
      }
  return r;
}

Vec4d omega(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  return contract(nabla_J(jets), 0, 1, pack.g_inv);
}

Vec4d omega(const MetricFunctions& funcs, const ChartPoint& p) {
  return omega(evaluate(funcs, p));
}

Vec4d omega_closed_form(const MetricJets& jets) {
  const double A = jets.A.value, B = jets.B.value, D = A * A - 2 * B * B;
  const Vec4d a = jets.A.grad, b = jets.B.grad;
  const double A1 = a[0], A2 = a[1], A3 = a[2], A4 = a[3];
  const double B1 = b[0], B2 = b[1], B3 = b[2], B4 = b[3];
  Vec4d w;
  w << A * (B4 + B2 - A3) + B * (2 * B3 - A2 - A4),
      A * (B3 - B1 - A4) + B * (2 * B4 + A1 - A3),
      A * (A1 + B4 - B2) + B * (-2 * B1 + A2 - A4),
      A * (A2 - B1 - B3) + B * (-2 * B2 + A1 + A3);
  return w / D;
}

KahlerData kahler_data(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  KahlerData k;
  k.Jform = kahler_form(pack);
  k.nablaJ = nabla_J(jets);
  k.omega = contract(k.nablaJ, 0, 1, pack.g_inv);
  k.omega_tilde = pack.J * k.omega;
  return k;
}

double lck_residual(const Tensor3d& nablaJ, const Vec4d& w, const Mat4d& g, const Mat4d& Jform,
                    const Mat4d& J) {
  const Vec4d wt = J * w;
  double worst = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double rhs =
            0.5 * (g(k, i) * w[j] - g(k, j) * w[i] + Jform(k, i) * wt[j] - Jform(k, j) * wt[i]);
        worst = std::max(worst, std::abs(nablaJ(k, i, j) - rhs));
      }
  return worst;
}

double verify_lck(const MetricJets& jets) {
  const MetricPack pack = build_pack(jets);
  const KahlerData k = kahler_data(jets);
  return lck_residual(k.nablaJ, k.omega, pack.g, k.Jform, pack.J);
}

double verify_lck(const MetricFunctions& funcs, const ChartPoint& p) {
  return verify_lck(evaluate(funcs, p));
}

double skew_residual(const Tensor3d& t) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(t(i, j, k) + t(i, k, j)));
  return m;
}

}  // namespace skewgeom
