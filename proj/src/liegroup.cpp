#include "skewgeom/liegroup.hpp"

#include "skewgeom/chart.hpp"
#include "skewgeom/errors.hpp"
#include "skewgeom/geometry.hpp"
#include "skewgeom/hermitian.hpp"
#include "skewgeom/structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace skewgeom {

namespace {

LieAlgebraSpec g45_brackets(double a, double b) {
  LieAlgebraSpec s;
  s.a = a;
  s.b = b;
  const double c[3] = {1.0, a, b};
  for (int k = 0; k < 3; ++k) {
    s.C(k, k, 3) = c[k];
    s.C(k, 3, k) = -c[k];
  }
  return s;
}

}  // namespace

double jacobi_residual(const Tensor3d& C) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l)
        for (int k = 0; k < 4; ++k) {
          double s = 0.0;
          for (int m = 0; m < 4; ++m)
            s += C(m, i, j) * C(k, m, l) + C(m, j, l) * C(k, m, i) + C(m, l, i) * C(k, m, j);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

LieAlgebraSpec lie_spec(const Tensor3d& C) {
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (C(k, i, j) != -C(k, j, i))
          throw PreconditionError("structure constants are not antisymmetric");
  const double jr = jacobi_residual(C);
  if (!(jr < 1e-12))
    throw PreconditionError("Jacobi identity fails (residual " + std::to_string(jr) + ")");
  LieAlgebraSpec s;
  s.C = C;
  return s;
}

LieAlgebraSpec abelian_spec() { return LieAlgebraSpec{}; }

LieAlgebraSpec g45_spec(double a, double b) {
  if (!(-1.0 <= b && b <= a && a <= 1.0))
    throw PreconditionError("parameters must satisfy -1 <= b <= a <= 1");
  if (a * b == 0.0) throw PreconditionError("parameters must satisfy ab != 0");
  return g45_brackets(a, b);
}

Tensor3d koszul_connection(const LieAlgebraSpec& spec) {
  const Tensor3d& C = spec.C;
  Tensor3d n;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) n(k, i, j) = 0.5 * (C(k, i, j) + C(j, k, i) + C(i, k, j));
  return n;
}

double torsion_residual(const LieAlgebraSpec& spec, const Tensor3d& nabla) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, std::abs(nabla(k, i, j) - nabla(k, j, i) - spec.C(k, i, j)));
  return worst;
}

double compatibility_residual(const Tensor3d& nabla) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        worst = std::max(worst, std::abs(nabla(k, i, j) + nabla(j, i, k)));
  return worst;
}

FrameF frame_F(const LieAlgebraSpec& spec, double tol) {
  const Tensor3d n = koszul_connection(spec);
  const Mat4d S = as<double>(structure_S());
  const Mat4d Phi = as<double>(structure_Phi());
  const Mat4d id = Mat4d::Identity();

  FrameF r;
  r.gt_frame = S + S.transpose();
  // Frame components of g~ are constant, so only the connection terms remain.
  Partials<double> zero;
  zero.fill(Mat4d::Zero());
  r.F = covariant_derivative(n, r.gt_frame, zero);
  r.theta = contract(r.F, 0, 1, id);
  r.theta_star = contract(r.F, 0, 1, Mat4d(S.transpose()));
  r.theta_star_phi = -0.5 * Phi * r.theta;
  r.c1_residual = max_abs(r.F - c1_right_side(id, r.gt_frame, r.theta, r.theta_star));
  r.c1_holds = r.c1_residual < tol;
  return r;
}

FrameNablaJ frame_nablaJ(const LieAlgebraSpec& spec, double tol) {
  const Tensor3d n = koszul_connection(spec);
  const Mat4d J = as<double>(structure_J());
  const Tensor3d endo = covariant_derivative_endomorphism(n, J);  // (i, k, j)
  FrameNablaJ r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r.nablaJ(i, j, k) = endo(i, k, j);
  r.omega = contract(r.nablaJ, 0, 1, Mat4d(Mat4d::Identity()));
  r.lck_residual = lck_residual(r.nablaJ, r.omega, Mat4d::Identity(), J, J);
  r.lck_holds = r.lck_residual < tol;
  return r;
}

FrameCurvature frame_curvature(const LieAlgebraSpec& spec, double tol) {
  const Tensor3d n = koszul_connection(spec);
  const Tensor3d& C = spec.C;
  FrameCurvature r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int p = 0; p < 4; ++p) {
          double s = 0.0;
          for (int a = 0; a < 4; ++a)
            s += n(a, j, k) * n(p, i, a) - n(a, i, k) * n(p, j, a) - C(a, i, j) * n(p, a, k);
          r.R(i, j, k, p) = s;
        }
  const Mat4d id = Mat4d::Identity();
  for (int y = 0; y < 4; ++y)
    for (int z = 0; z < 4; ++z) {
      double s = 0.0;
      for (int i = 0; i < 4; ++i) s += r.R(i, y, z, i);
      r.rho(y, z) = s;
    }
  r.tau = r.rho.trace();
  r.einstein_residual = max_abs(r.rho - 0.25 * r.tau * id);
  r.einstein = r.einstein_residual < tol;

  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double v = r.R(i, j, k, l);
          worst = std::max({worst, std::abs(v + r.R(j, i, k, l)), std::abs(v + r.R(i, j, l, k)),
                            std::abs(v - r.R(k, l, i, j)),
                            std::abs(v + r.R(j, k, i, l) + r.R(k, i, j, l))});
        }
  r.symmetry_residual = worst;
  return r;
}

LieFrameReport lie_report(const LieAlgebraSpec& spec) {
  LieFrameReport r;
  r.spec = spec;
  r.nabla = koszul_connection(spec);
  r.f = frame_F(spec);
  r.j = frame_nablaJ(spec);
  r.curv = frame_curvature(spec);
  r.torsion = torsion_residual(spec, r.nabla);
  r.compatibility = compatibility_residual(r.nabla);
  return r;
}

std::vector<GridCell> grid_sweep() {
  std::vector<GridCell> cells;
  for (int ia = -4; ia <= 4; ++ia)
    for (int ib = -4; ib <= 4; ++ib) {
      if (ia == 0 || ib == 0) continue;
      GridCell c;
      c.a = 0.25 * ia;
      c.b = 0.25 * ib;
      c.admissible = ib <= ia;
      const LieAlgebraSpec s = g45_brackets(c.a, c.b);
      const FrameF f = frame_F(s);
      const FrameNablaJ j = frame_nablaJ(s);
      c.c1_residual = f.c1_residual;
      c.c1_holds = f.c1_holds;
      c.lck_residual = j.lck_residual;
      c.lck_holds = j.lck_holds;
      cells.push_back(c);
    }
  return cells;
}

}  // namespace skewgeom
