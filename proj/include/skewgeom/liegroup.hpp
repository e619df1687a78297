#ifndef SKEWGEOM_LIEGROUP_HPP
#define SKEWGEOM_LIEGROUP_HPP

#include "skewgeom/tensor4.hpp"

#include <vector>

namespace skewgeom {

// Left-invariant structure on a Lie group, computed on an orthonormal
// left-invariant frame: g(e_i, e_j) = delta_ij, S acting by the standard
// skew-circulant matrix. Nothing is differentiated here.

struct LieAlgebraSpec {
  Tensor3d C;  // C(k, i, j): [e_i, e_j] = C^k_ij e_k
  double a = 0.0, b = 0.0;
};

/// Brackets [e1,e4] = e1, [e2,e4] = a e2, [e3,e4] = b e3. Throws
/// PreconditionError unless -1 <= b <= a <= 1 and ab != 0.
LieAlgebraSpec g45_spec(double a, double b);

/// Validates antisymmetry (exact) and the Jacobi identity (1e-12).
LieAlgebraSpec lie_spec(const Tensor3d& C);

LieAlgebraSpec abelian_spec();

double jacobi_residual(const Tensor3d& C);

/// gamma(k, i, j): nabla_{e_i} e_j = gamma(k, i, j) e_k.
Tensor3d koszul_connection(const LieAlgebraSpec& spec);

/// max |nabla_i e_j - nabla_j e_i - [e_i, e_j]|.
double torsion_residual(const LieAlgebraSpec& spec, const Tensor3d& nabla);
/// max |g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k)|.
double compatibility_residual(const Tensor3d& nabla);

struct FrameF {
  Tensor3d F;              // F(i, j, k) = (nabla_{e_i} g~)(e_j, e_k)
  Vec4d theta;             // sum_i F(i, i, k)
  Vec4d theta_star;        // sum_i F(i, S e_i, k)
  Vec4d theta_star_phi;    // -1/2 Phi theta
  Mat4d gt_frame;          // g~(e_i, e_j)
  double c1_residual = 0.0;
  bool c1_holds = false;
};

FrameF frame_F(const LieAlgebraSpec& spec, double tol = 1e-12);

struct FrameNablaJ {
  Tensor3d nablaJ;  // g((nabla_{e_i} J) e_j, e_k)
  Vec4d omega;      // sum_i nablaJ(i, i, k)
  double lck_residual = 0.0;
  bool lck_holds = false;
};

FrameNablaJ frame_nablaJ(const LieAlgebraSpec& spec, double tol = 1e-12);

struct FrameCurvature {
  Tensor4d R;  // g(R(e_i, e_j) e_k, e_s)
  Mat4d rho = Mat4d::Zero();
  double tau = 0.0;
  double einstein_residual = 0.0;  // max |rho - tau/4 delta|
  bool einstein = false;
  double symmetry_residual = 0.0;  // pair symmetries and first Bianchi
};

FrameCurvature frame_curvature(const LieAlgebraSpec& spec, double tol = 1e-12);

struct LieFrameReport {
  LieAlgebraSpec spec;
  Tensor3d nabla;
  FrameF f;
  FrameNablaJ j;
  FrameCurvature curv;
  double torsion = 0.0;
  double compatibility = 0.0;
};

LieFrameReport lie_report(const LieAlgebraSpec& spec);

struct GridCell {
  double a = 0.0, b = 0.0;
  bool admissible = false;  // passes the g45 parameter range
  double c1_residual = 0.0, lck_residual = 0.0;
  bool c1_holds = false, lck_holds = false;
};

/// a, b over {-1, -0.75, ..., 1} with ab != 0: 64 cells. Out-of-range cells
/// (b > a) are computed on the same brackets and flagged not admissible.
std::vector<GridCell> grid_sweep();

}  // namespace skewgeom

#endif  // SKEWGEOM_LIEGROUP_HPP
