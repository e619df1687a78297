#ifndef SKEWGEOM_CHART_HPP
#define SKEWGEOM_CHART_HPP

#include "skewgeom/expr.hpp"
#include "skewgeom/jet.hpp"
#include "skewgeom/tensor4.hpp"

namespace skewgeom {

/// The two functions that determine g (and with it g~) in the chart.
struct MetricFunctions {
  Expr A;
  Expr B;
};

/// A and B evaluated as second-order jets at one point.
struct MetricJets {
  Jet2 A;
  Jet2 B;
};

MetricJets evaluate(const MetricFunctions& funcs, const ChartPoint& p);

/// g is positive definite iff A > sqrt(2) |B|.
bool positivity_holds(double a, double b);

/// 1 + the largest magnitude among the jet entries of A and B. Identity
/// residuals are compared against tol * input_scale in reports.
double input_scale(const MetricJets& jets);

/// Every pointwise matrix of the structure.
struct MetricPack {
  Jet2 A_jet, B_jet;
  Mat4d g, g_inv;    // metric and its inverse
  Mat4d gt, gt_inv;  // associated metric g~ and inverse
  Mat4d S, Phi, J;   // structure, S - S^3, S^2
  double D = 0.0;    // A^2 - 2B^2
};

/// Throws PositivityError when A <= sqrt(2)|B|.
MetricPack build_pack(const MetricJets& jets);
MetricPack build_pack(const MetricFunctions& funcs, const ChartPoint& p);

/// Residuals of the algebraic facts every pack must satisfy.
struct PackInvariants {
  double s_fourth = 0.0;           // |S^4 + id|
  double isometry = 0.0;           // |S^T g S - g|
  double phi = 0.0;                // |Phi - (S - S^3)|
  double g_inverse = 0.0;          // |g g^-1 - id|
  double gt_inverse = 0.0;         // |g~ g~^-1 - id|
  double g_inverse_closed = 0.0;   // g^-1 against the closed form
  double gt_inverse_closed = 0.0;  // g~^-1 against the closed form
  double phi_from_g = 0.0;         // |g~_ij g^is - Phi_j^s|
  double phi_from_gt = 0.0;        // |g_ij g~^is - Phi_j^s / 2|
  double max() const;
};

PackInvariants check_invariants(const MetricPack& pack);

struct Connection {
  Tensor3d gamma;  // gamma(k, i, j) = Gamma^k_ij
};

Connection christoffel(const MetricJets& jets);
Connection christoffel(const MetricFunctions& funcs, const ChartPoint& p);

/// max |d_k g_ij - Gamma^a_ki g_aj - Gamma^a_kj g_ai|.
double metric_compatibility_residual(const MetricJets& jets, const Connection& c);

struct FundamentalData {
  Tensor3d F;        // F(i, j, k) = (nabla_i g~)_jk
  Vec4d theta;       // theta_k = g^ij F_ijk
  Vec4d theta_star;  // theta*_k = g^ij F(e_i, S e_j, e_k)
};

/// F, theta, theta* through the Levi-Civita connection of g.
FundamentalData fundamental(const MetricJets& jets);
FundamentalData fundamental(const MetricFunctions& funcs, const ChartPoint& p);

/// F, theta, theta* from the component table in terms of first partials of
/// A and B only (no connection).
FundamentalData fundamental_closed_form(const MetricJets& jets);
FundamentalData fundamental_closed_form(const MetricFunctions& funcs, const ChartPoint& p);

/// theta_3, theta_4 with the sign of the 2B term exactly as first
/// published; differs from the computed theta by 8B(...)/D. Kept for tests.
Vec4d theta_as_printed(const MetricJets& jets);

/// max |F_ijk - F_ikj|.
double symmetry_residual(const FundamentalData& fd);
/// max |theta*_i + 1/2 Phi_i^s theta_s|.
double theta_star_residual(const FundamentalData& fd, const MetricPack& pack);

struct NablaS {
  Tensor3d components;  // components(i, k, j) = (nabla_i S)^k_j
  double max_abs = 0.0;
  bool is_parallel = false;
};

NablaS nabla_S(const MetricJets& jets, double tol = 1e-10);
NablaS nabla_S(const MetricFunctions& funcs, const ChartPoint& p, double tol = 1e-10);

/// |A1 - B2 + B4|, |A2 - B1 - B3|, |A3 - B2 - B4|, |A4 - B3 + B1|: all zero
/// iff S is parallel.
Vec4d parallel_conditions(const MetricJets& jets);

/// max_kij |F_kij - 1/4(g_kj th_i + g_ki th_j + g~_kj th*_i + g~_ki th*_j)|.
double verify_c1(const FundamentalData& fd, const MetricPack& pack);

/// max over basis triples of |F(x,Jy,Jz) + F(y,Jz,Jx) + F(z,Jx,Jy)|.
double verify_c3(const FundamentalData& fd, const MetricPack& pack);

/// 1/4(g_kj th_i + g_ki th_j + gt_kj ths_i + gt_ki ths_j), indexed (k, i, j).
Tensor3d c1_right_side(const Mat4d& g, const Mat4d& gt, const Vec4d& theta,
                       const Vec4d& theta_star);

}  // namespace skewgeom

#endif  // SKEWGEOM_CHART_HPP
