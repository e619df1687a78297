#ifndef SKEWGEOM_CURVATURE_HPP
#define SKEWGEOM_CURVATURE_HPP

#include "skewgeom/chart.hpp"
#include "skewgeom/tensor4.hpp"

#include <optional>
#include <string>

namespace skewgeom {

// Curvature of g and of the associated metric g~. R(i, j, k, s) is the
// covariant tensor g(R(e_i, e_j) e_k, e_s); R~ is lowered with g~.

struct CurvaturePack {
  Tensor4d R_endo;  // [R(e_i, e_j) e_k]^p
  Tensor4d R;
  Mat4d rho = Mat4d::Zero();  // rho(y, z) = g^ij R(e_i, y, z, e_j)
  double tau = 0.0;           // g^ij rho_ij
  double tau_star = 0.0;      // g~^ij rho_ij
  Tensor3d gamma_tilde;       // Levi-Civita symbols of g~
  Tensor3d T;                 // gamma_tilde - gamma
  Tensor4d R_tilde_endo;
  Tensor4d R_tilde;
  Mat4d rho_tilde = Mat4d::Zero();  // g~^ij R~(e_i, y, z, e_j)
  double tau_tilde = 0.0;           // g~^ij rho~_ij
  double tau_tilde_star = 0.0;      // g^ij rho~_ij
};

/// g-side fields only.
CurvaturePack riemann(const MetricJets& jets);
CurvaturePack riemann(const MetricFunctions& funcs, const ChartPoint& p);

/// g~-side fields only.
CurvaturePack tilde_curvature(const MetricJets& jets);
CurvaturePack tilde_curvature(const MetricFunctions& funcs, const ChartPoint& p);

/// Both sides.
CurvaturePack curvature(const MetricJets& jets);
CurvaturePack curvature(const MetricFunctions& funcs, const ChartPoint& p);

/// Gamma~ by two routes: the Christoffel formula applied to g~, and
/// Gamma + 1/4 g~^ks (g_ij theta_s + g~_ij theta*_s).
struct TildeConnection {
  Tensor3d christoffel;  // route 1
  Tensor3d deformed;     // route 2
  Tensor3d T;            // route 1 - Gamma
  Tensor3d T_closed;     // -1/4 (g_ij theta*^k + 1/2 g~_ij theta^k), raised with g
  double route_residual = 0.0;
  double torsion_residual = 0.0;
};

TildeConnection tilde_connection(const MetricJets& jets);
TildeConnection tilde_connection(const MetricFunctions& funcs, const ChartPoint& p);

/// max |g~^sk theta_s + theta*^k| with theta* raised by g.
double tilde_raise_residual(const MetricJets& jets);

struct CurvatureSymmetries {
  double first_pair = 0.0;   // R_ijks + R_jiks
  double second_pair = 0.0;  // R_ijks + R_ijsk
  double exchange = 0.0;     // R_ijks - R_ksij
  double bianchi = 0.0;      // R_ijks + R_jkis + R_kijs
  double ricci = 0.0;        // rho - rho^T
  double max() const;
};

CurvatureSymmetries symmetries(const Tensor4d& R, const Mat4d& rho);
CurvatureSymmetries symmetries(const CurvaturePack& c);        // g side
CurvatureSymmetries tilde_symmetries(const CurvaturePack& c);  // g~ side

/// max |rho~ - rho - 1/4(tau~* - tau) g - 1/4(tau~ - tau*) g~|.
double ricci_relation_residual(const CurvaturePack& c, const MetricPack& pack);
double verify_ricci_relation(const MetricJets& jets);
double verify_ricci_relation(const MetricFunctions& funcs, const ChartPoint& p);

/// Ricci contraction g^ij R(e_i, y, z, e_j) of a covariant tensor.
Mat4d ricci(const Tensor4d& R, const Mat4d& inv);

struct DirectionReport {
  Vec4d x = Vec4d::Zero();
  double cos_phi = 0.0;
  double phi = 0.0;
  double r = 0.0;
  std::optional<double> r_tilde;  // empty when |cos phi| <= cos_cutoff
  std::string notice;             // why r_tilde was omitted
  bool induces_s_basis = false;
  double s_basis_det = 0.0;
  double relation_residual = 0.0;  // |r~ - r/(2 cos) - (tau~* - tau)/(8 cos) - (tau~ - tau*)/4|
  double gcos_residual = 0.0;       // g(x,Sx) = g(x,x) cos, g~(x,x) = 2 g(x,x) cos
};

/// Throws PreconditionError when g(x, x) <= 0.
DirectionReport direction_report(const MetricPack& pack, const CurvaturePack& c,
                                 const Vec4d& x, double cos_cutoff = 1e-6);

/// r(x) = rho(x, x) / h(x, x) for a symmetric form pair.
double ricci_curvature(const Mat4d& rho, const Mat4d& h, const Vec4d& x);

enum class EinsteinClass { einstein, almost_einstein, neither };
const char* to_string(EinsteinClass c);

struct EinsteinDiagnosis {
  double beta = 0.0;
  double gamma_coef = 0.0;
  EinsteinClass cls = EinsteinClass::neither;
  double fit_residual = 0.0;
};

/// Least-squares fit rho ~ beta g + gamma g~ over the 10 upper-triangle
/// entries. Throws PreconditionError when g and g~ are linearly dependent.
EinsteinDiagnosis einstein_diagnose(const Mat4d& g, const Mat4d& gt, const Mat4d& rho,
                                    double tol = 1e-8);
EinsteinDiagnosis einstein_diagnose(const MetricPack& pack, const CurvaturePack& c,
                                    double tol = 1e-8);

/// Conditional checks for a flat g~ connection (and, mirrored, a flat g one).
struct FlatnessCheck {
  bool applies = false;           // max |R~| (resp. |R|) < flat_tol
  double coefficient_residual = 0.0;  // |beta - tau/4| + |gamma - tau*/4| (mirrored)
  double fit_residual = 0.0;
  double direction_spread = 0.0;  // max - min of r over x, Sx, S^2x, S^3x
};

FlatnessCheck flat_tilde_check(const MetricPack& pack, const CurvaturePack& c, const Vec4d& x,
                               double flat_tol = 1e-8);
FlatnessCheck flat_metric_check(const MetricPack& pack, const CurvaturePack& c, const Vec4d& x,
                                double flat_tol = 1e-8);

}  // namespace skewgeom

#endif  // SKEWGEOM_CURVATURE_HPP
