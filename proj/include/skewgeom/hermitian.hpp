#ifndef SKEWGEOM_HERMITIAN_HPP
#define SKEWGEOM_HERMITIAN_HPP

#include "skewgeom/chart.hpp"
#include "skewgeom/tensor4.hpp"

namespace skewgeom {

// The Hermitian structure (g, J) with J = S^2.

struct KahlerData {
  Mat4d Jform;          // J(i, k) = g(e_i, J e_k)
  Tensor3d nablaJ;      // nablaJ(i, j, k) = (nabla_i J)(e_j, e_k) of the 2-form
  Vec4d omega;          // omega_k = g^ij nablaJ(i, j, k)
  Vec4d omega_tilde;    // omega~_i = J_i^a omega_a
};

/// Matrix of the Kaehler 2-form, g * J.
Mat4d kahler_form(const MetricPack& pack);

/// Covariant derivative of the Kaehler 2-form.
Tensor3d nabla_J(const MetricJets& jets);
Tensor3d nabla_J(const MetricFunctions& funcs, const ChartPoint& p);

/// The same tensor from its closed form in first partials of A, B.
Tensor3d nabla_J_closed_form(const MetricJets& jets);

/// g((nabla_i J) e_j, e_k) with J as an endomorphism; equals -nabla_J.
Tensor3d nabla_J_operator(const MetricJets& jets);

Vec4d omega(const MetricJets& jets);
Vec4d omega(const MetricFunctions& funcs, const ChartPoint& p);
Vec4d omega_closed_form(const MetricJets& jets);

KahlerData kahler_data(const MetricJets& jets);

/// max_kij |nablaJ(k,i,j) - 1/2(g_ki w_j - g_kj w_i + J_ki w~_j - J_kj w~_i)|
/// with w~ = J w. `g` and `Jform` are the metric and Kaehler form matrices.
double lck_residual(const Tensor3d& nablaJ, const Vec4d& omega, const Mat4d& g,
                    const Mat4d& Jform, const Mat4d& J);

double verify_lck(const MetricJets& jets);
double verify_lck(const MetricFunctions& funcs, const ChartPoint& p);

/// max |nablaJ(i,j,k) + nablaJ(i,k,j)|.
double skew_residual(const Tensor3d& nablaJ);

}  // namespace skewgeom

#endif  // SKEWGEOM_HERMITIAN_HPP
