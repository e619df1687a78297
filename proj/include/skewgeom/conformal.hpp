#ifndef SKEWGEOM_CONFORMAL_HPP
#define SKEWGEOM_CONFORMAL_HPP

#include "skewgeom/chart.hpp"
#include "skewgeom/expr.hpp"
#include "skewgeom/tensor4.hpp"

namespace skewgeom {

// The conformal change g -> alpha g, alpha > 0. Since alpha g has the same
// matrix pattern with (A, B) -> (alpha A, alpha B), every barred quantity
// can be recomputed from scratch by the chart pipeline.

struct ConformalFactor {
  Expr alpha;
};

struct BarredPack {
  Jet2 alpha;
  Mat4d gbar, gtbar;
  Tensor3d gammabar;             // Gamma + (1/2a)(d^k_j a_i + d^k_i a_j - g_ij g^ks a_s)
  Tensor3d gammabar_direct;      // Levi-Civita symbols of alpha g from scratch
  Tensor3d Fbar;                 // chart pipeline on (alpha A, alpha B)
  Tensor3d Fbar_barred_nabla;    // alpha (nabla-bar g~) + g~ (x) d alpha, with gammabar
  Vec4d thetabar, thetastarbar;  // theta + (2/a) Phi d alpha, theta* - (2/a) d alpha
  Vec4d thetabar_direct, thetastarbar_direct;
};

/// (alpha A, alpha B) as jets.
MetricJets conformal_jets(const MetricJets& jets, const Jet2& alpha);

/// Throws PreconditionError when alpha <= 0.
BarredPack transform(const MetricJets& jets, const Jet2& alpha);
BarredPack transform(const MetricFunctions& funcs, const ConformalFactor& alpha,
                     const ChartPoint& p);

/// max |Fbar - 1/4(gbar th + gbar th + gtbar th* + gtbar th*)| with the
/// barred 1-forms from the transformation laws.
double verify_barred_identity(const BarredPack& bp);
double verify_barred_identity(const MetricFunctions& funcs, const ConformalFactor& alpha,
                        const ChartPoint& p);

/// max |thetastarbar + 1/2 Phi thetabar|.
double barred_theta_star_residual(const BarredPack& bp);

struct FZeroImage {
  Tensor3d Fbar;         // from transform
  Tensor3d Fbar_closed;  // 1/2(g_kj Phi_i^s a_s + g_ki Phi_j^s a_s - g~_kj a_i - g~_ki a_j)
  double residual = 0.0;
  double max_Fbar = 0.0;
  double max_dalpha = 0.0;
};

/// Image of an F = 0 structure. Throws PreconditionError when
/// max |F| >= f_tol at the point.
FZeroImage f_zero_image(const MetricJets& jets, const Jet2& alpha, double f_tol = 1e-10);
FZeroImage f_zero_image(const MetricFunctions& funcs, const ConformalFactor& alpha,
                        const ChartPoint& p, double f_tol = 1e-10);

}  // namespace skewgeom

#endif  // SKEWGEOM_CONFORMAL_HPP
