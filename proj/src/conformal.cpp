#include "skewgeom/conformal.hpp"

#include "skewgeom/errors.hpp"
#include "skewgeom/geometry.hpp"
#include "skewgeom/structure.hpp"

#include <string>

namespace skewgeom {

MetricJets conformal_jets(const MetricJets& jets, const Jet2& alpha) {
  return {alpha * jets.A, alpha * jets.B};
}

BarredPack transform(const MetricJets& jets, const Jet2& alpha) {
  if (!(alpha.value > 0.0))
    throw PreconditionError("conformal factor must be positive, got " +
                            std::to_string(alpha.value));
  const MetricPack pack = build_pack(jets);
  const MetricField<double> f = first_order(jets.A, jets.B);
  const Tensor3d gamma = levi_civita(pack.g_inv, metric_partials(f));
  const FundamentalData fd = fundamental(jets);

  const MetricJets scaled = conformal_jets(jets, alpha);
  const MetricPack bar = build_pack(scaled);
  const FundamentalData fdbar = fundamental(scaled);

  BarredPack bp;
  bp.alpha = alpha;
  bp.gbar = bar.g;
  bp.gtbar = bar.gt;
  bp.Fbar = fdbar.F;
  bp.thetabar_direct = fdbar.theta;
  bp.thetastarbar_direct = fdbar.theta_star;
  bp.gammabar_direct = levi_civita(bar.g_inv, metric_partials(first_order(scaled.A, scaled.B)));

  const double a = alpha.value;
  const Vec4d& da = alpha.grad;
  const Vec4d up = pack.g_inv * da;  // g^ks a_s
  bp.gammabar = gamma;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        bp.gammabar(k, i, j) += (0.5 / a) * ((k == j ? da[i] : 0.0) + (k == i ? da[j] : 0.0) -
                                            pack.g(i, j) * up[k]);

  const Tensor3d nbar_gt = covariant_derivative(bp.gammabar, pack.gt, associated_partials(f));
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i)
        bp.Fbar_barred_nabla(k, j, i) = a * nbar_gt(k, j, i) + pack.gt(j, i) * da[k];

  bp.thetabar = fd.theta + (2.0 / a) * (pack.Phi * da);
  bp.thetastarbar = fd.theta_star - (2.0 / a) * da;
  return bp;
}

BarredPack transform(const MetricFunctions& funcs, const ConformalFactor& alpha,
                     const ChartPoint& p) {
  return transform(evaluate(funcs, p), eval_jet2(alpha.alpha, p));
}

double verify_barred_identity(const BarredPack& bp) {
  return max_abs(bp.Fbar - c1_right_side(bp.gbar, bp.gtbar, bp.thetabar, bp.thetastarbar));
}

double verify_barred_identity(const MetricFunctions& funcs, const ConformalFactor& alpha,
                        const ChartPoint& p) {
  return verify_barred_identity(transform(funcs, alpha, p));
}

double barred_theta_star_residual(const BarredPack& bp) {
  return max_abs(bp.thetastarbar + 0.5 * as<double>(structure_Phi()) * bp.thetabar);
}

FZeroImage f_zero_image(const MetricJets& jets, const Jet2& alpha, double f_tol) {
  const FundamentalData fd = fundamental(jets);
  const double fmax = max_abs(fd.F);
  if (!(fmax < f_tol))
    throw PreconditionError("F does not vanish at the point (max |F| = " +
                            std::to_string(fmax) + ")");
  const BarredPack bp = transform(jets, alpha);
  const MetricPack pack = build_pack(jets);
  const Vec4d& da = alpha.grad;
  const Vec4d pda = pack.Phi * da;

  FZeroImage img;
  img.Fbar = bp.Fbar;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        img.Fbar_closed(k, i, j) = 0.5 * (pack.g(k, j) * pda[i] + pack.g(k, i) * pda[j] -
                                          pack.gt(k, j) * da[i] - pack.gt(k, i) * da[j]);
  img.residual = max_abs(img.Fbar - img.Fbar_closed);
  img.max_Fbar = max_abs(img.Fbar);
  img.max_dalpha = max_abs(da);
  return img;
}

FZeroImage f_zero_image(const MetricFunctions& funcs, const ConformalFactor& alpha,
                        const ChartPoint& p, double f_tol) {
  return f_zero_image(evaluate(funcs, p), eval_jet2(alpha.alpha, p), f_tol);
}

}  // namespace skewgeom
