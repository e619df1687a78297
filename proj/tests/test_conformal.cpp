#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgeom/conformal.hpp"
#include "skewgeom/structure.hpp"
#include "support.hpp"

using namespace skewgeom;
using testing::at;
using testing::family;

namespace {

ConformalFactor factor(const std::string& a) { return {parse(a)}; }

}  // namespace

TEST_CASE("alpha = 1 is the identity transformation") {
  const MetricFunctions f = family("6 + sin(x1)", "1");
  const ChartPoint p = at(0.2, -0.1, 0.3, 0.05);
  const MetricJets j = evaluate(f, p);
  const FundamentalData fd = fundamental(j);
  const BarredPack bp = transform(f, factor("1"), p);
  CHECK(max_abs(bp.gammabar - christoffel(j).gamma) < 1e-15);
  CHECK(max_abs(bp.gammabar_direct - christoffel(j).gamma) < 1e-15);
  CHECK(max_abs(bp.Fbar - fd.F) < 1e-15);
  CHECK(max_abs(bp.thetabar - fd.theta) < 1e-15);
  CHECK(max_abs(bp.thetastarbar - fd.theta_star) < 1e-15);
  CHECK(verify_barred_identity(bp) < 1e-14);
}

TEST_CASE("constant alpha scales F") {
  const MetricFunctions f = family("exp(x4) + 4", "x3 * 0.1");
  for (const ChartPoint& p : testing::valid_points(f, 20)) {
    const BarredPack bp = transform(f, factor("2"), p);
    CHECK(max_abs(bp.Fbar - 2.0 * fundamental(f, p).F) < 1e-13);
    CHECK(verify_barred_identity(bp) < 1e-13);
  }
}

TEST_CASE("alpha = exp(x1) on A = 5, B = 1 at the origin") {
  const MetricFunctions f = family("5", "1");
  const BarredPack bp = transform(f, factor("exp(x1)"), at(0, 0, 0, 0));
  const Mat4d Phi = as<double>(structure_Phi());
  const Vec4d da(1, 0, 0, 0);
  // F = 0 for constant A, B, so both 1-forms come from d alpha alone.
  CHECK(max_abs(bp.thetabar - 2.0 * Phi * da) < 1e-14);
  CHECK(max_abs(bp.thetastarbar + 2.0 * da) < 1e-14);
  CHECK(max_abs(bp.thetabar - bp.thetabar_direct) < 1e-13);
  CHECK(max_abs(bp.thetastarbar - bp.thetastarbar_direct) < 1e-13);
  CHECK(verify_barred_identity(bp) < 1e-13);
}

TEST_CASE("barred quantities agree across routes on the corpus") {
  for (const MetricFunctions& f : testing::corpus())
    for (const std::string& a : corpus_alphas())
      for (const ChartPoint& p : testing::valid_points(f, 15)) {
        const BarredPack bp = transform(f, factor(a), p);
        const MetricJets j = conformal_jets(evaluate(f, p), bp.alpha);
        const double tol = 1e-12 * input_scale(j);
        CHECK(verify_barred_identity(bp) < tol);
        CHECK(max_abs(bp.gammabar - bp.gammabar_direct) < tol);
        CHECK(max_abs(bp.Fbar - bp.Fbar_barred_nabla) < tol);
        CHECK(max_abs(bp.thetabar - bp.thetabar_direct) < tol);
        CHECK(max_abs(bp.thetastarbar - bp.thetastarbar_direct) < tol);
        CHECK(barred_theta_star_residual(bp) < tol);
        for (int k = 0; k < 4; ++k)
          for (int i = 0; i < 4; ++i)
            for (int l = 0; l < 4; ++l) CHECK(bp.gammabar(k, i, l) == doctest::Approx(bp.gammabar(k, l, i)));
        CHECK(positivity_holds(j.A.value, j.B.value));
      }
}

TEST_CASE("non-positive alpha is rejected") {
  CHECK_THROWS_AS(transform(family("5", "1"), factor("-1"), at(0, 0, 0, 0)), PreconditionError);
  CHECK_THROWS_AS(transform(family("5", "1"), factor("x1"), at(0, 0, 0, 0)), PreconditionError);
}

TEST_CASE("image of an F = 0 structure") {
  const MetricFunctions f = family("x1 + x3 + 5", "x2");
  const ChartPoint p = at(0.1, 0.2, -0.3, 0.4);

  const FZeroImage c = f_zero_image(f, factor("2"), p);
  CHECK(c.max_Fbar < 1e-13);

  const FZeroImage e = f_zero_image(f, factor("exp(x1)"), p);
  CHECK(e.max_Fbar > 0.1);
  CHECK(e.residual < 1e-13);

  const FZeroImage d = f_zero_image(f, factor("1 + x4^2 * 0"), p);
  CHECK(d.max_dalpha == 0.0);
  CHECK(d.max_Fbar < 1e-13);

  CHECK_THROWS_AS(f_zero_image(family("5 + x2", "0"), factor("2"), p), PreconditionError);
}

TEST_CASE("F-bar vanishes iff alpha is constant, on F = 0 points") {
  const MetricFunctions f = family("x1 + x3 + 5", "x2");
  for (const std::string& a : {"2", "exp(x1)", "1 + 0.1 * sin(x2)", "3 + x4^2 * 0"})
    for (const ChartPoint& p : testing::valid_points(f, 20)) {
      const FZeroImage im = f_zero_image(f, factor(a), p);
      CHECK((im.max_Fbar < 1e-10) == (im.max_dalpha < 1e-10));
      CHECK(im.residual < 1e-12);
    }
}
