#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgeom/chart.hpp"
#include "skewgeom/structure.hpp"
#include "support.hpp"

#include <cmath>

using namespace skewgeom;
using testing::at;
using testing::family;

TEST_CASE("pack examples") {
  const MetricPack p = build_pack(family("5", "1"), at(0, 0, 0, 0));
  CHECK(p.D == 23.0);
  CHECK(p.g(0, 0) == 5.0);

  const MetricPack q = build_pack(family("x1 + x3 + 5", "x2"), at(1, 0.1, 1, 0));
  CHECK(q.A_jet.value == doctest::Approx(7.0));
  CHECK(q.B_jet.value == doctest::Approx(0.1));
  CHECK(q.D == doctest::Approx(48.98));

  CHECK_THROWS_AS(build_pack(family("1", "1"), at(0, 0, 0, 0)), PositivityError);
  CHECK(!positivity_holds(std::sqrt(2.0), 1.0));
  CHECK(positivity_holds(1.5, -1.0));
}

TEST_CASE("pack invariants hold on the corpus") {
  for (const MetricFunctions& f : testing::corpus())
    for (const ChartPoint& p : testing::valid_points(f, 40)) {
      const MetricJets j = evaluate(f, p);
      CHECK(check_invariants(build_pack(j)).max() < 1e-12 * input_scale(j));
    }
}

TEST_CASE("Christoffel symbols") {
  SUBCASE("vanish for constant A, B") {
    CHECK(max_abs(christoffel(family("5", "1"), at(0.1, 0.2, 0.3, 0.4)).gamma) == 0.0);
  }
  SUBCASE("are symmetric and metric-compatible") {
    for (const MetricFunctions& f : testing::corpus())
      for (const ChartPoint& p : testing::valid_points(f, 30)) {
        const MetricJets j = evaluate(f, p);
        const Connection c = christoffel(j);
        for (int k = 0; k < 4; ++k)
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) CHECK(c.gamma(k, a, b) == c.gamma(k, b, a));
        CHECK(metric_compatibility_residual(j, c) < 1e-12 * input_scale(j));
      }
  }
}

TEST_CASE("fundamental tensor for A = 5 + x2, B = 0 at the origin") {
  const MetricJets j = evaluate(family("5 + x2", "0"), at(0, 0, 0, 0));
  const FundamentalData fd = fundamental(j);
  CHECK(fd.F(0, 0, 0) == doctest::Approx(1.0));
  CHECK(fd.F(0, 1, 1) == doctest::Approx(-1.0));
  CHECK(fd.F(2, 1, 1) == doctest::Approx(-1.0));
  CHECK(std::abs(fd.F(1, 1, 1)) < 1e-15);
  CHECK(fd.F(2, 2, 2) == doctest::Approx(1.0));
  CHECK(std::abs(fd.F(1, 2, 2)) < 1e-15);
  CHECK(std::abs(fd.F(3, 2, 2)) < 1e-15);
  CHECK(fd.theta[0] == doctest::Approx(0.4));
  CHECK(max_abs(fd.F - fundamental_closed_form(j).F) < 1e-14);
}

TEST_CASE("fundamental tensor: connection route matches the component table") {
  for (const MetricFunctions& f : testing::corpus())
    for (const ChartPoint& p : testing::valid_points(f, 40)) {
      const MetricJets j = evaluate(f, p);
      const FundamentalData a = fundamental(j), b = fundamental_closed_form(j);
      const double tol = 1e-12 * input_scale(j);
      CHECK(max_abs(a.F - b.F) < tol);
      CHECK(max_abs(a.theta - b.theta) < tol);
      CHECK(max_abs(a.theta_star - b.theta_star) < tol);
      CHECK(symmetry_residual(a) < tol);
      CHECK(theta_star_residual(a, build_pack(j)) < tol);
    }
}

TEST_CASE("theta_3 and theta_4 as printed differ exactly when B and its derivatives are active") {
  const MetricJets b0 = evaluate(family("5 + x2", "0"), at(0.1, 0.2, 0.3, 0.4));
  CHECK(max_abs(theta_as_printed(b0) - fundamental(b0).theta) < 1e-14);

  const MetricJets j = evaluate(family("exp(x4) + 4", "x3 * 0.1"), at(0.1, 0.2, 0.3, 0.4));
  const Vec4d printed = theta_as_printed(j), computed = fundamental(j).theta;
  CHECK(std::abs(printed[0] - computed[0]) < 1e-14);
  CHECK(std::abs(printed[1] - computed[1]) < 1e-14);
  CHECK(std::abs(printed[2] - computed[2]) + std::abs(printed[3] - computed[3]) > 1e-3);
}

TEST_CASE("parallel S") {
  CHECK(nabla_S(family("5", "1"), at(0.1, 0.2, 0.3, 0.4)).is_parallel);
  for (const ChartPoint& p : testing::valid_points(family("x1 + x3 + 5", "x2"), 20)) {
    const MetricJets j = evaluate(family("x1 + x3 + 5", "x2"), p);
    CHECK(nabla_S(j).is_parallel);
    CHECK(parallel_conditions(j).maxCoeff() < 1e-14);
    CHECK(max_abs(fundamental(j).F) < 1e-12);
  }
  const MetricJets np = evaluate(family("x1 + x3 + 5", "2 * x2"), at(0.1, 0.2, 0.3, 0.4));
  CHECK(!nabla_S(np).is_parallel);
  CHECK(parallel_conditions(np).maxCoeff() > 0.5);
}

TEST_CASE("parallel S iff the four first-order conditions vanish") {
  for (const MetricFunctions& f : testing::corpus())
    for (const ChartPoint& p : testing::valid_points(f, 30)) {
      const MetricJets j = evaluate(f, p);
      CHECK(nabla_S(j).is_parallel == (parallel_conditions(j).maxCoeff() < 1e-10));
    }
}

TEST_CASE("c1 and c3") {
  for (const MetricFunctions& f : testing::corpus())
    for (const ChartPoint& p : testing::valid_points(f, 40)) {
      const MetricJets j = evaluate(f, p);
      const MetricPack pack = build_pack(j);
      const FundamentalData fd = fundamental(j);
      const double tol = 1e-12 * input_scale(j);
      CHECK(verify_c1(fd, pack) < tol);
      CHECK(verify_c3(fd, pack) < tol);
    }
}

TEST_CASE("c1 negative control: wrong 1-forms are detected") {
  const MetricJets j = evaluate(family("5 + x2", "0"), at(0, 0, 0, 0));
  FundamentalData fd = fundamental(j);
  fd.theta.setZero();
  fd.theta_star.setZero();
  CHECK(verify_c1(fd, build_pack(j)) > 0.5);
}
