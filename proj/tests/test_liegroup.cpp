#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgeom/errors.hpp"
#include "skewgeom/liegroup.hpp"
#include "skewgeom/structure.hpp"

#include <cmath>

using namespace skewgeom;

namespace {

const double params[][2] = {{1, 1}, {1, -1}, {0.5, -1}, {0.25, 0.25}, {1, 0.5}, {-0.5, -0.75}};

}  // namespace

TEST_CASE("g45 brackets and parameter range") {
  const LieAlgebraSpec s = g45_spec(1, 1);
  CHECK(s.C(0, 0, 3) == 1.0);
  CHECK(s.C(1, 1, 3) == 1.0);
  CHECK(s.C(2, 2, 3) == 1.0);
  CHECK(s.C(0, 3, 0) == -1.0);
  CHECK(jacobi_residual(s.C) == 0.0);

  CHECK_THROWS_AS(g45_spec(1, 0), PreconditionError);
  CHECK_THROWS_AS(g45_spec(0.5, 0.75), PreconditionError);
  CHECK_THROWS_AS(g45_spec(1.5, 1), PreconditionError);
  CHECK_NOTHROW(g45_spec(0.5, -1));
}

TEST_CASE("lie_spec validates antisymmetry and Jacobi") {
  Tensor3d C;
  C(0, 0, 1) = 1.0;
  CHECK_THROWS_AS(lie_spec(C), PreconditionError);
  C(0, 1, 0) = -1.0;
  CHECK_NOTHROW(lie_spec(C));

  // [e1,e2] = e1, [e1,e3] = e2 breaks Jacobi on (e1, e2, e3).
  Tensor3d D;
  auto bracket = [&](int i, int j, int k) {
    D(k, i, j) = 1.0;
    D(k, j, i) = -1.0;
  };
  bracket(0, 1, 0);
  bracket(0, 2, 1);
  CHECK(jacobi_residual(D) > 0.5);
  CHECK_THROWS_AS(lie_spec(D), PreconditionError);
}

TEST_CASE("Koszul connection table") {
  for (const auto& ab : params) {
    const double a = ab[0], b = ab[1];
    const Tensor3d n = koszul_connection(g45_spec(a, b));
    Tensor3d expect;
    expect(3, 0, 0) = -1.0;
    expect(0, 0, 3) = 1.0;
    expect(3, 1, 1) = -a;
    expect(1, 1, 3) = a;
    expect(2, 2, 3) = b;
    expect(3, 2, 2) = -b;
    CHECK(max_abs(n - expect) == 0.0);

    const LieFrameReport r = lie_report(g45_spec(a, b));
    CHECK(r.torsion == 0.0);
    CHECK(r.compatibility == 0.0);
    CHECK(r.curv.symmetry_residual < 1e-12);
  }
  CHECK(max_abs(koszul_connection(abelian_spec())) == 0.0);
}

TEST_CASE("frame F, theta, theta*") {
  const Mat4d Phi = as<double>(structure_Phi());
  for (const auto& ab : params) {
    const double a = ab[0], b = ab[1];
    const FrameF f = frame_F(g45_spec(a, b));
    CHECK(f.F(0, 0, 0) == doctest::Approx(-2.0));
    CHECK(f.F(0, 3, 3) == doctest::Approx(2.0));
    CHECK(f.F(2, 2, 2) == doctest::Approx(2.0 * b));
    CHECK(f.F(1, 0, 1) == doctest::Approx(-a));
    // Printed as 1 and -b; the Koszul table gives zero for both.
    CHECK(f.F(0, 2, 3) == 0.0);
    CHECK(f.F(2, 2, 1) == 0.0);
    CHECK(f.theta[0] == doctest::Approx(-2.0 - a - b));
    CHECK(f.theta[2] == doctest::Approx(1.0 + a + 2.0 * b));
    CHECK(max_abs(f.theta_star - Vec4d(0, 1 - a, 0, -2 - a - b)) < 1e-15);
    CHECK(f.theta_star_phi[1] == doctest::Approx(0.5 * (1 - b)));
    CHECK(f.theta_star_phi[3] == doctest::Approx(-0.5 * (2 * a + 3 * b + 3)));
    CHECK(max_abs(f.theta_star_phi + 0.5 * Phi * f.theta) == 0.0);
    CHECK(max_abs(f.gt_frame - Phi) == 0.0);
  }
  const FrameF unit = frame_F(g45_spec(1, 1));
  CHECK(max_abs(unit.theta - Vec4d(-4, 0, 4, 0)) < 1e-15);
  CHECK(max_abs(unit.theta_star - Vec4d(0, 0, 0, -4)) < 1e-15);
  CHECK(unit.c1_holds);
  const FrameF off = frame_F(g45_spec(1, -1));
  CHECK(!off.c1_holds);
  CHECK(off.c1_residual > 0.1);
}

TEST_CASE("frame nabla J and omega") {
  for (const auto& ab : params) {
    const double a = ab[0], b = ab[1];
    const FrameNablaJ j = frame_nablaJ(g45_spec(a, b));
    Tensor3d expect;
    auto put = [&](int i, int p, int q, double v) {
      expect(i, p, q) = v;
      expect(i, q, p) = -v;
    };
    put(0, 0, 1, 1.0);
    put(0, 2, 3, -1.0);
    put(2, 2, 1, b);
    put(2, 0, 3, b);
    CHECK(max_abs(j.nablaJ - expect) < 1e-15);
    CHECK(max_abs(j.omega - Vec4d(0, b + 1, 0, 0)) < 1e-15);
  }
  CHECK(frame_nablaJ(g45_spec(1, 1)).lck_holds);
  CHECK(!frame_nablaJ(g45_spec(1, 0.5)).lck_holds);
}

TEST_CASE("frame curvature") {
  const FrameCurvature c = frame_curvature(g45_spec(1, 1));
  const int pairs[][2] = {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 2}, {1, 3}};
  for (const auto& p : pairs) {
    CHECK(c.R(p[0], p[1], p[0], p[1]) == doctest::Approx(1.0));
    CHECK(c.R(p[1], p[0], p[0], p[1]) == doctest::Approx(-1.0));
  }
  CHECK(max_abs(c.rho + 3.0 * Mat4d::Identity()) < 1e-15);
  CHECK(c.tau == doctest::Approx(-12.0));
  CHECK(c.einstein);
  CHECK(max_abs(c.R) > 0.5);

  const FrameCurvature flat = frame_curvature(abelian_spec());
  CHECK(max_abs(flat.R) == 0.0);
  CHECK(flat.tau == 0.0);
}

TEST_CASE("grid sweep") {
  const std::vector<GridCell> cells = grid_sweep();
  CHECK(cells.size() == 64);
  int admissible = 0;
  for (const GridCell& c : cells) {
    const bool unit = c.a == 1.0 && c.b == 1.0;
    if (c.admissible) {
      ++admissible;
      CHECK(c.c1_holds == unit);
      CHECK(c.lck_holds == unit);
      CHECK(c.c1_holds == c.lck_holds);
    }
    if (!unit) CHECK(c.c1_residual > 0.1);
  }
  CHECK(admissible == 36);
}
