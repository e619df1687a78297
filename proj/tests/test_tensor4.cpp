#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgeom/errors.hpp"
#include "skewgeom/structure.hpp"
#include "skewgeom/tensor4.hpp"

#include <Eigen/LU>

#include <random>

using namespace skewgeom;

namespace {

Mat4d random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat4d m;
  for (int i = 0; i < 16; ++i) m(i) = u(rng);
  return m;
}

Tensor3d random_tensor(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Tensor3d t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) t(i, j, k) = u(rng);
  return t;
}

}  // namespace

TEST_CASE("invert4 on the identity") {
  CHECK(invert4(Mat4d(Mat4d::Identity())) == Mat4d::Identity());
}

TEST_CASE("inverse of g for A = 5, B = 1") {
  const Mat4d g = metric_matrix(5.0, 1.0);
  const Mat4d inv = invert4(g);
  CHECK(inv(0, 0) == doctest::Approx(5.0 / 23).epsilon(1e-14));
  CHECK(inv(0, 1) == doctest::Approx(-1.0 / 23).epsilon(1e-14));
  // Gaussian elimination with partial pivoting as the independent route.
  CHECK(max_abs(inv - g.partialPivLu().inverse()) < 1e-15);
  CHECK(max_abs(inv - metric_inverse_closed_form(5.0, 1.0)) < 1e-15);
}

TEST_CASE("inverse of g~ for A = 5, B = 1") {
  const Mat4d gt = associated_matrix(5.0, 1.0);
  const Mat4d inv = invert4(gt);
  CHECK(max_abs(inv - gt.partialPivLu().inverse()) < 1e-15);
  CHECK(max_abs(inv - associated_inverse_closed_form(5.0, 1.0)) < 1e-15);
  // The closed form carries the factor 1/(2 D) = 1/46 in front of an integer pattern.
  const Mat4d pattern = 46.0 * inv;
  CHECK(max_abs(pattern - pattern.array().round().matrix()) < 1e-12);
}

TEST_CASE("invert4 is an involution and a right inverse") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    const Mat4d m = random_matrix(rng) + 2.0 * Mat4d::Identity();
    const Mat4d inv = invert4(m);
    const double scale = max_abs(m);
    CHECK(max_abs(m * inv - Mat4d::Identity()) < 1e-12 * scale * max_abs(inv));
    CHECK(max_abs(invert4(inv) - m) < 1e-12 * scale);
  }
}

TEST_CASE("singular matrices are rejected with their determinant") {
  Mat4d m = Mat4d::Ones();
  CHECK_THROWS_AS(invert4(m), SingularMatrixError);
  m = Mat4d::Identity();
  m(3, 3) = 0.0;
  try {
    invert4(m);
    FAIL("expected a singular-matrix error");
  } catch (const SingularMatrixError& e) {
    CHECK(e.determinant() == 0.0);
  }
}

TEST_CASE("determinant4 matches LU") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 50; ++n) {
    const Mat4d m = random_matrix(rng);
    CHECK(determinant4(m) == doctest::Approx(m.determinant()).epsilon(1e-12));
  }
}

TEST_CASE("contraction examples") {
  const Mat4d id = Mat4d::Identity();
  CHECK(contract(id, id) == 4.0);
  CHECK(contract(id) == 4.0);

  const Vec4d e1 = Vec4d::UnitX();
  CHECK(raise_index(e1, id) == e1);

  const Vec4d up = raise_index(e1, invert4(metric_matrix(5.0, 1.0)));
  CHECK(up[0] == doctest::Approx(5.0 / 23));
  CHECK(up[1] == doctest::Approx(-1.0 / 23));
  CHECK(std::abs(up[2]) < 1e-16);
  CHECK(up[3] == doctest::Approx(1.0 / 23));
}

TEST_CASE("contraction is linear") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    const Tensor3d s = random_tensor(rng), t = random_tensor(rng);
    const Mat4d pair = random_matrix(rng);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        if (p == q) continue;
        const Vec4d lhs = contract(s + 2.5 * t, p, q, pair);
        const Vec4d rhs = contract(s, p, q, pair) + 2.5 * contract(t, p, q, pair);
        CHECK(max_abs(lhs - rhs) < 1e-13);
      }
  }
}

TEST_CASE("contraction of a rank-4 tensor keeps the free index order") {
  Tensor4d t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) t(i, j, k, l) = i + 4 * j + 16 * k + 64 * l;
  const Mat4d id = Mat4d::Identity();
  const Mat4d c03 = contract(t, 0, 3, id);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      double s = 0;
      for (int a = 0; a < 4; ++a) s += t(a, j, k, a);
      CHECK(c03(j, k) == s);
    }
}

TEST_CASE("raising and lowering are inverse to each other") {
  std::mt19937_64 rng(9);
  const Mat4d g = metric_matrix(5.0, 1.0), inv = invert4(g);
  const Tensor3d t = random_tensor(rng);
  for (int pos = 0; pos < 3; ++pos)
    CHECK(max_abs(lower_index(raise_index(t, pos, inv), pos, g) - t) < 1e-14);
}

TEST_CASE("bad positions report 1-based indices") {
  const Tensor3d t;
  const Mat4d id = Mat4d::Identity();
  try {
    contract(t, 0, 3, id);
    FAIL("expected an index error");
  } catch (const IndexError& e) {
    CHECK(std::string(e.what()).find("positions 1 and 4") != std::string::npos);
  }
  CHECK_THROWS_AS(contract(t, 1, 1, id), IndexError);
  CHECK_THROWS_AS(raise_index(t, 3, id), IndexError);
  CHECK_THROWS_AS(contract(Tensor4d(), 2, 4, id), IndexError);
}
