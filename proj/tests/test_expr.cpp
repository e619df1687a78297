#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cmath>
#include <random>

using namespace skewgeom;
using testing::at;

namespace {

Expr x(int i) { return Expr::variable(i); }
Expr c(double v) { return Expr::constant(v); }

double value_at(const Expr& e, Vec4d p) { return eval(e, ChartPoint{p}); }

// Random trees over the full grammar, kept away from domain trouble by
// wrapping the arguments of log, sqrt and division in 2 + (.)^2.
Expr random_tree(std::mt19937_64& rng, int depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth == 0 || pick(4) == 0) {
    if (pick(2) == 0) return x(1 + pick(4));
    return c(static_cast<double>(pick(2000)) / 16.0);
  }
  auto safe = [&](Expr e) { return c(2) + Expr::power(e, 2); };
  const Expr a = random_tree(rng, depth - 1);
  switch (pick(11)) {
    case 0: return a + random_tree(rng, depth - 1);
    case 1: return a - random_tree(rng, depth - 1);
    case 2: return a * random_tree(rng, depth - 1);
    case 3: return a / safe(random_tree(rng, depth - 1));
    case 4: return -a;
    case 5: return Expr::power(a, pick(7) - 3);
    case 6: return Expr::unary(ExprKind::Exp, Expr::unary(ExprKind::Sin, a));
    case 7: return Expr::unary(ExprKind::Log, safe(a));
    case 8: return Expr::unary(ExprKind::Sin, a);
    case 9: return Expr::unary(ExprKind::Cos, a);
    default: return Expr::unary(ExprKind::Sqrt, safe(a));
  }
}

}  // namespace

TEST_CASE("grammar examples") {
  CHECK(parse("x1 + x3 + 5") == (x(1) + x(3)) + c(5));
  CHECK(parse("exp(x2)*x4^2") == Expr::unary(ExprKind::Exp, x(2)) * Expr::power(x(4), 2));
  CHECK(parse("  x1*x2 ") == x(1) * x(2));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("x1 - x2 - x3") == (x(1) - x(2)) - x(3));
  CHECK(parse("x1 / x2 / x3") == (x(1) / x(2)) / x(3));
  CHECK(parse("x1 + x2 * x3") == x(1) + x(2) * x(3));
  CHECK(parse("-x1^2") == -Expr::power(x(1), 2));
  CHECK(parse("-x1 * x2") == (-x(1)) * x(2));
  CHECK(parse("(x1 + x2)^-2") == Expr::power(x(1) + x(2), -2));
  CHECK(parse("2.5e-1 * x1") == c(0.25) * x(1));
  CHECK(parse("x3 * 0.1") == x(3) * c(0.1));
}

TEST_CASE("parse errors") {
  SUBCASE("unknown identifier") {
    try {
      parse("x5 + 1");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("unknown identifier \"x5\"") != std::string::npos);
      CHECK(e.offset() == 0);
    }
    CHECK_THROWS_AS(parse("tan(x1)"), ParseError);
    CHECK_THROWS_AS(parse("x0"), ParseError);
  }
  SUBCASE("non-integer exponent") {
    try {
      parse("x1^2.5");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("non-integer exponent") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("x1^x2"), ParseError);
  }
  SUBCASE("syntax errors carry byte offsets") {
    try {
      parse("x1 + * x2");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("(x1 + x2"), ParseError);
    CHECK_THROWS_AS(parse("x1 x2"), ParseError);
    CHECK_THROWS_AS(parse("sin x1"), ParseError);
    CHECK_THROWS_AS(parse("--x1"), ParseError);
  }
}

TEST_CASE("canonical printing round-trips") {
  for (const std::string& s : testing::expression_corpus()) {
    const Expr e = parse(s);
    CAPTURE(s);
    CHECK(parse(to_string(e)) == e);
  }
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    const Expr e = random_tree(rng, 5);
    const std::string s = to_string(e);
    CAPTURE(s);
    const Expr back = parse(s);
    REQUIRE(back == e);
    CHECK(to_string(back) == s);
  }
}

TEST_CASE("jet examples") {
  const Jet2 p = eval_jet2(parse("x1*x2"), at(2, 3, 0, 0));
  CHECK(p.value == 6);
  CHECK(p.grad == Vec4d(3, 2, 0, 0));
  Mat4d h = Mat4d::Zero();
  h(0, 1) = h(1, 0) = 1;
  CHECK(p.hess == h);

  const Jet2 k = eval_jet2(parse("7"), at(0.3, -1, 2, 5));
  CHECK(k.value == 7);
  CHECK(k.grad.isZero(0));
  CHECK(k.hess.isZero(0));

  const Jet2 e = eval_jet2(parse("exp(x1)"), at(0, 0.4, -0.2, 0.9));
  CHECK(e.value == 1);
  CHECK(e.grad == Vec4d(1, 0, 0, 0));
  Mat4d eh = Mat4d::Zero();
  eh(0, 0) = 1;
  CHECK(e.hess == eh);
}

TEST_CASE("domain errors name the subexpression") {
  try {
    eval_jet2(parse("1 + log(x1)"), at(-0.5, 0, 0, 0));
    FAIL("expected a domain error");
  } catch (const DomainError& err) {
    CHECK(err.subexpression() == to_string(parse("log(x1)")));
  }
  CHECK_THROWS_AS(eval_jet2(parse("sqrt(x2)"), at(0, -1, 0, 0)), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse("1 / x3"), at(0, 0, 0, 0)), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse("x4^-1"), at(0, 0, 0, 0)), DomainError);
  CHECK_THROWS_AS(eval_jet2(parse("exp(exp(x1))"), at(8, 0, 0, 0)), DomainError);
  CHECK_NOTHROW(eval_jet2(parse("x4^2"), at(0, 0, 0, 0)));
}

TEST_CASE("jets agree with finite differences on the expression corpus") {
  // First partials: central differences, step 1e-5, relative 1e-6.
  // Second partials: second central differences of values, step 1e-4, 1e-4.
  CubeSampler sampler(42);
  std::vector<Vec4d> pts;
  for (int n = 0; n < 100; ++n) pts.push_back(sampler.vector());
  for (const std::string& s : testing::expression_corpus()) {
    const Expr e = parse(s);
    CAPTURE(s);
    for (const Vec4d& p : pts) {
      const Jet2 j = eval_jet2(e, ChartPoint{p});
      for (int i = 0; i < 4; ++i) {
        const double h = 1e-5;
        const Vec4d di = h * Vec4d::Unit(i);
        const double fd = (value_at(e, p + di) - value_at(e, p - di)) / (2 * h);
        CHECK(std::abs(fd - j.grad[i]) <= 1e-6 * std::max(1.0, std::abs(j.grad[i])));
        const double H = 1e-4;
        for (int k = 0; k < 4; ++k) {
          const Vec4d a = H * Vec4d::Unit(i), b = H * Vec4d::Unit(k);
          const double fd2 = (value_at(e, p + a + b) - value_at(e, p + a - b) -
                              value_at(e, p - a + b) + value_at(e, p - a - b)) /
                             (4 * H * H);
          CHECK(std::abs(fd2 - j.hess(i, k)) <= 1e-4 * std::max(1.0, std::abs(j.hess(i, k))));
          CHECK(j.hess(i, k) == j.hess(k, i));
        }
      }
    }
  }
}

TEST_CASE("value-only evaluation matches the jet value") {
  const Expr e = parse("sin(x1 + x2 * x3)^3 - log(3 + x4)");
  const ChartPoint p = at(0.1, 0.2, -0.3, 0.4);
  CHECK(eval(e, p) == doctest::Approx(eval_jet2(e, p).value).epsilon(1e-15));
}
