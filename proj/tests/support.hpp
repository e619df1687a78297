#ifndef SKEWGEOM_TESTS_SUPPORT_HPP
#define SKEWGEOM_TESTS_SUPPORT_HPP

#include "skewgeom/chart.hpp"
#include "skewgeom/errors.hpp"
#include "skewgeom/expr.hpp"
#include "skewgeom/sampling.hpp"
#include "skewgeom/suites.hpp"

#include <string>
#include <vector>

namespace testing {

using namespace skewgeom;

inline ChartPoint at(double a, double b, double c, double d) { return ChartPoint{Vec4d(a, b, c, d)}; }

inline MetricFunctions family(const std::string& A, const std::string& B) {
  return {parse(A), parse(B)};
}

/// The five corpus families, parsed.
inline std::vector<MetricFunctions> corpus() {
  std::vector<MetricFunctions> out;
  for (const Family& f : corpus_families()) out.push_back(family(f.A, f.B));
  return out;
}

/// Seeded points of the cube where g is positive definite.
inline std::vector<ChartPoint> valid_points(const MetricFunctions& f, int n = 100,
                                            std::uint64_t seed = 42) {
  return sample_points(n, seed, [&](const ChartPoint& p) {
           const MetricJets j = evaluate(f, p);
           return positivity_holds(j.A.value, j.B.value);
         })
      .points;
}

/// Every expression used by the metric families and conformal factors, plus
/// a few that reach the remaining node kinds.
inline std::vector<std::string> expression_corpus() {
  std::vector<std::string> v;
  for (const Family& f : corpus_families()) {
    v.push_back(f.A);
    v.push_back(f.B);
  }
  for (const std::string& a : corpus_alphas()) v.push_back(a);
  v.insert(v.end(), {"2 * x2", "x1 * x2", "exp(x2) * x4^2", "sqrt(2 + x1) / (1 + x3^2)",
                     "log(3 + x4) - cos(x1 * x2)", "(2 + x1)^-3", "sin(x1 + x2 * x3)^3",
                     "-x1^2 + x3 / (4 - x2)", "5 + x2 * x2 + x1 * x3"});
  return v;
}

}  // namespace testing

#endif  // SKEWGEOM_TESTS_SUPPORT_HPP
