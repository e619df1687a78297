#ifndef SKEWGEOM_SUITES_HPP
#define SKEWGEOM_SUITES_HPP

#include "skewgeom/chart.hpp"
#include "skewgeom/conformal.hpp"
#include "skewgeom/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewgeom {

// Verification suites over seeded sample points. Chart-side residuals are
// recorded normalized by the input scale (1 + largest jet entry); frame
// residuals are recorded raw.

struct SuiteOptions {
  int points = 100;
  std::uint64_t seed = 42;
  std::optional<double> tol;  // overrides every non-counting tolerance
};

struct Family {
  std::string name;
  std::string A, B;
};

/// The built-in metric families and conformal factors.
std::vector<Family> corpus_families();
std::vector<std::string> corpus_alphas();

MetricFunctions parse_family(const std::string& A, const std::string& B);

/// Throws SamplingInfeasible (through sample_points) when too many draws are
/// rejected.
VerificationReport chart_suite(const MetricFunctions& funcs, const SuiteOptions& opt);
VerificationReport conformal_suite(const MetricFunctions& funcs, const ConformalFactor& alpha,
                                   const SuiteOptions& opt);
VerificationReport curvature_suite(const MetricFunctions& funcs, const SuiteOptions& opt,
                                   const std::optional<Vec4d>& direction = std::nullopt);

/// Throws PreconditionError for parameters outside the g45 range.
VerificationReport lie_suite(double a, double b, const SuiteOptions& opt = {});
VerificationReport lie_grid_suite(const SuiteOptions& opt = {});

/// Every suite over the built-in corpus.
VerificationReport full_suite(const SuiteOptions& opt);

}  // namespace skewgeom

#endif  // SKEWGEOM_SUITES_HPP
