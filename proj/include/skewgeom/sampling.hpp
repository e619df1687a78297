#ifndef SKEWGEOM_SAMPLING_HPP
#define SKEWGEOM_SAMPLING_HPP

#include "skewgeom/tensor4.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace skewgeom {

/// Uniform points of the cube [lo, hi]^4. Doubles are built from the top 53
/// bits of each mt19937_64 draw, so sequences do not depend on the standard
/// library's distribution implementations.
class CubeSampler {
 public:
  explicit CubeSampler(std::uint64_t seed, double lo = -0.5, double hi = 0.5)
      : rng_(seed), lo_(lo), hi_(hi) {}

  double uniform() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo_ + (hi_ - lo_) * u;
  }

  Vec4d vector() {
    Vec4d v;
    for (int i = 0; i < 4; ++i) v[i] = uniform();
    return v;
  }

  ChartPoint point() { return ChartPoint{vector()}; }

 private:
  std::mt19937_64 rng_;
  double lo_, hi_;
};

struct SampleSet {
  std::vector<ChartPoint> points;
  int draws = 0;
  int rejected = 0;
};

/// Draws until `count` points pass `accept`. Predicates that throw a
/// skewgeom::Error count as rejections. Throws SamplingInfeasible when
/// 10 * count draws are used up.
SampleSet sample_points(int count, std::uint64_t seed,
                        const std::function<bool(const ChartPoint&)>& accept);

}  // namespace skewgeom

#endif  // SKEWGEOM_SAMPLING_HPP
