#include "skewgeom/sampling.hpp"

#include "skewgeom/errors.hpp"

#include <string>

namespace skewgeom {

SampleSet sample_points(int count, std::uint64_t seed,
                        const std::function<bool(const ChartPoint&)>& accept) {
  if (count < 1) throw PreconditionError("point count must be at least 1");
  CubeSampler sampler(seed);
  SampleSet s;
  const int cap = 10 * count;
  while (static_cast<int>(s.points.size()) < count) {
    if (s.draws == cap)
      throw SamplingInfeasible("only " + std::to_string(s.points.size()) + " of " +
                               std::to_string(count) + " points accepted after " +
                               std::to_string(cap) + " draws");
    const ChartPoint p = sampler.point();
    ++s.draws;
    bool ok = false;
    try {
      ok = accept(p);
    } catch (const Error&) {
      ok = false;
    }
    if (ok)
      s.points.push_back(p);
    else
      ++s.rejected;
  }
  return s;
}

}  // namespace skewgeom
