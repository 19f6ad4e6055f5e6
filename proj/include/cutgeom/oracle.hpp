#pragma once

#include <cstdint>
#include <random>

#include "cutgeom/bodies.hpp"

namespace cutgeom {

/// Portable seeded generator: std::mt19937_64 (output sequence fixed by the
/// C++ standard) with doubles built from the top 53 bits, so results do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Independent substream seed for (seed, index), via the splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

/// All hit-or-miss statistics of one sampling pass over the bounding box.
struct McMeasure {
  McEstimate volume;
  McEstimate cut_volume;  // part at height >= t
  McEstimate centroid;    // mean height of accepted samples
  McEstimate cut_ratio;   // fraction of accepted samples at height >= t
  long accepted = 0;      // samples inside the body
  long accepted_cut = 0;  // of those, samples at height >= t
};

struct Interval {
  double lo;
  double hi;
};

/// Wilson score interval for a binomial proportion at z standard deviations.
/// Unlike the plug-in p +- z sqrt(p(1-p)/n) it does not collapse to a point
/// when no (or every) trial succeeds.
Interval wilson_interval(long successes, long trials, double z);

constexpr long kMinSamples = 1000;

/// Uniform samples over the tight axis-aligned bounding box, classified by
/// point-in-body tests (facet half-spaces for polytopes, radial distance for
/// profiles). Throws std::invalid_argument for fewer than kMinSamples samples
/// or a degenerate box; profile directions must be the axis or its negative.
McMeasure mc_measure(const Body& body, const Direction& direction, double t, long samples, std::uint64_t seed);

McEstimate mc_volume(const Body& body, long samples, std::uint64_t seed);
McEstimate mc_cut_volume(const Body& body, const Direction& direction, double t, long samples,
                         std::uint64_t seed);
McEstimate mc_centroid_coordinate(const Body& body, const Direction& direction, long samples,
                                  std::uint64_t seed);

/// Convex hull of `num_points` uniform points in the unit ball (n in {2, 3});
/// degenerate draws are resampled up to 100 times.
Polytope random_polytope(int n, int num_points, std::uint64_t seed);

/// Random concave piecewise-linear profile with `num_knots` knots: strictly
/// decreasing slopes, nonnegative end radii, random height, scale and offset.
AnalyticProfile random_profile(int n, int num_knots, std::uint64_t seed);

}  // namespace cutgeom
