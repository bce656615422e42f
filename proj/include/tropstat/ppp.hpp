#pragma once

#include <cstddef>
#include <vector>

#include "tropstat/atoms.hpp"
#include "tropstat/hull.hpp"
#include "tropstat/random.hpp"

namespace tropstat {

enum class SampleKind { homogeneous, inhomogeneous, discrete };

/// Which points a simulator keeps.
///  - all: every point.
///  - hull_candidates: only points that can be lower-hull vertices (strict
///    running minima of y from either end). Hull statistics have the same
///    law, including after couple(), but the stream is consumed differently,
///    so the two modes give different realizations for one seed.
enum class Retain { all, hull_candidates };

struct PointSample {
  SampleKind kind = SampleKind::homogeneous;
  double n = 0.0;
  /// Number of points drawn, before any reduction.
  std::size_t total_points = 0;
  bool reduced = false;
  /// Sorted by increasing x.
  std::vector<PlanarPoint> points;
};

/// Poisson(mean) count: inversion up to mean 30, PTRS rejection above.
std::size_t poisson_sample(double mean, Rng& rng);

/// Poisson(n) points uniform on (0,1)^2.
PointSample sim_homogeneous(double n, Rng& rng, Retain retain = Retain::all);

/// Poisson(n) points of intensity n lambda x G on (0,1) x (0, G^{-1}(m)),
/// m = `height_mass` (1 by default); the y of a point is G^{-1}(m U).
/// With height_mass != 1 the point count is Poisson(n m).
PointSample sim_inhomogeneous(const AtomDistribution& dist, double n, Rng& rng,
                              Retain retain = Retain::all, double height_mass = 1.0);

/// Points (i/n, C_i), i = 0..n, C_i i.i.d. from dist.
PointSample sim_discrete(const AtomDistribution& dist, std::size_t n, Rng& rng);

/// Moves every point to the left edge i/n of its strip [i/n, (i+1)/n).
PointSample couple(const PointSample& sample, std::size_t strips);

enum class HullSide { full, plus, minus };

/// Face count of the lower hull of the sample, or of its lower-left (plus)
/// or lower-right (minus) part. Empty samples give 0.
std::size_t hull_count(const PointSample& sample, HullSide side = HullSide::full);

LowerHull sample_hull(const PointSample& sample);

/// Walk count on horizon t read off a lower-left hull: S_i = -ln y(V_i) for
/// its vertices, continued by I_s jumps from the last vertex when the hull
/// stops above the horizon.
std::size_t coupled_walk_count(const LowerHull& plus_hull, const AtomDistribution& dist,
                               double t, Rng& rng);

}  // namespace tropstat
