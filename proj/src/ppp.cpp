#include "tropstat/ppp.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "tropstat/renewal.hpp"

namespace tropstat {

namespace {

std::size_t poisson_inversion(double mean, Rng& rng) {
  double p = std::exp(-mean);
  double cumulative = p;
  const double u = rng.uniform();
  std::size_t k = 0;
  const double cap = mean + 60.0 * std::sqrt(mean) + 60.0;
  while (u > cumulative && static_cast<double>(k) < cap) {
    ++k;
    p *= mean / static_cast<double>(k);
    cumulative += p;
  }
  return k;
}

// Transformed rejection with squeeze (Hormann 1993).
std::size_t poisson_ptrs(double mean, Rng& rng) {
  const double smu = std::sqrt(mean);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::size_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -mean + k * log_mean - std::lgamma(k + 1.0)) {
      return static_cast<std::size_t>(k);
    }
  }
}

// Sorted uniform x coordinates from normalised exponential spacings.
std::vector<double> sorted_uniforms(std::size_t count, Rng& rng) {
  std::vector<double> x(count);
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    total -= std::log(rng.uniform());
    x[i] = total;
  }
  total -= std::log(rng.uniform());
  for (auto& v : x) v /= total;
  return x;
}

// x coordinates of the points of rank idx[0] < idx[1] < ... among `count`
// sorted uniforms: partial sums of Gamma(gap) spacings over their total.
std::vector<double> ranked_uniforms(std::span<const std::size_t> idx, std::size_t count, Rng& rng) {
  auto gamma_gap = [&](std::size_t k) {
    if (k == 1) return -std::log(rng.uniform());
    return boost::math::gamma_p_inv(static_cast<double>(k), rng.uniform());
  };
  std::vector<double> x;
  x.reserve(idx.size());
  double total = 0.0;
  std::size_t rank = 0;  // ranks are 1-based in the spacing sum
  for (std::size_t i : idx) {
    total += gamma_gap(i + 1 - rank);
    rank = i + 1;
    x.push_back(total);
  }
  total += gamma_gap(count + 1 - rank);
  for (auto& v : x) v /= total;
  return x;
}

template <class Height>
PointSample strip_sample(SampleKind kind, double n, double mean, Rng& rng, Retain retain,
                         Height height) {
  PointSample s;
  s.kind = kind;
  s.n = n;
  s.total_points = poisson_sample(mean, rng);
  s.reduced = retain == Retain::hull_candidates;
  std::vector<double> levels(s.total_points);
  for (auto& v : levels) v = rng.uniform();
  if (s.reduced) {
    // Which points can be hull vertices depends only on the x order, so x is
    // generated for those ranks alone.
    const auto idx = hull_candidate_indices(levels);
    const auto xs = ranked_uniforms(idx, s.total_points, rng);
    s.points.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) s.points.push_back({xs[k], height(levels[idx[k]])});
  } else {
    const auto xs = sorted_uniforms(s.total_points, rng);
    s.points.reserve(s.total_points);
    for (std::size_t i = 0; i < s.total_points; ++i) s.points.push_back({xs[i], height(levels[i])});
  }
  return s;
}

}  // namespace

std::size_t poisson_sample(double mean, Rng& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("poisson_sample: mean must be finite and >= 0");
  }
  if (mean == 0.0) return 0;
  return mean <= 30.0 ? poisson_inversion(mean, rng) : poisson_ptrs(mean, rng);
}

PointSample sim_homogeneous(double n, Rng& rng, Retain retain) {
  if (!(n > 0.0)) throw std::invalid_argument("sim_homogeneous: n must be positive");
  return strip_sample(SampleKind::homogeneous, n, n, rng, retain, [](double u) { return u; });
}

PointSample sim_inhomogeneous(const AtomDistribution& dist, double n, Rng& rng, Retain retain,
                              double height_mass) {
  if (!(n > 0.0)) throw std::invalid_argument("sim_inhomogeneous: n must be positive");
  if (!(height_mass > 0.0)) throw std::invalid_argument("sim_inhomogeneous: height mass must be positive");
  if (!dist.continuous()) throw std::invalid_argument("sim_inhomogeneous: needs continuous atoms");
  return strip_sample(SampleKind::inhomogeneous, n, n * height_mass, rng, retain,
                      [&](double u) { return dist.g_inverse(height_mass * u); });
}

PointSample sim_discrete(const AtomDistribution& dist, std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sim_discrete: n must be >= 1");
  PointSample s;
  s.kind = SampleKind::discrete;
  s.n = static_cast<double>(n);
  s.total_points = n + 1;
  s.points.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    s.points.push_back({static_cast<double>(i) / static_cast<double>(n), dist.sample(rng)});
  }
  return s;
}

PointSample couple(const PointSample& sample, std::size_t strips) {
  if (strips < 1) throw std::invalid_argument("couple: need at least one strip");
  PointSample out = sample;
  const double m = static_cast<double>(strips);
  for (auto& p : out.points) p.x = std::floor(p.x * m) / m;
  return out;
}

LowerHull sample_hull(const PointSample& sample) {
  if (sample.kind != SampleKind::discrete) return lower_hull(sample.points, CollinearMode::strict);
  // Tied atoms make lattice points collinear; i/n would blur that.
  std::vector<PlanarPoint> pts = sample.points;
  for (auto& p : pts) p.x = std::round(p.x * sample.n);
  LowerHull hull = lower_hull(pts, CollinearMode::strict);
  for (auto& v : hull.vertices) v.x /= sample.n;
  for (auto& f : hull.faces) {
    f.dx /= sample.n;
    f.slope *= sample.n;
  }
  return hull;
}

std::size_t hull_count(const PointSample& sample, HullSide side) {
  if (sample.points.empty()) return 0;
  const LowerHull hull = sample_hull(sample);
  if (side == HullSide::full) return hull.face_count();
  const auto [plus, minus] = split_hull(hull);
  return side == HullSide::plus ? plus.face_count() : minus.face_count();
}

std::size_t coupled_walk_count(const LowerHull& plus_hull, const AtomDistribution& dist,
                               double t, Rng& rng) {
  const auto& v = plus_hull.vertices;
  if (v.empty()) throw std::invalid_argument("coupled_walk_count: empty hull");
  std::size_t count = 0;
  for (const auto& p : v) {
    if (-std::log(p.y) > t) return count;
    ++count;
  }
  double position = -std::log(v.back().y);
  for (;;) {
    position -= std::log(JumpLaw(dist, std::exp(-position)).quantile(rng.uniform()));
    if (position > t) return count;
    ++count;
  }
}

}  // namespace tropstat
