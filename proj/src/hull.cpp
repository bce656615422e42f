#include "tropstat/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tropstat/numeric.hpp"

namespace tropstat {

namespace {

// Twice the signed area of (o, a, b); positive for a counter-clockwise turn.
// Exact for integer coordinates below 2^26.
inline double cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

HullFace make_face(const PlanarPoint& p, const PlanarPoint& q) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  return HullFace{dx, dy, dy / dx};
}

void finish(LowerHull& hull) {
  const auto& v = hull.vertices;
  hull.faces.clear();
  hull.faces.reserve(v.empty() ? 0 : v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) hull.faces.push_back(make_face(v[i - 1], v[i]));
  hull.split_index = static_cast<std::size_t>(
      std::min_element(v.begin(), v.end(),
                       [](const PlanarPoint& a, const PlanarPoint& b) { return a.y < b.y; }) -
      v.begin());
}

// Chain over points sorted by strictly increasing x.
std::vector<PlanarPoint> monotone_chain(std::span<const PlanarPoint> sorted) {
  std::vector<PlanarPoint> chain;
  chain.reserve(std::min<std::size_t>(sorted.size(), 64));
  for (const auto& p : sorted) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0.0) {
      chain.pop_back();
    }
    chain.push_back(p);
  }
  return chain;
}

std::vector<PlanarPoint> subdivide_lattice(const std::vector<PlanarPoint>& strict) {
  std::vector<PlanarPoint> out;
  if (strict.empty()) return out;
  out.reserve(strict.size());
  out.push_back(strict.front());
  for (std::size_t i = 1; i < strict.size(); ++i) {
    const auto& p = strict[i - 1];
    const auto& q = strict[i];
    const long long g = lattice_length(make_face(p, q));
    for (long long k = 1; k < g; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(g);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace

long long lattice_length(const HullFace& face) {
  if (!is_integral(face.dx) || !is_integral(face.dy)) return 1;
  const auto dx = static_cast<long long>(std::fabs(face.dx));
  const auto dy = static_cast<long long>(std::fabs(face.dy));
  const long long g = std::gcd(dx, dy);
  return g > 0 ? g : 1;
}

LowerHull lower_hull(std::span<const PlanarPoint> points, CollinearMode mode) {
  if (points.empty()) throw std::invalid_argument("lower_hull: empty point set");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("lower_hull: non-finite coordinate");
    }
  }

  bool strictly_sorted = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      strictly_sorted = false;
      break;
    }
  }

  LowerHull hull;
  hull.mode = mode;
  if (strictly_sorted) {
    hull.vertices = monotone_chain(points);
  } else {
    std::vector<PlanarPoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    // Keep the lowest point of each x.
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const PlanarPoint& a, const PlanarPoint& b) { return a.x == b.x; }),
                 sorted.end());
    hull.vertices = monotone_chain(sorted);
  }
  if (mode == CollinearMode::split) hull.vertices = subdivide_lattice(hull.vertices);
  finish(hull);
  return hull;
}

std::pair<LowerHull, LowerHull> split_hull(const LowerHull& hull) {
  const auto& v = hull.vertices;
  if (v.empty()) throw std::invalid_argument("split_hull: empty hull");
  const std::size_t k = hull.split_index;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != k && v[i].y == v[k].y) {
      throw std::domain_error("split_hull: minimum y attained twice");
    }
  }
  LowerHull left, right;
  left.mode = right.mode = hull.mode;
  left.vertices.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  right.vertices.assign(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  finish(left);
  finish(right);
  return {std::move(left), std::move(right)};
}

OrderedPartition index_partition(const LowerHull& hull) {
  OrderedPartition parts;
  parts.reserve(hull.faces.size());
  for (const auto& f : hull.faces) {
    if (!is_integral(f.dx)) {
      throw std::domain_error("index_partition: vertices must have integer x");
    }
    parts.push_back(static_cast<int>(f.dx));
  }
  return parts;
}

std::vector<double> interval_partition(const LowerHull& hull) {
  std::vector<double> parts;
  parts.reserve(hull.faces.size());
  for (const auto& f : hull.faces) parts.push_back(f.dx);
  return parts;
}

namespace {

// Integral of G([0,y]) dy over [0, top].
double g_integral(const AtomDistribution& dist, double top) {
  switch (dist.kind()) {
    case AtomKind::exponential: return 0.5 * top * top;
    case AtomKind::weibull: return std::pow(top, dist.shape() + 1.0) / (dist.shape() + 1.0);
    case AtomKind::uniform: {
      const double r = 1.0 - top;
      return r > 0.0 ? r * std::log(r) + top : std::numeric_limits<double>::infinity();
    }
    default: break;
  }
  const double scale = top * dist.g_mass(top);
  if (scale == 0.0) return 0.0;
  return numeric::adaptive_simpson([&](double y) { return dist.g_mass(y); }, 0.0, top,
                                   1e-12 * scale);
}

}  // namespace

std::vector<double> triangle_areas(const LowerHull& plus_hull, const AtomDistribution& dist,
                                   double x_limit) {
  std::vector<double> areas;
  const auto& v = plus_hull.vertices;
  if (v.size() < 2) return areas;
  areas.reserve(v.size() - 1);
  double previous_intercept = v.front().x;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const auto& apex = v[i - 1];
    const double slope = plus_hull.faces[i - 1].slope;
    if (!(slope < 0.0)) {
      throw std::domain_error("triangle_areas: expects a lower-left hull (negative slopes)");
    }
    const double intercept = apex.x - apex.y / slope;
    if (intercept > x_limit) break;
    const double base = intercept - previous_intercept;
    // Width at height y is base * (1 - y / apex.y); integrate against dG.
    areas.push_back(base * g_integral(dist, apex.y) / apex.y);
    previous_intercept = intercept;
  }
  return areas;
}

std::vector<std::size_t> hull_candidate_indices(std::span<const double> ys) {
  std::vector<std::size_t> left, right;
  const std::size_t n = ys.size();
  if (n == 0) return left;
  double running = ys[0];
  left.push_back(0);
  for (std::size_t i = 1; i < n; ++i) {
    if (ys[i] < running) {
      running = ys[i];
      left.push_back(i);
    }
  }
  running = ys[n - 1];
  right.push_back(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) {
    if (ys[i] < running) {
      running = ys[i];
      right.push_back(i);
    }
  }
  // left ascends, right descends; merge and drop the shared indices.
  std::vector<std::size_t> merged;
  merged.reserve(left.size() + right.size());
  std::size_t a = 0;
  std::size_t b = right.size();
  while (a < left.size() || b > 0) {
    if (b == 0 || (a < left.size() && left[a] < right[b - 1])) {
      merged.push_back(left[a++]);
    } else if (a == left.size() || right[b - 1] < left[a]) {
      merged.push_back(right[--b]);
    } else {
      merged.push_back(left[a++]);
      --b;
    }
  }
  return merged;
}

}  // namespace tropstat
