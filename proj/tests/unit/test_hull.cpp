#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "tropstat/hull.hpp"

using namespace tropstat;

namespace {

std::vector<PlanarPoint> worked_example() {
  return {{0, 5}, {1, 5}, {2, 2}, {3, 1}, {4, 0}};
}

std::vector<PlanarPoint> random_points(Rng& rng, int count, bool integer) {
  std::vector<PlanarPoint> pts;
  std::set<double> xs;
  while (static_cast<int>(pts.size()) < count) {
    double x = integer ? std::floor(rng.uniform() * 40) : rng.uniform();
    if (!xs.insert(x).second) continue;
    double y = integer ? std::floor(rng.uniform() * 40) : rng.uniform();
    pts.push_back({x, y});
  }
  return pts;
}

// Segments (P,Q), P left of Q, with every other point strictly above line PQ.
std::set<std::pair<std::size_t, std::size_t>> brute_force_faces(const std::vector<PlanarPoint>& p) {
  std::set<std::pair<std::size_t, std::size_t>> faces;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!(p[i].x < p[j].x)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < p.size() && ok; ++k) {
        if (k == i || k == j) continue;
        const double cross = (p[j].x - p[i].x) * (p[k].y - p[i].y) - (p[j].y - p[i].y) * (p[k].x - p[i].x);
        if (cross <= 0.0) ok = false;
      }
      if (ok) faces.insert({i, j});
    }
  }
  return faces;
}

}  // namespace

TEST(Hull, WorkedExampleStrict) {
  const auto h = lower_hull(worked_example(), CollinearMode::strict);
  const std::vector<PlanarPoint> expected{{0, 5}, {2, 2}, {4, 0}};
  EXPECT_EQ(h.vertices, expected);
  EXPECT_EQ(face_count(h), 2u);
}

TEST(Hull, WorkedExampleSplit) {
  const auto h = lower_hull(worked_example(), CollinearMode::split);
  const std::vector<PlanarPoint> expected{{0, 5}, {2, 2}, {3, 1}, {4, 0}};
  EXPECT_EQ(h.vertices, expected);
  EXPECT_EQ(face_count(h), 3u);
  EXPECT_EQ(index_partition(h), (OrderedPartition{2, 1, 1}));
}

TEST(Hull, DegenerateSizes) {
  const std::vector<PlanarPoint> one{{3, 1}};
  EXPECT_EQ(face_count(lower_hull(one)), 0u);
  const std::vector<PlanarPoint> two{{0, 0}, {1, 3}};
  EXPECT_EQ(face_count(lower_hull(two)), 1u);
  EXPECT_EQ(index_partition(lower_hull(two)), (OrderedPartition{1}));
  EXPECT_THROW(lower_hull(std::vector<PlanarPoint>{}), std::invalid_argument);
  const std::vector<PlanarPoint> bad{{0, 0}, {1, std::nan("")}};
  EXPECT_THROW(lower_hull(bad), std::invalid_argument);
}

TEST(Hull, DuplicateXKeepsLowestPoint) {
  const std::vector<PlanarPoint> pts{{1, 3}, {0, 1}, {1, 0}, {2, 1}};
  const auto h = lower_hull(pts);
  const std::vector<PlanarPoint> expected{{0, 1}, {1, 0}, {2, 1}};
  EXPECT_EQ(h.vertices, expected);
}

TEST(Hull, SplitAtMinimumVShape) {
  const std::vector<PlanarPoint> v{{0, 1}, {1, 0}, {2, 1}};
  const auto [left, right] = split_hull(lower_hull(v));
  EXPECT_EQ(face_count(left), 1u);
  EXPECT_EQ(face_count(right), 1u);
}

TEST(Hull, SplitPutsDescendingFacesOnTheLeft) {
  // All faces of a decreasing sequence lie left of the minimum vertex.
  const auto h = lower_hull(worked_example(), CollinearMode::split);
  const auto [left, right] = split_hull(h);
  EXPECT_EQ(face_count(left), 3u);
  EXPECT_EQ(face_count(right), 0u);
  for (const auto& f : left.faces) EXPECT_LT(f.slope, 0.0);

  const std::vector<PlanarPoint> rising{{0, 0}, {1, 1}, {2, 3}};
  const auto [l2, r2] = split_hull(lower_hull(rising));
  EXPECT_EQ(face_count(l2), 0u);
  EXPECT_EQ(face_count(r2), 2u);
}

TEST(Hull, SplitRejectsTiedMinimum) {
  const std::vector<PlanarPoint> flat{{0, 1}, {1, 0}, {2, 0}, {3, 1}};
  EXPECT_THROW(split_hull(lower_hull(flat)), std::domain_error);
}

TEST(Hull, SplitCountsAddUp) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(rng, 30, false);
    const auto h = lower_hull(pts);
    const auto [l, r] = split_hull(h);
    EXPECT_EQ(face_count(l) + face_count(r), face_count(h));
  }
}

TEST(Hull, ConvexHeightsAreAllExtreme) {
  std::vector<PlanarPoint> pts;
  for (int i = 0; i <= 4; ++i) pts.push_back({double(i), double(i * i)});
  EXPECT_EQ(index_partition(lower_hull(pts)), (OrderedPartition{1, 1, 1, 1}));
}

TEST(Hull, IndexPartitionNeedsIntegerX) {
  const std::vector<PlanarPoint> pts{{0, 1}, {0.5, 0}, {2, 1}};
  EXPECT_THROW(index_partition(lower_hull(pts)), std::domain_error);
  const auto parts = interval_partition(lower_hull(pts));
  EXPECT_DOUBLE_EQ(parts[0] + parts[1], 2.0);
}

TEST(Hull, LatticeLength) {
  EXPECT_EQ(lattice_length({4, -6, -1.5}), 2);
  EXPECT_EQ(lattice_length({3, 0, 0}), 3);
  EXPECT_EQ(lattice_length({0.5, 1, 2}), 1);
}

TEST(Hull, MatchesBruteForceOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int count = 2 + static_cast<int>(rng.uniform() * 11);
    const auto pts = random_points(rng, count, false);
    const auto h = lower_hull(pts);
    std::set<std::pair<double, double>> got;
    for (std::size_t i = 1; i < h.vertices.size(); ++i) got.insert({h.vertices[i - 1].x, h.vertices[i].x});
    std::set<std::pair<double, double>> want;
    for (auto [i, j] : brute_force_faces(pts)) want.insert({pts[i].x, pts[j].x});
    EXPECT_EQ(got, want);
  }
}

TEST(Hull, EveryPointOnOrAboveEveryFace) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(rng, 50, false);
    const auto h = lower_hull(pts);
    for (std::size_t f = 0; f < h.faces.size(); ++f) {
      const auto& p = h.vertices[f];
      for (const auto& q : pts) {
        EXPECT_GE(q.y - (p.y + h.faces[f].slope * (q.x - p.x)), -1e-12);
      }
    }
    for (std::size_t f = 1; f < h.faces.size(); ++f) EXPECT_GT(h.faces[f].slope, h.faces[f - 1].slope);
  }
}

TEST(Hull, Idempotent) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(rng, 40, trial % 2 == 0);
    for (auto mode : {CollinearMode::strict, CollinearMode::split}) {
      const auto h = lower_hull(pts, mode);
      const auto again = lower_hull(h.vertices, mode);
      EXPECT_EQ(again.vertices, h.vertices);
    }
  }
}

TEST(Hull, SplitModeCountsLatticeLengths) {
  Rng rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PlanarPoint> pts;
    const int n = 3 + static_cast<int>(rng.uniform() * 15);
    for (int i = 0; i <= n; ++i) pts.push_back({double(i), std::floor(rng.uniform() * 6)});
    const auto strict = lower_hull(pts, CollinearMode::strict);
    long long weighted = 0;
    for (const auto& f : strict.faces) weighted += lattice_length(f);
    const auto split = lower_hull(pts, CollinearMode::split);
    EXPECT_EQ(static_cast<long long>(face_count(split)), weighted);
    const auto parts = index_partition(split);
    int sum = 0;
    for (int x : parts) sum += x;
    EXPECT_EQ(sum, n);
  }
}

TEST(Hull, CandidateIndicesContainAllVertices) {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform() * 200);
    std::vector<double> ys(n);
    for (auto& y : ys) y = rng.uniform();
    std::vector<PlanarPoint> all;
    for (int i = 0; i < n; ++i) all.push_back({double(i), ys[i]});
    const auto idx = hull_candidate_indices(ys);
    ASSERT_TRUE(std::is_sorted(idx.begin(), idx.end()));
    ASSERT_EQ(std::adjacent_find(idx.begin(), idx.end()), idx.end());
    std::vector<PlanarPoint> subset;
    for (auto i : idx) subset.push_back(all[i]);
    EXPECT_EQ(lower_hull(subset).vertices, lower_hull(all).vertices);
  }
}

TEST(Hull, TriangleAreaUnderLebesgueIsPlanarArea) {
  const auto d = AtomDistribution::exponential();
  const std::vector<PlanarPoint> pts{{0.2, 0.5}, {0.6, 0.1}};
  const auto areas = triangle_areas(lower_hull(pts), d);
  ASSERT_EQ(areas.size(), 1u);
  // Triangle (0.2,0), (0.7,0), (0.2,0.5) by the shoelace formula.
  const double ax = 0.2, ay = 0, bx = 0.7, by = 0, cx = 0.2, cy = 0.5;
  const double planar = 0.5 * std::fabs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay));
  EXPECT_NEAR(areas[0], planar, 1e-14);
}

TEST(Hull, TriangleAreasUnderGMeasureMatchDirectIntegral) {
  for (const auto& d : {AtomDistribution::uniform(), AtomDistribution::gamma(2.0)}) {
    const double top = 0.9 * d.unit_height();
    const std::vector<PlanarPoint> pts{{0.1, top}, {0.3, 0.4 * top}, {0.7, 0.1 * top}};
    const auto h = lower_hull(pts);
    const auto areas = triangle_areas(h, d);
    ASSERT_EQ(areas.size(), 2u);
    // Midpoint-rule 2-D integral of dx dG(y) over each triangle.
    double prev = pts[0].x;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& apex = h.vertices[i];
      const double next = apex.x - apex.y / h.faces[i].slope;
      const int steps = 20000;
      double total = 0.0;
      for (int k = 0; k < steps; ++k) {
        const double y0 = apex.y * k / steps, y1 = apex.y * (k + 1) / steps;
        const double width = (next - prev) * (1.0 - 0.5 * (y0 + y1) / apex.y);
        total += width * (d.g_mass(y1) - d.g_mass(y0));
      }
      EXPECT_NEAR(areas[i], total, 1e-8 * std::max(1.0, total));
      prev = next;
    }
  }
}

TEST(Hull, TriangleAreasEmptyWithoutFaces) {
  const std::vector<PlanarPoint> one{{0.3, 0.2}};
  EXPECT_TRUE(triangle_areas(lower_hull(one), AtomDistribution::exponential()).empty());
}

TEST(Hull, TriangleAreasStopAtWindowEdge) {
  const auto d = AtomDistribution::exponential();
  // Intercepts 0.4 and 1.8: only the first triangle fits in x <= 1.
  const std::vector<PlanarPoint> pts{{0.0, 0.4}, {0.2, 0.2}, {1.0, 0.1}};
  const auto h = lower_hull(pts);
  EXPECT_EQ(triangle_areas(h, d).size(), 2u);
  const auto inside = triangle_areas(h, d, 1.0);
  ASSERT_EQ(inside.size(), 1u);
  EXPECT_NEAR(inside[0], 0.5 * 0.4 * 0.4, 1e-15);
}
