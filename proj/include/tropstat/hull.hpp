#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tropstat/atoms.hpp"

namespace tropstat {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

/// How points on the interior of a hull edge are treated.
///  - strict: only extreme points are vertices; slopes strictly increase.
///  - split: edges with integer displacement are cut at every lattice point,
///    so the face count equals the lattice-length-weighted count.
enum class CollinearMode { strict, split };

struct HullFace {
  double dx = 0.0;
  double dy = 0.0;
  double slope = 0.0;
};

/// Lower convex hull: vertices in strictly increasing x, faces between
/// consecutive vertices.
struct LowerHull {
  std::vector<PlanarPoint> vertices;
  std::vector<HullFace> faces;
  std::size_t split_index = 0;  ///< first vertex of minimum y
  CollinearMode mode = CollinearMode::strict;

  std::size_t face_count() const noexcept { return faces.size(); }
};

/// A composition of an integer listed in order of appearance.
using OrderedPartition = std::vector<int>;

/// Monotone-chain lower hull. Points sharing an x keep only the lowest one.
/// Linear time when the input is already sorted by x. Throws on empty or
/// non-finite input.
LowerHull lower_hull(std::span<const PlanarPoint> points,
                     CollinearMode mode = CollinearMode::strict);

inline std::size_t face_count(const LowerHull& hull) noexcept {
  return hull.face_count();
}

/// Splits at the minimum-y vertex into the lower-left part (faces of negative
/// slope, listed from the leftmost vertex down) and the lower-right part.
/// Throws when the minimum y is attained by two vertices.
std::pair<LowerHull, LowerHull> split_hull(const LowerHull& hull);

/// x-gaps between consecutive vertices. Requires integer x coordinates.
OrderedPartition index_partition(const LowerHull& hull);

/// x-gaps between consecutive vertices as a partition of the x-extent.
std::vector<double> interval_partition(const LowerHull& hull);

/// gcd(|dx|, |dy|) for a face with integer displacement, 1 otherwise.
long long lattice_length(const HullFace& face);

/// lambda x G areas of the triangles cut between consecutive supporting lines
/// of a lower-left hull and the x-axis. The first line is the vertical line
/// through the top vertex. Empty when the hull has no face. Stops at the
/// first triangle reaching past `x_limit` on the x-axis.
std::vector<double> triangle_areas(const LowerHull& plus_hull,
                                   const AtomDistribution& dist,
                                   double x_limit = std::numeric_limits<double>::infinity());

/// Indices of the strict running minima of `ys` scanned from the left and
/// from the right, merged in increasing order. Every vertex of the lower hull
/// of (x_i, ys[i]) with increasing x_i is among them, and the selection is
/// unchanged by any increasing transform of ys.
std::vector<std::size_t> hull_candidate_indices(std::span<const double> ys);

}  // namespace tropstat
