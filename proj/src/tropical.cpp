#include "tropstat/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tropstat {

TropicalPolynomial::TropicalPolynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("tropical polynomial needs at least one coefficient");
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw std::invalid_argument("tropical coefficients must be finite");
  }
}

double TropicalPolynomial::operator()(double x) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    best = std::min(best, coefficients_[i] + static_cast<double>(i) * x);
  }
  return best;
}

std::vector<PlanarPoint> TropicalPolynomial::newton_points() const {
  std::vector<PlanarPoint> pts(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    pts[i] = {static_cast<double>(i), coefficients_[i]};
  }
  return pts;
}

std::vector<TropicalZero> zeros(const TropicalPolynomial& poly) {
  const auto pts = poly.newton_points();
  const LowerHull hull = lower_hull(pts, CollinearMode::strict);
  std::vector<TropicalZero> out;
  out.reserve(hull.faces.size());
  // Slopes increase along the hull, so locations (= -slope) come out
  // descending; walk the faces backwards.
  for (auto it = hull.faces.rbegin(); it != hull.faces.rend(); ++it) {
    // + 0.0 folds a negative zero into +0.
    out.push_back({-it->dy / it->dx + 0.0, lattice_length(*it)});
  }
  return out;
}

std::size_t zero_count(const TropicalPolynomial& poly, ZeroCounting counting) {
  const auto z = zeros(poly);
  if (counting == ZeroCounting::distinct) return z.size();
  std::size_t total = 0;
  for (const auto& zero : z) total += static_cast<std::size_t>(zero.multiplicity);
  return total;
}

TropicalPolynomial random_polynomial(const AtomDistribution& dist, std::size_t n, Rng& rng) {
  std::vector<double> c(n + 1);
  for (auto& v : c) v = dist.sample(rng);
  return TropicalPolynomial(std::move(c));
}

std::size_t sample_zero_count(const AtomDistribution& dist, std::size_t n, Rng& rng) {
  // The quantile is nondecreasing, so running minima of the uniforms
  // contain the running minima of the coefficients.
  thread_local std::vector<double> uniforms;
  uniforms.resize(n + 1);
  for (auto& u : uniforms) u = rng.uniform();
  const auto idx = hull_candidate_indices(uniforms);
  std::vector<PlanarPoint> pts;
  pts.reserve(idx.size());
  for (std::size_t i : idx) pts.push_back({static_cast<double>(i), dist.quantile(uniforms[i])});
  return lower_hull(pts, CollinearMode::strict).face_count();
}

}  // namespace tropstat
