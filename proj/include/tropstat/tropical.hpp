#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropstat/atoms.hpp"
#include "tropstat/hull.hpp"
#include "tropstat/random.hpp"

namespace tropstat {

/// min-plus polynomial x -> min_i (C_i + i x) with finite coefficients C_0..C_n.
class TropicalPolynomial {
 public:
  explicit TropicalPolynomial(std::vector<double> coefficients);

  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  std::span<const double> coefficients() const noexcept { return coefficients_; }

  double operator()(double x) const;

  /// The points (i, C_i) whose lower hull carries the zeros.
  std::vector<PlanarPoint> newton_points() const;

 private:
  std::vector<double> coefficients_;
};

struct TropicalZero {
  double location = 0.0;
  long long multiplicity = 1;
  friend bool operator==(const TropicalZero&, const TropicalZero&) = default;
};

enum class ZeroCounting { distinct, with_multiplicity };

inline double evaluate(const TropicalPolynomial& poly, double x) { return poly(x); }

/// Zeros in ascending order. The face between hull vertices (i, C_i) and
/// (j, C_j) gives the zero (C_i - C_j) / (j - i) whose multiplicity is the
/// lattice length of that face.
std::vector<TropicalZero> zeros(const TropicalPolynomial& poly);

std::size_t zero_count(const TropicalPolynomial& poly,
                       ZeroCounting counting = ZeroCounting::distinct);

/// n+1 i.i.d. coefficients from `dist`, one uniform per coefficient in index
/// order.
TropicalPolynomial random_polynomial(const AtomDistribution& dist, std::size_t n, Rng& rng);

/// Number of distinct zeros of random_polynomial(dist, n, rng), computed
/// from the same uniform stream but evaluating the quantile only at the
/// running minima that can be hull vertices.
std::size_t sample_zero_count(const AtomDistribution& dist, std::size_t n, Rng& rng);

}  // namespace tropstat
