#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropstat/hull.hpp"
#include "tropstat/random.hpp"

namespace tropstat {

using Rational = boost::multiprecision::cpp_rational;

/// All compositions of n in lexicographic order of their part sequences
/// read from the left, largest first part first: (n), (n-1,1), ...
std::vector<OrderedPartition> compositions(int n);

/// Probability that the hull of (i, C_i), C_0 = 0 and C_i i.i.d.
/// exponential(1), cuts {0..n} into `composition`:
///   prod_i x_i / binom(n - s_i + 1, 2),  s_i = x_1 + ... + x_{i-1}.
Rational exact_pn(std::span<const int> composition);

/// Probability that that partition has k parts, from the recursion
///   p_k^n = binom(n+1,2)^{-1} sum_{j=k-1}^{n-1} (n-j) p_{k-1}^j.
Rational exact_pkn(int n, int k);

/// p_0^n .. p_n^n in one pass.
std::vector<Rational> exact_pkn_row(int n);

/// Law of the number of white balls added in `steps` draws of a Polya urn
/// started with `white` white and `black` black balls.
Rational polya_pmf(int white, int black, int steps, int x);

/// One draw from the Beta(2,1) Chinese restaurant process with n customers.
OrderedPartition crp_sample(int n, Rng& rng);

/// Stick lengths P_i = B_i prod_{j<i} (1 - B_j) with B_i i.i.d. Beta(2, a).
/// Grows on demand; the residual 1 - sum P_i is tracked in product form.
class StickBreaking {
 public:
  explicit StickBreaking(double a = 1.0);
  /// Fixed fractions B_1..B_m, for conditional experiments.
  static StickBreaking from_fractions(std::vector<double> fractions);

  double a() const noexcept { return a_; }
  std::size_t size() const noexcept { return sticks_.size(); }
  const std::vector<double>& fractions() const noexcept { return fractions_; }
  const std::vector<double>& sticks() const noexcept { return sticks_; }
  /// 1 - (P_1 + ... + P_m) for the current prefix.
  double residual() const noexcept { return residual_; }

  /// Appends one stick; throws for a fixed sequence that ran out.
  void extend(Rng& rng);
  void extend_to(std::size_t m, Rng& rng);

 private:
  void push_fraction(double b);

  double a_;
  bool fixed_ = false;
  std::vector<double> fractions_;
  std::vector<double> sticks_;
  double residual_ = 1.0;
};

/// Beta(2, a) draw by inverting its CDF 1 - (a+1)(1-x)^a + a(1-x)^{a+1}.
double beta2a_quantile(double a, double u);

/// First m sticks of the Beta(2, a) stick-breaking sequence.
StickBreaking stick_sample(int m, Rng& rng, double a = 1.0);

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

/// Monte Carlo estimate of the composition probability
///   N(x) E[ prod_i P_i^{x_i - 1} prod_{i<m} (1 - P_1 - ... - P_i) ]
/// over Beta(2,1) sticks. The expectation is the chance of one set partition
/// of [n]; N(x) = prod_i binom(n - s_i - 1, x_i - 1) counts those with these
/// block sizes in order of appearance.
Estimate eppf(std::span<const int> composition, std::size_t trials, Rng& rng);

/// Seats n customers given the sticks: a customer joins occupied table i with
/// probability P_i and opens the next table otherwise. Sticks are extended
/// from `rng` when a new table is opened.
OrderedPartition sieve_sample(int n, StickBreaking& sticks, Rng& rng);

}  // namespace tropstat
