#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tropstat {

struct TrialSummary {
  double n = 0.0;
  double a = 0.0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased
  double stderr_ = 0.0;   ///< sqrt(variance / trials)
  /// Standard error of `variance`, from the fourth central moment.
  double variance_stderr = 0.0;
};

/// Needs at least two values.
TrialSummary summarize(std::span<const double> values, double n = 0.0, double a = 0.0,
                       std::uint64_t seed = 0);

enum class VarianceChoice { printed, renewal };

/// (z - meanCoeff ln n) / sqrt(varCoeff ln n) with the constants for a.
std::vector<double> standardize(std::span<const double> counts, double n, double a,
                                VarianceChoice choice);

struct TestResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_tail(double lambda);

/// One-sample KS test against a continuous CDF. p from the asymptotic
/// series with the Stephens small-sample adjustment.
TestResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);

/// KS against the standard normal; needs at least 50 samples.
TestResult ks_normal(std::span<const double> zs);

double normal_cdf(double z);

/// Chi-square upper tail by the Wilson-Hilferty cube-root approximation.
double chi_square_tail(double statistic, double dof);

/// Pearson goodness of fit, k - 1 degrees of freedom. Categories with zero
/// expected probability are rejected.
TestResult chi_square(std::span<const double> observed, std::span<const double> expected_probs);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

/// Least squares of y on x; slope stderr from the residuals. Needs three
/// distinct x.
SlopeFit slope_regression(std::span<const double> xs, std::span<const double> ys);

/// Same fit; slope stderr propagated from known per-point errors of y.
SlopeFit slope_regression(std::span<const double> xs, std::span<const double> ys,
                          std::span<const double> y_stderr);

}  // namespace tropstat
