#include "tropstat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tropstat/renewal.hpp"

namespace tropstat {

TrialSummary summarize(std::span<const double> values, double n, double a, std::uint64_t seed) {
  if (values.size() < 2) throw std::invalid_argument("summarize: need at least two values");
  TrialSummary s;
  s.n = n;
  s.a = a;
  s.seed = seed;
  s.trials = values.size();
  const double m = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / m;
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = (v - s.mean) * (v - s.mean);
    m2 += d;
    m4 += d * d;
  }
  s.variance = m2 / (m - 1.0);
  s.stderr_ = std::sqrt(s.variance / m);
  const double mu2 = m2 / m;
  const double mu4 = m4 / m;
  const double var_of_var = (mu4 - mu2 * mu2 * (m - 3.0) / (m - 1.0)) / m;
  s.variance_stderr = std::sqrt(std::max(0.0, var_of_var));
  return s;
}

std::vector<double> standardize(std::span<const double> counts, double n, double a,
                                VarianceChoice choice) {
  if (!(n >= 3.0)) throw std::invalid_argument("standardize: n must be >= 3");
  const RenewalConstants c = constants(a);
  const double ln = std::log(n);
  const double centre = c.mean_coeff * ln;
  const double coeff = choice == VarianceChoice::printed ? c.var_coeff_printed : c.var_coeff_renewal;
  const double scale = std::sqrt(coeff * ln);
  std::vector<double> z;
  z.reserve(counts.size());
  for (double v : counts) z.push_back((v - centre) / scale);
  return z;
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi-transformed series for the CDF converges fast for small lambda.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double cdf = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double j = 2.0 * k - 1.0;
      const double term = std::exp(-j * j * pi2 / (8.0 * lambda * lambda));
      cdf += term;
      if (term < 1e-300) break;
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double tail = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    tail += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(tail, 0.0, 1.0);
}

TestResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_test: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
  }
  const double root = std::sqrt(m);
  return {d, kolmogorov_tail((root + 0.12 + 0.11 / root) * d)};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

TestResult ks_normal(std::span<const double> zs) {
  if (zs.size() < 50) throw std::invalid_argument("ks_normal: need at least 50 samples");
  return ks_test(zs, normal_cdf);
}

double chi_square_tail(double statistic, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("chi_square_tail: dof must be positive");
  if (statistic <= 0.0) return 1.0;
  const double h = 2.0 / (9.0 * dof);
  const double z = (std::cbrt(statistic / dof) - (1.0 - h)) / std::sqrt(h);
  return 1.0 - normal_cdf(z);
}

TestResult chi_square(std::span<const double> observed, std::span<const double> expected_probs) {
  if (observed.size() != expected_probs.size()) {
    throw std::invalid_argument("chi_square: category counts differ");
  }
  if (observed.size() < 2) throw std::invalid_argument("chi_square: need two categories");
  double total = 0.0;
  for (double o : observed) total += o;
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected_probs[i] > 0.0)) {
      throw std::invalid_argument("chi_square: expected probabilities must be positive");
    }
    const double e = total * expected_probs[i];
    stat += (observed[i] - e) * (observed[i] - e) / e;
  }
  // Guard against rounding noise in exactly proportional inputs.
  if (stat < 1e-12 * total) stat = 0.0;
  return {stat, chi_square_tail(stat, static_cast<double>(observed.size() - 1))};
}

namespace {

struct Design {
  double x_mean = 0.0;
  double sxx = 0.0;
};

Design check_design(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("slope_regression: size mismatch");
  std::vector<double> distinct(xs.begin(), xs.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) throw std::invalid_argument("slope_regression: need three distinct x");
  Design d;
  for (double x : xs) d.x_mean += x;
  d.x_mean /= static_cast<double>(xs.size());
  for (double x : xs) d.sxx += (x - d.x_mean) * (x - d.x_mean);
  return d;
}

SlopeFit fit(std::span<const double> xs, std::span<const double> ys, const Design& d) {
  double y_mean = 0.0;
  for (double y : ys) y_mean += y;
  y_mean /= static_cast<double>(ys.size());
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - d.x_mean) * (ys[i] - y_mean);
  SlopeFit f;
  f.slope = sxy / d.sxx;
  f.intercept = y_mean - f.slope * d.x_mean;
  return f;
}

}  // namespace

SlopeFit slope_regression(std::span<const double> xs, std::span<const double> ys) {
  const Design d = check_design(xs, ys);
  SlopeFit f = fit(xs, ys, d);
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - f.intercept - f.slope * xs[i];
    rss += r * r;
  }
  f.slope_stderr = std::sqrt(rss / static_cast<double>(xs.size() - 2) / d.sxx);
  return f;
}

SlopeFit slope_regression(std::span<const double> xs, std::span<const double> ys,
                          std::span<const double> y_stderr) {
  const Design d = check_design(xs, ys);
  if (y_stderr.size() != xs.size()) throw std::invalid_argument("slope_regression: size mismatch");
  SlopeFit f = fit(xs, ys, d);
  double var = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double w = (xs[i] - d.x_mean) / d.sxx;
    var += w * w * y_stderr[i] * y_stderr[i];
  }
  f.slope_stderr = std::sqrt(var);
  return f;
}

}  // namespace tropstat
