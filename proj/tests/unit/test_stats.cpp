#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "tropstat/experiments.hpp"
#include "tropstat/hull.hpp"
#include "tropstat/partitions.hpp"
#include "tropstat/renewal.hpp"
#include "tropstat/stats.hpp"

using namespace tropstat;

TEST(Stats, SummarizeBasics) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto s = summarize(v, 10.0, 1.0, 5);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.variance, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.stderr_, std::sqrt(5.0 / 3.0 / 4.0));
  EXPECT_EQ(s.trials, 4u);
  EXPECT_EQ(s.seed, 5u);
  const std::vector<double> flat{2, 2, 2};
  EXPECT_EQ(summarize(flat).variance, 0.0);
  EXPECT_THROW(summarize(std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Stats, VarianceStderrMatchesGaussianTheory) {
  // For normal data SE(s^2) is about s^2 sqrt(2/(N-1)).
  std::mt19937_64 eng(1);
  std::normal_distribution<double> norm(0.0, 3.0);
  std::vector<double> v(200000);
  for (auto& x : v) x = norm(eng);
  const auto s = summarize(v);
  EXPECT_NEAR(s.variance_stderr, 9.0 * std::sqrt(2.0 / (v.size() - 1)), 0.002);
}

TEST(Stats, StandardizeExamples) {
  const double ln_n = 3.0, n = std::exp(ln_n);
  const std::vector<double> at_mean{4.0 / 3.0 * ln_n};
  EXPECT_NEAR(standardize(at_mean, n, 1.0, VarianceChoice::printed)[0], 0.0, 1e-14);
  const std::vector<double> one_sd{4.0 + std::sqrt(20.0 / 27.0 * 3.0)};
  EXPECT_NEAR(standardize(one_sd, n, 1.0, VarianceChoice::printed)[0], 1.0, 1e-14);
  EXPECT_NEAR(standardize(one_sd, n, 1.0, VarianceChoice::renewal)[0], 1.0, 1e-14);
  EXPECT_THROW(standardize(one_sd, 2.0, 1.0, VarianceChoice::printed), std::invalid_argument);
  // a = 2: the two variance choices differ by a factor two.
  const auto c = constants(2.0);
  const std::vector<double> x{c.mean_coeff * ln_n + std::sqrt(c.var_coeff_renewal * ln_n)};
  EXPECT_NEAR(standardize(x, n, 2.0, VarianceChoice::renewal)[0], 1.0, 1e-14);
  EXPECT_NEAR(standardize(x, n, 2.0, VarianceChoice::printed)[0], std::sqrt(0.5), 1e-14);
}

TEST(Stats, StandardizeScaleConsistency) {
  const auto c = constants(1.0);
  const std::vector<double> zs{-1.5, 0.0, 0.25, 2.0};
  for (double n : {10.0, 1e3, 1e6}) {
    std::vector<double> small, big;
    for (double z : zs) {
      small.push_back(c.mean_coeff * std::log(n) + z * std::sqrt(c.var_coeff_printed * std::log(n)));
      big.push_back(c.mean_coeff * std::log(2 * n) + z * std::sqrt(c.var_coeff_printed * std::log(2 * n)));
    }
    const auto s = standardize(small, n, 1.0, VarianceChoice::printed);
    const auto b = standardize(big, 2 * n, 1.0, VarianceChoice::printed);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      EXPECT_NEAR(s[i], zs[i], 1e-12);
      EXPECT_NEAR(b[i], zs[i], 1e-12);
    }
    // z = 0 counts move by meanCoeff ln 2 when n doubles.
    EXPECT_NEAR(big[1] - small[1], c.mean_coeff * std::log(2.0), 1e-12);
  }
}

TEST(Stats, StandardizedZeroCountsAreNearStandard) {
  const auto d = AtomDistribution::exponential();
  const auto counts = zn_trials(d, 1000000, 10000, 21, 0);
  const auto z = standardize(counts, 1e6, 1.0, VarianceChoice::printed);
  const auto s = summarize(z);
  EXPECT_LT(std::fabs(s.mean), 0.2);
  EXPECT_LT(std::fabs(s.variance - 1.0), 0.2);
}

TEST(Stats, KolmogorovTailValues) {
  EXPECT_NEAR(kolmogorov_tail(1.0), 0.26999967, 1e-7);
  EXPECT_NEAR(kolmogorov_tail(0.5), 0.96394524, 1e-7);
  EXPECT_NEAR(kolmogorov_tail(1.3580986), 0.05, 1e-6);
  EXPECT_NEAR(kolmogorov_tail(2.0), 6.7092525e-4, 1e-9);
  EXPECT_EQ(kolmogorov_tail(0.0), 1.0);
  EXPECT_NEAR(kolmogorov_tail(0.2), 1.0, 1e-12);
  double prev = 1.0;
  for (double l = 0.05; l < 3.0; l += 0.05) {
    const double q = kolmogorov_tail(l);
    EXPECT_LE(q, prev + 1e-15);
    prev = q;
  }
}

TEST(Stats, KsNormalNullAndPower) {
  std::mt19937_64 eng(2);
  std::normal_distribution<double> norm;
  std::uniform_real_distribution<double> unif;
  std::vector<double> z(100000), u(100000);
  for (auto& v : z) v = norm(eng);
  for (auto& v : u) v = unif(eng);
  EXPECT_GT(ks_normal(z).p_value, 1e-3);
  EXPECT_LT(ks_normal(u).p_value, 1e-6);
  EXPECT_THROW(ks_normal(std::vector<double>(49, 0.0)), std::invalid_argument);
}

TEST(Stats, KsStatisticExact) {
  // Two points against U(0,1): D = max over the step corners.
  const std::vector<double> v{0.1, 0.2};
  EXPECT_NEAR(ks_test(v, [](double x) { return x; }).statistic, 0.8, 1e-15);
}

TEST(Stats, NormalCdf) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.96), 0.9750021, 1e-7);
  EXPECT_NEAR(normal_cdf(-1.0), 0.15865525, 1e-8);
}

TEST(Stats, ChiSquareTailAgainstIncompleteGamma) {
  for (double dof : {3.0, 5.0, 10.0, 30.0, 100.0}) {
    for (double q : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      const double x = q * dof;
      EXPECT_NEAR(chi_square_tail(x, dof), boost::math::gamma_q(dof / 2, x / 2), 0.01) << dof << " " << x;
    }
  }
  EXPECT_EQ(chi_square_tail(0.0, 4.0), 1.0);
  EXPECT_THROW(chi_square_tail(1.0, 0.0), std::invalid_argument);
}

TEST(Stats, ChiSquareExamples) {
  const std::vector<double> probs{0.5, 0.25, 0.25};
  const std::vector<double> exact{200, 100, 100};
  const auto r = chi_square(exact, probs);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_THROW(chi_square(exact, std::vector<double>{0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(chi_square(exact, std::vector<double>{0.5, 0.5, 0.0}), std::invalid_argument);
}

TEST(Stats, ChiSquareCrpAgainstExactAndSwappedTables) {
  const int n = 5;
  const auto comps = compositions(n);
  std::map<OrderedPartition, std::size_t> index;
  for (std::size_t i = 0; i < comps.size(); ++i) index[comps[i]] = i;
  std::vector<double> observed(comps.size(), 0.0), probs;
  for (const auto& c : comps) probs.push_back(static_cast<double>(exact_pn(c)));
  Rng rng(3);
  for (int s = 0; s < 100000; ++s) observed[index.at(crp_sample(n, rng))] += 1;
  EXPECT_GT(chi_square(observed, probs).p_value, 1e-3);
  auto swapped = probs;
  std::swap(swapped.front(), swapped.back());
  EXPECT_LT(chi_square(observed, swapped).p_value, 1e-6);
}

TEST(Stats, SlopeOfExactLine) {
  const std::vector<double> x{0, 1, 2, 5}, y{1, 3, 5, 11};
  const auto f = slope_regression(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.slope_stderr, 0.0, 1e-12);
  const auto g = slope_regression(x, y, std::vector<double>{1, 1, 1, 1});
  EXPECT_NEAR(g.slope, 2.0, 1e-14);
  // Unit errors: Var(slope) = 1 / Sxx.
  EXPECT_NEAR(g.slope_stderr, 1.0 / std::sqrt(14.0), 1e-14);
  EXPECT_THROW(slope_regression(std::vector<double>{1, 1, 2}, std::vector<double>{0, 1, 2}),
               std::invalid_argument);
  EXPECT_THROW(slope_regression(x, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST(Stats, OneSidedMeanSlope) {
  // C_0 = 0 pins the minimum to the left end, so every face lies on one side.
  const auto d = AtomDistribution::exponential();
  std::vector<double> xs, means;
  for (double n : {1e3, 1e4, 1e5, 1e6}) {
    double sum = 0.0;
    const int trials = 1000;
    std::vector<double> u(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < trials; ++k) {
      Rng rng(derive_seed(22, static_cast<std::uint64_t>(n), k));
      u[0] = 0.0;
      for (std::size_t i = 1; i < u.size(); ++i) u[i] = rng.uniform();
      std::vector<PlanarPoint> pts;
      for (auto i : hull_candidate_indices(u)) pts.push_back({double(i), i == 0 ? 0.0 : d.quantile(u[i])});
      sum += double(face_count(lower_hull(pts)));
    }
    xs.push_back(std::log(n));
    means.push_back(sum / trials);
  }
  EXPECT_NEAR(slope_regression(xs, means).slope, 2.0 / 3.0, 0.05);
}
