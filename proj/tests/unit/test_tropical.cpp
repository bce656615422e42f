#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "tropstat/tropical.hpp"

using namespace tropstat;

namespace {

const TropicalPolynomial kExample({5, 5, 2, 1, 0});

// Indices attaining the minimum of C_i + i x within tol.
std::vector<std::size_t> argmins(const TropicalPolynomial& p, double x, double tol) {
  const double m = p(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (p.coefficients()[i] + static_cast<double>(i) * x <= m + tol) out.push_back(i);
  }
  return out;
}

TropicalPolynomial random_fixture(Rng& rng, std::size_t degree) {
  std::vector<double> c(degree + 1);
  for (auto& v : c) v = 10.0 * rng.uniform();
  return TropicalPolynomial(c);
}

}  // namespace

TEST(Tropical, Evaluate) {
  EXPECT_EQ(evaluate(kExample, 0.0), 0.0);
  EXPECT_EQ(evaluate(kExample, 1.0), 4.0);
  EXPECT_EQ(evaluate(TropicalPolynomial({2.5}), -7.0), 2.5);
}

TEST(Tropical, WorkedExampleZeros) {
  const auto z = zeros(kExample);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[0], (TropicalZero{1.0, 2}));
  EXPECT_EQ(z[1], (TropicalZero{1.5, 1}));
  EXPECT_EQ(zero_count(kExample, ZeroCounting::with_multiplicity), 3u);
  EXPECT_EQ(zero_count(kExample, ZeroCounting::distinct), 2u);
}

TEST(Tropical, SmallFixtures) {
  EXPECT_EQ(zeros(TropicalPolynomial({0, 0})), (std::vector<TropicalZero>{{0.0, 1}}));
  EXPECT_EQ(zeros(TropicalPolynomial({0, 1, 4})), (std::vector<TropicalZero>{{-3.0, 1}, {-1.0, 1}}));
  EXPECT_TRUE(zeros(TropicalPolynomial({3})).empty());
  EXPECT_EQ(zero_count(TropicalPolynomial({3})), 0u);
  EXPECT_FALSE(std::signbit(zeros(TropicalPolynomial({0, 0}))[0].location));
}

TEST(Tropical, RejectsBadCoefficients) {
  EXPECT_THROW(TropicalPolynomial({}), std::invalid_argument);
  EXPECT_THROW(TropicalPolynomial({1.0, INFINITY}), std::invalid_argument);
}

TEST(Tropical, ZerosAreTiesOfTheMinimum) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_fixture(rng, 1 + trial % 20);
    const auto z = zeros(p);
    for (std::size_t k = 0; k < z.size(); ++k) {
      EXPECT_GE(argmins(p, z[k].location, 1e-9).size(), 2u);
      if (k > 0) {
        EXPECT_GT(z[k].location, z[k - 1].location);
        EXPECT_EQ(argmins(p, 0.5 * (z[k].location + z[k - 1].location), 1e-9).size(), 1u);
      }
    }
  }
}

TEST(Tropical, ZerosMatchGridScanOfArgmin) {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_fixture(rng, 2 + trial % 19);
    const auto z = zeros(p);
    if (z.empty()) continue;
    const double step = 1e-4;
    const double lo = z.front().location - 1.0, hi = z.back().location + 1.0;
    std::vector<double> changes;
    auto best = [&](double x) {
      std::size_t arg = 0;
      double m = INFINITY;
      for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const double v = p.coefficients()[i] + static_cast<double>(i) * x;
        if (v < m) m = v, arg = i;
      }
      return arg;
    };
    std::size_t prev = best(lo);
    for (double x = lo + step; x <= hi; x += step) {
      const std::size_t cur = best(x);
      if (cur != prev) changes.push_back(x - 0.5 * step);
      prev = cur;
    }
    ASSERT_EQ(changes.size(), z.size());
    for (std::size_t k = 0; k < z.size(); ++k) EXPECT_NEAR(changes[k], z[k].location, step);
  }
}

TEST(Tropical, TranslationInvariance) {
  Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_fixture(rng, 12);
    const auto z = zeros(p);
    std::vector<double> shifted(p.coefficients().begin(), p.coefficients().end());
    for (auto& c : shifted) c += 3.25;
    const auto z1 = zeros(TropicalPolynomial(shifted));
    ASSERT_EQ(z1.size(), z.size());
    for (std::size_t k = 0; k < z.size(); ++k) EXPECT_NEAR(z1[k].location, z[k].location, 1e-12);

    std::vector<double> tilted(p.coefficients().begin(), p.coefficients().end());
    const double c = 0.75;
    for (std::size_t i = 0; i < tilted.size(); ++i) tilted[i] += c * static_cast<double>(i);
    const auto z2 = zeros(TropicalPolynomial(tilted));
    ASSERT_EQ(z2.size(), z.size());
    for (std::size_t k = 0; k < z.size(); ++k) EXPECT_NEAR(z2[k].location, z[k].location - c, 1e-12);
  }
}

TEST(Tropical, ZeroCountIsHullFaceCount) {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_fixture(rng, 30);
    const auto pts = p.newton_points();
    EXPECT_EQ(zero_count(p), face_count(lower_hull(pts)));
    EXPECT_EQ(zero_count(p, ZeroCounting::with_multiplicity),
              face_count(lower_hull(pts, CollinearMode::split)));
  }
}

TEST(Tropical, RandomPolynomialShapeAndDeterminism) {
  const auto d = AtomDistribution::exponential();
  Rng r0(1);
  const auto p0 = random_polynomial(d, 0, r0);
  EXPECT_EQ(p0.degree(), 0u);
  EXPECT_EQ(zero_count(p0), 0u);
  Rng a(77), b(77);
  const auto pa = random_polynomial(d, 50, a);
  const auto pb = random_polynomial(d, 50, b);
  EXPECT_TRUE(std::equal(pa.coefficients().begin(), pa.coefficients().end(), pb.coefficients().begin()));
}

TEST(Tropical, FastCountMatchesFullPolynomial) {
  for (const auto& d : {AtomDistribution::exponential(), AtomDistribution::gamma(2.0),
                        AtomDistribution::uniform(), AtomDistribution::discrete_uniform(5)}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t n = 1 + seed * 7;
      Rng a(seed), b(seed);
      EXPECT_EQ(sample_zero_count(d, n, a), zero_count(random_polynomial(d, n, b))) << d.name();
    }
  }
}

TEST(Tropical, MeanZeroCountGrowsLikeLog) {
  const auto d = AtomDistribution::exponential();
  const std::size_t n = 10000;
  double sum = 0.0;
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) {
    Rng rng(derive_seed(40, 0, k));
    sum += static_cast<double>(sample_zero_count(d, n, rng));
  }
  EXPECT_NEAR(sum / trials, 4.0 / 3.0 * std::log(double(n)), 2.0);
}
