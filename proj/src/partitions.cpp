#include "tropstat/partitions.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tropstat/numeric.hpp"

namespace tropstat {

using boost::multiprecision::cpp_int;

namespace {

cpp_int choose2(int m) { return cpp_int(m) * (m - 1) / 2; }

cpp_int factorial(int m) {
  cpp_int r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

void append_compositions(int remaining, OrderedPartition& prefix,
                         std::vector<OrderedPartition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = remaining; first >= 1; --first) {
    prefix.push_back(first);
    append_compositions(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

// Beta(a,2) CDF (a+1) b^a - a b^{a+1}.
double beta_a2_cdf(double a, double b) {
  if (b <= 0.0) return 0.0;
  if (b >= 1.0) return 1.0;
  const double ba = std::pow(b, a);
  return (a + 1.0) * ba - a * ba * b;
}

}  // namespace

std::vector<OrderedPartition> compositions(int n) {
  if (n < 1) throw std::invalid_argument("compositions: n must be >= 1");
  std::vector<OrderedPartition> out;
  OrderedPartition prefix;
  append_compositions(n, prefix, out);
  return out;
}

Rational exact_pn(std::span<const int> composition) {
  if (composition.empty()) throw std::invalid_argument("exact_pn: empty composition");
  int n = 0;
  for (int x : composition) {
    if (x < 1) throw std::invalid_argument("exact_pn: parts must be positive");
    n += x;
  }
  Rational p = 1;
  int s = 0;
  for (int x : composition) {
    p *= Rational(cpp_int(x), choose2(n - s + 1));
    s += x;
  }
  return p;
}

std::vector<Rational> exact_pkn_row(int n) {
  if (n < 0) throw std::invalid_argument("exact_pkn: n must be >= 0");
  // Scaled by D_m = prod_{i<=m} binom(i+1,2) the recursion stays in the
  // integers: q_k^m = m A_m - B_m with
  //   A_m = sum_{j<m} q_{k-1}^j D_{m-1}/D_j,  B_m = sum_{j<m} j q_{k-1}^j D_{m-1}/D_j,
  // both updated in O(1) big-integer steps per m.
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<cpp_int> prev(size, 0), cur(size, 0);
  prev[0] = 1;
  std::vector<Rational> row(size, Rational(0));
  cpp_int d_n = 1;
  for (int m = 1; m <= n; ++m) d_n *= choose2(m + 1);
  if (n == 0) row[0] = 1;
  for (int k = 1; k <= n; ++k) {
    cpp_int a = 0, b = 0;
    cur[0] = 0;
    for (int m = 1; m <= n; ++m) {
      const auto j = static_cast<std::size_t>(m - 1);
      a = a * choose2(m) + prev[j];
      b = b * choose2(m) + cpp_int(m - 1) * prev[j];
      cur[static_cast<std::size_t>(m)] = cpp_int(m) * a - b;
    }
    row[static_cast<std::size_t>(k)] = Rational(cur[size - 1], d_n);
    std::swap(prev, cur);
  }
  return row;
}

Rational exact_pkn(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("exact_pkn: need 1 <= k <= n");
  return exact_pkn_row(n)[static_cast<std::size_t>(k)];
}

Rational polya_pmf(int white, int black, int steps, int x) {
  if (white < 1 || black < 1 || steps < 0) {
    throw std::invalid_argument("polya_pmf: need white, black >= 1 and steps >= 0");
  }
  if (x < 0 || x > steps) return Rational(0);
  const cpp_int binom = factorial(steps) / (factorial(x) * factorial(steps - x));
  const cpp_int num = binom * factorial(white + x - 1) * factorial(black + steps - x - 1) *
                      factorial(white + black - 1);
  const cpp_int den = factorial(white - 1) * factorial(black - 1) *
                      factorial(white + black + steps - 1);
  return Rational(num, den);
}

OrderedPartition crp_sample(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("crp_sample: n must be >= 1");
  OrderedPartition tables{1};
  for (int seated = 1; seated < n; ++seated) {
    // Table i is tried in order with probability (x_i + 1) / (seated - s_i + 2).
    int before = 0;
    bool joined = false;
    for (auto& x : tables) {
      const double p = static_cast<double>(x + 1) / static_cast<double>(seated - before + 2);
      if (rng.uniform() < p) {
        ++x;
        joined = true;
        break;
      }
      before += x;
    }
    if (!joined) tables.push_back(1);
  }
  return tables;
}

double beta2a_quantile(double a, double u) {
  if (!(a > 0.0)) throw std::invalid_argument("beta2a_quantile: a must be positive");
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("beta2a_quantile: u outside [0,1]");
  if (a == 1.0) return std::sqrt(u);
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  // Beta(2,a) CDF is 1 - I(1-x) with I the Beta(a,2) CDF.
  auto f = [&](double x) { return 1.0 - beta_a2_cdf(a, 1.0 - x) - u; };
  return numeric::bracketed_root(f, 0.0, 1.0, 44);
}

StickBreaking::StickBreaking(double a) : a_(a) {
  if (!(a > 0.0)) throw std::invalid_argument("StickBreaking: a must be positive");
}

StickBreaking StickBreaking::from_fractions(std::vector<double> fractions) {
  StickBreaking s(1.0);
  s.fixed_ = true;
  for (double b : fractions) {
    if (!(b > 0.0 && b <= 1.0)) throw std::invalid_argument("stick fractions must lie in (0,1]");
    s.push_fraction(b);
  }
  return s;
}

void StickBreaking::push_fraction(double b) {
  fractions_.push_back(b);
  sticks_.push_back(b * residual_);
  residual_ *= (1.0 - b);
}

void StickBreaking::extend(Rng& rng) {
  if (fixed_) throw std::out_of_range("StickBreaking: fixed stick sequence exhausted");
  push_fraction(beta2a_quantile(a_, rng.uniform()));
}

void StickBreaking::extend_to(std::size_t m, Rng& rng) {
  while (sticks_.size() < m) extend(rng);
}

StickBreaking stick_sample(int m, Rng& rng, double a) {
  if (m < 1) throw std::invalid_argument("stick_sample: m must be >= 1");
  StickBreaking s(a);
  s.extend_to(static_cast<std::size_t>(m), rng);
  return s;
}

Estimate eppf(std::span<const int> composition, std::size_t trials, Rng& rng) {
  if (composition.empty()) throw std::invalid_argument("eppf: empty composition");
  for (int x : composition) {
    if (x < 1) throw std::invalid_argument("eppf: parts must be positive");
  }
  if (trials < 2) throw std::invalid_argument("eppf: need at least two trials");
  const std::size_t m = composition.size();
  // Set partitions of [n] whose blocks, in order of appearance, have these
  // sizes: each block holds its first free element plus x_i - 1 of the rest.
  int remaining = 0;
  for (int x : composition) remaining += x;
  double arrangements = 1.0;
  for (int x : composition) {
    arrangements *= std::round(std::exp(std::lgamma(remaining) - std::lgamma(x) - std::lgamma(remaining - x + 1)));
    remaining -= x;
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const StickBreaking s = stick_sample(static_cast<int>(m), rng);
    double value = 1.0;
    double used = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double p = s.sticks()[i];
      value *= std::pow(p, composition[i] - 1);
      used += p;
      if (i + 1 < m) value *= (1.0 - used);
    }
    value *= arrangements;
    sum += value;
    sum_sq += value * value;
  }
  const double nt = static_cast<double>(trials);
  const double mean = sum / nt;
  const double var = std::max(0.0, (sum_sq - nt * mean * mean) / (nt - 1.0));
  return {mean, std::sqrt(var / nt)};
}

OrderedPartition sieve_sample(int n, StickBreaking& sticks, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sieve_sample: n must be >= 1");
  OrderedPartition tables{1};
  if (sticks.size() < 1) sticks.extend(rng);
  for (int c = 1; c < n; ++c) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    bool joined = false;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      cumulative += sticks.sticks()[i];
      if (u < cumulative) {
        ++tables[i];
        joined = true;
        break;
      }
    }
    if (!joined) {
      tables.push_back(1);
      if (sticks.size() < tables.size()) sticks.extend(rng);
    }
  }
  return tables;
}

}  // namespace tropstat
