#pragma once

#include <string>
#include <string_view>

#include "tropstat/random.hpp"

namespace tropstat {

enum class AtomKind { exponential, uniform, gamma, weibull, discrete };

/// Law F of the random coefficients, supported on (0, inf) and behaving
/// like C * y^a near zero. Immutable once built; share freely across threads.
///
/// The discrete uniform law on {1..k} is the only non-continuous member. It
/// exists for checks that the central limit behaviour needs continuity, and
/// reports a() == 0.
class AtomDistribution {
 public:
  static AtomDistribution exponential();
  static AtomDistribution uniform();
  static AtomDistribution gamma(double shape);
  static AtomDistribution weibull(double shape);
  static AtomDistribution discrete_uniform(int k);

  /// Parses `exp`, `unif`, `gamma:<a>`, `weibull:<k>` or `discrete:<k>`.
  static AtomDistribution parse(std::string_view spec);

  AtomKind kind() const noexcept { return kind_; }
  bool continuous() const noexcept { return kind_ != AtomKind::discrete; }
  /// Tail exponent a in F(y) ~ C y^a.
  double a() const noexcept { return a_; }
  /// Tail constant C in F(y) ~ C y^a.
  double tail_constant() const noexcept { return c_; }
  double shape() const noexcept { return shape_; }
  std::string name() const;

  double cdf(double y) const;
  /// 1 - F(y), accurate where F(y) is close to one.
  double survival(double y) const;
  /// Generalized inverse inf{y : F(y) >= u}, for u in [0,1).
  double quantile(double u) const;
  /// Inverse-CDF draw; consumes exactly one uniform.
  double sample(Rng& rng) const { return quantile(rng.uniform()); }

  /// G([0,x]) = -ln(1 - F(x)). Infinite once F(x) reaches one.
  double g_mass(double x) const;
  /// x with G([0,x]) = m, i.e. F^{-1}(1 - e^{-m}).
  double g_inverse(double m) const;
  /// Height G^{-1}(1) of the strip that carries unit G-mass.
  double unit_height() const { return g_inverse(1.0); }

 private:
  AtomDistribution(AtomKind kind, double shape, double a, double c)
      : kind_(kind), shape_(shape), a_(a), c_(c) {}

  double quantile_from_survival(double q) const;

  AtomKind kind_;
  double shape_;
  double a_;
  double c_;
};

/// The intensity measure G attached to an atom distribution.
class GMeasure {
 public:
  explicit GMeasure(const AtomDistribution& dist) : dist_(&dist) {}
  double operator()(double x) const { return dist_->g_mass(x); }
  double inverse(double m) const { return dist_->g_inverse(m); }
  const AtomDistribution& atoms() const { return *dist_; }

 private:
  const AtomDistribution* dist_;
};

}  // namespace tropstat
