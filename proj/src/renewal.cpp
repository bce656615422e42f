#include "tropstat/renewal.hpp"

#include <cmath>
#include <stdexcept>

#include "tropstat/numeric.hpp"

namespace tropstat {

double i0_cdf(double a, double b) {
  if (!(a > 0.0)) throw std::invalid_argument("i0_cdf: a must be positive");
  if (b <= 0.0) return 0.0;
  if (b >= 1.0) return 1.0;
  const double ba = std::pow(b, a);
  return (a + 1.0) * ba - a * ba * b;
}

double i0_quantile(double a, double u) {
  if (!(a > 0.0)) throw std::invalid_argument("i0_quantile: a must be positive");
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("i0_quantile: u outside [0,1]");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  if (a == 1.0) return u / (1.0 + std::sqrt(1.0 - u));  // 1 - sqrt(1-u)
  return numeric::bracketed_root([&](double b) { return i0_cdf(a, b) - u; }, 0.0, 1.0, 46);
}

JumpLaw::JumpLaw(const AtomDistribution& dist, double s, bool closed_form)
    : dist_(&dist), s_(s), a_(dist.a()) {
  if (!dist.continuous()) throw std::invalid_argument("JumpLaw: needs a continuous atom law");
  if (!(s >= 0.0) || !std::isfinite(s)) throw std::domain_error("JumpLaw: s must be >= 0");
  if (s == 0.0) {
    state_free_ = true;
    return;
  }
  if (closed_form && (dist.kind() == AtomKind::exponential || dist.kind() == AtomKind::weibull)) {
    a_ = dist.kind() == AtomKind::weibull ? dist.shape() : 1.0;
    state_free_ = true;
    return;
  }
  g_s_ = dist.g_mass(s);
  if (!std::isfinite(g_s_)) throw std::domain_error("JumpLaw: s beyond the support");
  norm_ = integral(1.0);
}

double JumpLaw::ratio(double t) const {
  if (t <= 0.0) return 0.0;
  return dist_->g_mass(s_ * t) / g_s_;
}

double JumpLaw::integral(double b) const {
  if (b <= 0.0) return 0.0;
  constexpr double tol = 1e-13;
  if (a_ < 1.0) {
    // t = tau^{1/a} removes the t^{a-1} behaviour of the integrand at 0.
    const double p = 1.0 / a_;
    return numeric::adaptive_simpson(
        [&](double tau) {
          if (tau <= 0.0) return 0.0;
          return ratio(std::pow(tau, p)) * p * std::pow(tau, p - 1.0);
        },
        0.0, std::pow(b, a_), tol);
  }
  return numeric::adaptive_simpson([&](double t) { return ratio(t); }, 0.0, b, tol);
}

double JumpLaw::cdf(double b) const {
  if (b <= 0.0) return 0.0;
  if (b >= 1.0) return 1.0;
  if (state_free_) return i0_cdf(a_, b);
  return ((1.0 - b) * ratio(b) + integral(b)) / norm_;
}

double JumpLaw::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("JumpLaw: u outside [0,1]");
  if (state_free_) return i0_quantile(a_, u);
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  return numeric::bracketed_root([&](double b) { return cdf(b) - u; }, 0.0, 1.0, 40);
}

double i_s_cdf(const AtomDistribution& dist, double s, double b) {
  return JumpLaw(dist, s, false).cdf(b);
}

double i_s_sample(const AtomDistribution& dist, double s, Rng& rng) {
  return JumpLaw(dist, s).quantile(rng.uniform());
}

std::size_t walk_count(const AtomDistribution& dist, double s0, double t, Rng& rng) {
  if (!(s0 > 0.0)) throw std::domain_error("walk_count: s0 must be positive");
  double position = -std::log(s0);
  std::size_t count = 0;
  while (position <= t) {
    ++count;
    position -= std::log(i_s_sample(dist, std::exp(-position), rng));
  }
  return count;
}

std::size_t renewal_count(double a, double t, double delay, Rng& rng) {
  if (!(a > 0.0)) throw std::invalid_argument("renewal_count: a must be positive");
  if (!(delay >= 0.0)) throw std::domain_error("renewal_count: delay must be >= 0");
  double position = delay;
  std::size_t count = 0;
  while (position <= t) {
    ++count;
    position -= std::log(i0_quantile(a, rng.uniform()));
  }
  return count;
}

CoupledCounts coupled_counts(const AtomDistribution& dist, double s0, double t, Rng& rng) {
  if (!(s0 > 0.0)) throw std::domain_error("coupled_counts: s0 must be positive");
  const double a = dist.a();
  double walk = -std::log(s0);
  double renewal = walk;
  CoupledCounts out;
  while (walk <= t || renewal <= t) {
    const double u = rng.uniform();
    if (walk <= t) {
      ++out.walk;
      walk -= std::log(JumpLaw(dist, std::exp(-walk)).quantile(u));
    }
    if (renewal <= t) {
      ++out.renewal;
      renewal -= std::log(i0_quantile(a, u));
    }
  }
  return out;
}

RenewalConstants constants(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("constants: a must be positive");
  RenewalConstants c;
  c.a = a;
  c.mu = 1.0 / a + 1.0 / (a + 1.0);
  c.sigma2 = 1.0 / (a * a) + 1.0 / ((a + 1.0) * (a + 1.0));
  const double d = 2.0 * a + 1.0;
  const double d3 = d * d * d;
  c.mean_coeff = (2.0 * a + 2.0) / d;
  c.var_coeff_printed = 2.0 * a * (a + 1.0) * (2.0 * a * a + 2.0 * a + 1.0) / d3;
  const double per_side = c.sigma2 / (c.mu * c.mu * c.mu) / a;
  c.var_coeff_renewal = 2.0 * per_side;
  c.area_mean_coeff = (a + 1.0) / d;
  c.area_var_coeff_printed = (6.0 * a * a * a + 8.0 * a * a + 4.0 * a + 1.0) / d3;
  c.area_var_coeff_renewal = c.area_mean_coeff + per_side;
  return c;
}

}  // namespace tropstat
