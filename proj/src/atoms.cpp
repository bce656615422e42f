#include "tropstat/atoms.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "tropstat/numeric.hpp"

namespace tropstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::string_view spec) {
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad numeric parameter in distribution spec '" +
                                std::string(spec) + "'");
  }
  return value;
}

// Solves P(a, y) = p (lower) or Q(a, y) = q (upper) for y. Working with the
// tail that is small keeps full relative precision at both ends.
double gamma_solve(double shape, double target, bool lower) {
  using boost::math::gamma_p;
  using boost::math::gamma_q;
  // Rough starting point: small-y expansion for the lower tail, a few means
  // out for the upper tail.
  double guess = lower ? std::pow(target * std::tgamma(shape + 1.0), 1.0 / shape)
                       : shape + 1.0 - std::log(target);
  if (!std::isfinite(guess) || guess <= 0.0) guess = shape;
  auto f = [&](double y) {
    if (lower) return std::log(gamma_p(shape, y)) - std::log(target);
    return std::log(target) - std::log(gamma_q(shape, y));
  };
  double lo = guess, hi = guess;
  double flo = f(lo);
  while (flo > 0.0) {
    lo *= 0.25;
    flo = f(lo);
  }
  double fhi = f(hi);
  while (fhi < 0.0) {
    hi *= 4.0;
    fhi = f(hi);
  }
  if (lo == hi) return lo;
  return numeric::bracketed_root(f, lo, hi, 44);
}

}  // namespace

AtomDistribution AtomDistribution::exponential() {
  return AtomDistribution(AtomKind::exponential, 1.0, 1.0, 1.0);
}

AtomDistribution AtomDistribution::uniform() {
  return AtomDistribution(AtomKind::uniform, 1.0, 1.0, 1.0);
}

AtomDistribution AtomDistribution::gamma(double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::invalid_argument("gamma shape must be positive and finite");
  }
  // P(a, y) = y^a / Gamma(a+1) + O(y^{a+1}).
  return AtomDistribution(AtomKind::gamma, shape, shape, 1.0 / std::tgamma(shape + 1.0));
}

AtomDistribution AtomDistribution::weibull(double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::invalid_argument("weibull shape must be positive and finite");
  }
  return AtomDistribution(AtomKind::weibull, shape, shape, 1.0);
}

AtomDistribution AtomDistribution::discrete_uniform(int k) {
  if (k < 1) throw std::invalid_argument("discrete support size must be >= 1");
  return AtomDistribution(AtomKind::discrete, static_cast<double>(k), 0.0, 0.0);
}

AtomDistribution AtomDistribution::parse(std::string_view spec) {
  if (spec == "exp") return exponential();
  if (spec == "unif") return uniform();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("unknown distribution '" + std::string(spec) + "'");
  }
  const auto family = spec.substr(0, colon);
  const double p = parse_number(spec.substr(colon + 1), spec);
  if (family == "gamma") return gamma(p);
  if (family == "weibull") return weibull(p);
  if (family == "discrete") {
    if (p != std::floor(p)) throw std::invalid_argument("discrete:<k> needs an integer k");
    return discrete_uniform(static_cast<int>(p));
  }
  throw std::invalid_argument("unknown distribution '" + std::string(spec) + "'");
}

std::string AtomDistribution::name() const {
  switch (kind_) {
    case AtomKind::exponential: return "exp";
    case AtomKind::uniform: return "unif";
    case AtomKind::gamma: return "gamma:" + format_number(shape_);
    case AtomKind::weibull: return "weibull:" + format_number(shape_);
    case AtomKind::discrete: return "discrete:" + format_number(shape_);
  }
  return {};
}

double AtomDistribution::cdf(double y) const {
  if (std::isnan(y)) throw std::invalid_argument("cdf of NaN");
  if (y <= 0.0) return 0.0;
  switch (kind_) {
    case AtomKind::exponential: return -std::expm1(-y);
    case AtomKind::uniform: return y >= 1.0 ? 1.0 : y;
    case AtomKind::gamma:
      return y == kInf ? 1.0 : boost::math::gamma_p(shape_, y);
    case AtomKind::weibull: return -std::expm1(-std::pow(y, shape_));
    case AtomKind::discrete: return std::min(1.0, std::floor(y) / shape_);
  }
  return 0.0;
}

double AtomDistribution::survival(double y) const {
  if (std::isnan(y)) throw std::invalid_argument("survival of NaN");
  if (y <= 0.0) return 1.0;
  switch (kind_) {
    case AtomKind::exponential: return std::exp(-y);
    case AtomKind::uniform: return y >= 1.0 ? 0.0 : 1.0 - y;
    case AtomKind::gamma:
      return y == kInf ? 0.0 : boost::math::gamma_q(shape_, y);
    case AtomKind::weibull: return std::exp(-std::pow(y, shape_));
    case AtomKind::discrete: return 1.0 - cdf(y);
  }
  return 1.0;
}

double AtomDistribution::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::domain_error("quantile argument must lie in [0,1)");
  }
  if (u == 0.0) return 0.0;
  switch (kind_) {
    case AtomKind::exponential: return -std::log1p(-u);
    case AtomKind::uniform: return u;
    case AtomKind::gamma:
      return u <= 0.5 ? gamma_solve(shape_, u, true) : gamma_solve(shape_, 1.0 - u, false);
    case AtomKind::weibull: return std::pow(-std::log1p(-u), 1.0 / shape_);
    case AtomKind::discrete: return std::ceil(u * shape_);
  }
  return 0.0;
}

double AtomDistribution::quantile_from_survival(double q) const {
  // q = 1 - u with q possibly far below machine epsilon.
  switch (kind_) {
    case AtomKind::exponential: return -std::log(q);
    case AtomKind::weibull: return std::pow(-std::log(q), 1.0 / shape_);
    case AtomKind::gamma: return gamma_solve(shape_, q, false);
    default: return quantile(1.0 - q);
  }
}

double AtomDistribution::g_mass(double x) const {
  if (std::isnan(x) || x < 0.0) throw std::domain_error("G([0,x]) needs x >= 0");
  if (x == 0.0) return 0.0;
  switch (kind_) {
    case AtomKind::exponential: return x;
    case AtomKind::weibull: return std::pow(x, shape_);
    case AtomKind::uniform: return x >= 1.0 ? kInf : -std::log1p(-x);
    case AtomKind::gamma: {
      const double p = cdf(x);
      if (p < 0.5) return -std::log1p(-p);
      const double q = survival(x);
      return q > 0.0 ? -std::log(q) : kInf;
    }
    case AtomKind::discrete: {
      const double p = cdf(x);
      return p >= 1.0 ? kInf : -std::log1p(-p);
    }
  }
  return 0.0;
}

double AtomDistribution::g_inverse(double m) const {
  if (std::isnan(m) || m < 0.0) throw std::domain_error("G^{-1}(m) needs m >= 0");
  if (m == 0.0) return 0.0;
  if (m == kInf) throw std::domain_error("G^{-1}(inf) is not finite");
  switch (kind_) {
    case AtomKind::exponential: return m;
    case AtomKind::weibull: return std::pow(m, 1.0 / shape_);
    case AtomKind::uniform: return -std::expm1(-m);
    default: break;
  }
  if (m < 0.5) return quantile(-std::expm1(-m));
  return quantile_from_survival(std::exp(-m));
}

}  // namespace tropstat
