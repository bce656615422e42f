#include "tropstat/experiments.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "tropstat/hull.hpp"
#include "tropstat/parallel.hpp"
#include "tropstat/ppp.hpp"
#include "tropstat/renewal.hpp"
#include "tropstat/tropical.hpp"

namespace tropstat {

namespace {

double parse_double(std::string_view text) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad number in n-grid: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> parse_n_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("n-grid must look like lo:hi:steps");
  const double lo = parse_double(text.substr(0, c1));
  const double hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const double steps = parse_double(text.substr(c2 + 1));
  if (!(lo >= 1.0) || !(hi > lo) || !(steps >= 2.0) || steps != std::floor(steps)) {
    throw std::invalid_argument("n-grid needs 1 <= lo < hi and an integer steps >= 2");
  }
  const int k = static_cast<int>(steps);
  std::vector<double> grid;
  const double step = (std::log(hi) - std::log(lo)) / (k - 1);
  for (int i = 0; i < k; ++i) {
    double v = std::round(std::exp(std::log(lo) + step * i));
    if (i == 0) v = lo;
    if (i == k - 1) v = hi;
    if (!grid.empty() && !(v > grid.back())) throw std::invalid_argument("n-grid is not strictly increasing");
    grid.push_back(v);
  }
  return grid;
}

std::uint64_t experiment_tag(std::string_view label, double n) {
  return stream_tag(label) ^ mix64(std::bit_cast<std::uint64_t>(n));
}

std::vector<double> zn_trials(const AtomDistribution& dist, std::size_t n, std::size_t trials,
                              std::uint64_t seed, unsigned threads) {
  return run_trials(trials, seed, experiment_tag("sample-zn", static_cast<double>(n)), threads,
                    [&](Rng& rng, std::size_t) {
                      return static_cast<double>(sample_zero_count(dist, n, rng));
                    });
}

std::vector<double> jitter(std::span<const double> counts, std::uint64_t seed) {
  Rng rng(derive_seed(seed, stream_tag("jitter"), counts.size()));
  std::vector<double> out(counts.begin(), counts.end());
  for (auto& v : out) v += rng.uniform() - 0.5;
  return out;
}

CltReport clt_report(const AtomDistribution& dist, double a, const std::vector<double>& grid,
                     std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (grid.size() < 3) throw std::invalid_argument("clt_report: need at least three n values");
  for (double n : grid) {
    if (n < 1e2 || n > 1e7) throw std::invalid_argument("clt_report: n-grid must lie in [1e2, 1e7]");
  }
  CltReport r;
  r.dist = dist.name();
  r.a = a;
  r.seed = seed;
  r.trials = trials;
  std::vector<double> xs, means, mean_se, vars, var_se;
  for (double n : grid) {
    CltRow row;
    row.counts = zn_trials(dist, static_cast<std::size_t>(n), trials, seed, threads);
    row.summary = summarize(row.counts, n, a, seed);
    xs.push_back(std::log(n));
    means.push_back(row.summary.mean);
    mean_se.push_back(row.summary.stderr_);
    vars.push_back(row.summary.variance);
    var_se.push_back(row.summary.variance_stderr);
    r.rows.push_back(std::move(row));
  }
  r.mean_fit = slope_regression(xs, means, mean_se);
  r.variance_fit = slope_regression(xs, vars, var_se);
  const auto& last = r.rows.back();
  const auto spread = jitter(last.counts, seed);
  r.ks_printed = ks_normal(standardize(spread, last.summary.n, a, VarianceChoice::printed));
  r.ks_renewal = ks_normal(standardize(spread, last.summary.n, a, VarianceChoice::renewal));
  return r;
}

nlohmann::ordered_json to_json(const CltReport& r) {
  using nlohmann::ordered_json;
  const RenewalConstants c = constants(r.a);
  ordered_json j;
  j["dist"] = r.dist;
  j["a"] = r.a;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.summary.n},
                    {"mean", row.summary.mean},
                    {"var", row.summary.variance},
                    {"stderr", row.summary.stderr_},
                    {"var_stderr", row.summary.variance_stderr}});
  }
  j["per_n"] = rows;
  j["mean_slope"] = {{"slope", r.mean_fit.slope},
                     {"stderr", r.mean_fit.slope_stderr},
                     {"intercept", r.mean_fit.intercept},
                     {"expected", c.mean_coeff}};
  const double se = r.variance_fit.slope_stderr;
  const double dev_printed = std::fabs(r.variance_fit.slope - c.var_coeff_printed);
  const double dev_renewal = std::fabs(r.variance_fit.slope - c.var_coeff_renewal);
  j["var_slope"] = {{"slope", r.variance_fit.slope},
                    {"stderr", se},
                    {"intercept", r.variance_fit.intercept},
                    {"candidate_printed", c.var_coeff_printed},
                    {"candidate_renewal", c.var_coeff_renewal},
                    {"z_printed", se > 0.0 ? dev_printed / se : 0.0},
                    {"z_renewal", se > 0.0 ? dev_renewal / se : 0.0}};
  j["ks"] = {{"n", r.rows.back().summary.n},
             {"printed", {{"statistic", r.ks_printed.statistic}, {"p", r.ks_printed.p_value}}},
             {"renewal", {{"statistic", r.ks_renewal.statistic}, {"p", r.ks_renewal.p_value}}}};
  j["verdict"] = {{"closer_variance", dev_printed <= dev_renewal ? "printed" : "renewal"},
                  {"printed_within_3se", dev_printed <= 3.0 * se},
                  {"renewal_within_3se", dev_renewal <= 3.0 * se},
                  {"mean_deviation_se", r.mean_fit.slope_stderr > 0.0
                                            ? std::fabs(r.mean_fit.slope - c.mean_coeff) /
                                                  r.mean_fit.slope_stderr
                                            : 0.0}};
  return j;
}

std::vector<CouplePair> couple_check(const AtomDistribution& dist, std::size_t n,
                                     std::size_t trials, std::uint64_t seed, unsigned threads) {
  return run_trials(trials, seed, experiment_tag("couple-check", static_cast<double>(n)), threads,
                    [&](Rng& rng, std::size_t) {
                      const PointSample s = sim_inhomogeneous(dist, static_cast<double>(n), rng,
                                                              Retain::hull_candidates);
                      CouplePair p;
                      p.source = hull_count(s, HullSide::plus);
                      p.coupled = hull_count(couple(s, n), HullSide::plus);
                      return p;
                    });
}

std::vector<AreaTrial> an_stat(const AtomDistribution& dist, std::size_t n, std::size_t trials,
                               std::uint64_t seed, unsigned threads) {
  return run_trials(trials, seed, experiment_tag("an-stat", static_cast<double>(n)), threads,
                    [&](Rng& rng, std::size_t) {
                      const PointSample s = sim_inhomogeneous(dist, static_cast<double>(n), rng,
                                                              Retain::hull_candidates);
                      AreaTrial t;
                      if (s.points.empty()) return t;
                      const auto plus = split_hull(sample_hull(s)).first;
                      const auto areas = triangle_areas(plus, dist);
                      t.faces = plus.face_count();
                      if (!areas.empty()) t.first_area = areas.front();
                      for (double v : triangle_areas(plus, dist, 1.0)) t.area_sum += v;
                      t.area_sum *= static_cast<double>(n);
                      return t;
                    });
}

std::vector<WalkTrial> walk_check(const AtomDistribution& dist, std::size_t n, std::size_t trials,
                                  std::uint64_t seed, unsigned threads) {
  const double horizon = std::log(static_cast<double>(n)) / dist.a();
  return run_trials(trials, seed, experiment_tag("walk-check", static_cast<double>(n)), threads,
                    [&](Rng& rng, std::size_t) {
                      const PointSample s = sim_inhomogeneous(dist, static_cast<double>(n), rng,
                                                              Retain::hull_candidates);
                      WalkTrial t;
                      if (s.points.empty()) return t;
                      const auto plus = split_hull(sample_hull(s)).first;
                      t.faces = plus.face_count();
                      t.walk = coupled_walk_count(plus, dist, horizon, rng);
                      return t;
                    });
}

}  // namespace tropstat
