#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropstat/atoms.hpp"
#include "tropstat/experiments.hpp"
#include "tropstat/hull.hpp"
#include "tropstat/partitions.hpp"
#include "tropstat/ppp.hpp"
#include "tropstat/renewal.hpp"
#include "tropstat/stats.hpp"
#include "tropstat/tropical.hpp"

namespace py = pybind11;
using namespace tropstat;

namespace {

std::pair<std::string, std::string> as_pair(const Rational& r) {
  return {boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()};
}

std::vector<PlanarPoint> to_points(const std::vector<std::pair<double, double>>& xy) {
  std::vector<PlanarPoint> pts;
  pts.reserve(xy.size());
  for (auto [x, y] : xy) pts.push_back({x, y});
  return pts;
}

py::list vertex_list(const LowerHull& h) {
  py::list out;
  for (const auto& v : h.vertices) out.append(py::make_tuple(v.x, v.y));
  return out;
}

SampleKind parse_kind(const std::string& kind) {
  if (kind == "homog") return SampleKind::homogeneous;
  if (kind == "inhomog") return SampleKind::inhomogeneous;
  if (kind == "discrete") return SampleKind::discrete;
  throw std::invalid_argument("kind must be homog, inhomog or discrete");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tropstat core bindings";

  m.def("zeros", [](std::vector<double> coeffs) {
    py::list out;
    for (const auto& z : zeros(TropicalPolynomial(std::move(coeffs)))) {
      out.append(py::make_tuple(z.location, z.multiplicity));
    }
    return out;
  }, py::arg("coeffs"));

  m.def("zero_count", [](std::vector<double> coeffs, bool multiplicity) {
    return zero_count(TropicalPolynomial(std::move(coeffs)),
                      multiplicity ? ZeroCounting::with_multiplicity : ZeroCounting::distinct);
  }, py::arg("coeffs"), py::arg("multiplicity") = false);

  m.def("sample_zn", [](const std::string& dist, std::size_t n, std::size_t trials, std::uint64_t seed,
                        unsigned threads) {
    const auto d = AtomDistribution::parse(dist);
    py::gil_scoped_release release;
    return zn_trials(d, n, trials, seed, threads);
  }, py::arg("dist"), py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);

  m.def("lower_hull", [](const std::vector<std::pair<double, double>>& xy, bool split) {
    return vertex_list(lower_hull(to_points(xy), split ? CollinearMode::split : CollinearMode::strict));
  }, py::arg("points"), py::arg("split") = false);

  m.def("index_partition", [](const std::vector<std::pair<double, double>>& xy, bool split) {
    return index_partition(lower_hull(to_points(xy), split ? CollinearMode::split : CollinearMode::strict));
  }, py::arg("points"), py::arg("split") = false);

  m.def("compositions", &compositions, py::arg("n"));
  m.def("_exact_pn", [](const std::vector<int>& c) { return as_pair(exact_pn(c)); }, py::arg("composition"));
  m.def("_exact_pkn_row", [](int n) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : exact_pkn_row(n)) out.push_back(as_pair(r));
    return out;
  }, py::arg("n"));

  m.def("crp_sample", [](int n, std::uint64_t seed) {
    Rng rng(seed);
    return crp_sample(n, rng);
  }, py::arg("n"), py::arg("seed"));

  m.def("sieve_sample", [](int n, std::uint64_t seed, double a) {
    Rng rng(seed);
    StickBreaking sticks(a);
    return sieve_sample(n, sticks, rng);
  }, py::arg("n"), py::arg("seed"), py::arg("a") = 1.0);

  m.def("i0_cdf", &i0_cdf, py::arg("a"), py::arg("b"));
  m.def("i_s_cdf", [](const std::string& dist, double s, double b) {
    return i_s_cdf(AtomDistribution::parse(dist), s, b);
  }, py::arg("dist"), py::arg("s"), py::arg("b"));

  m.def("renewal_count", [](double a, double t, double delay, std::uint64_t seed) {
    Rng rng(seed);
    return renewal_count(a, t, delay, rng);
  }, py::arg("a"), py::arg("t"), py::arg("delay") = 0.0, py::arg("seed") = 0);

  m.def("walk_count", [](const std::string& dist, double s0, double t, std::uint64_t seed) {
    Rng rng(seed);
    return walk_count(AtomDistribution::parse(dist), s0, t, rng);
  }, py::arg("dist"), py::arg("s0"), py::arg("t"), py::arg("seed"));

  m.def("constants", [](double a) {
    const auto c = constants(a);
    py::dict d;
    d["a"] = c.a;
    d["mu"] = c.mu;
    d["sigma2"] = c.sigma2;
    d["mean_coeff"] = c.mean_coeff;
    d["var_coeff_printed"] = c.var_coeff_printed;
    d["var_coeff_renewal"] = c.var_coeff_renewal;
    d["area_mean_coeff"] = c.area_mean_coeff;
    d["area_var_coeff_printed"] = c.area_var_coeff_printed;
    d["area_var_coeff_renewal"] = c.area_var_coeff_renewal;
    return d;
  }, py::arg("a"));

  m.def("ppp_sample", [](const std::string& kind, const std::string& dist, double n, std::uint64_t seed) {
    Rng rng(seed);
    const auto d = AtomDistribution::parse(dist);
    PointSample s;
    switch (parse_kind(kind)) {
      case SampleKind::homogeneous: s = sim_homogeneous(n, rng); break;
      case SampleKind::inhomogeneous: s = sim_inhomogeneous(d, n, rng); break;
      case SampleKind::discrete: s = sim_discrete(d, static_cast<std::size_t>(n), rng); break;
    }
    std::vector<std::pair<double, double>> out;
    for (const auto& p : s.points) out.emplace_back(p.x, p.y);
    return out;
  }, py::arg("kind"), py::arg("dist") = "exp", py::arg("n"), py::arg("seed"));

  m.def("couple_check", [](const std::string& dist, std::size_t n, std::size_t trials, std::uint64_t seed,
                           unsigned threads) {
    const auto d = AtomDistribution::parse(dist);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& p : couple_check(d, n, trials, seed, threads)) out.emplace_back(p.source, p.coupled);
    return out;
  }, py::arg("dist"), py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);

  m.def("ks_normal", [](const std::vector<double>& z) {
    const auto r = ks_normal(z);
    return py::make_tuple(r.statistic, r.p_value);
  }, py::arg("z"));

  m.def("slope_regression", [](const std::vector<double>& x, const std::vector<double>& y) {
    const auto f = slope_regression(x, y);
    return py::make_tuple(f.slope, f.intercept, f.slope_stderr);
  }, py::arg("x"), py::arg("y"));

  m.def("_clt_report", [](const std::string& dist, double a, const std::string& grid, std::size_t trials,
                          std::uint64_t seed, unsigned threads) {
    const auto d = AtomDistribution::parse(dist);
    const auto g = parse_n_grid(grid);
    std::string out;
    {
      py::gil_scoped_release release;
      out = to_json(clt_report(d, a, g, trials, seed, threads)).dump();
    }
    return out;
  }, py::arg("dist"), py::arg("a"), py::arg("n_grid"), py::arg("trials"), py::arg("seed"),
     py::arg("threads") = 1);
}
