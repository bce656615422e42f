// tropstat command line: every experiment of the library behind one binary.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropstat/atoms.hpp"
#include "tropstat/experiments.hpp"
#include "tropstat/hull.hpp"
#include "tropstat/parallel.hpp"
#include "tropstat/partitions.hpp"
#include "tropstat/ppp.hpp"
#include "tropstat/renewal.hpp"
#include "tropstat/tropical.hpp"

using namespace tropstat;
using ojson = nlohmann::ordered_json;

namespace {

struct Config {
  std::string dist = "exp";
  std::optional<double> n;
  std::string n_grid;
  std::optional<double> a;
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string format;  // csv, json; empty picks the subcommand default
  std::string out;

  std::string coeffs;
  std::string file;
  std::optional<int> k;
  double t = 10.0;
  double delay = 0.0;
  std::string kind = "inhomog";
  std::string emit = "counts";
};

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string cell_text(const Cell& c) {
  if (auto p = std::get_if<long long>(&c)) return std::to_string(*p);
  if (auto p = std::get_if<double>(&c)) return format_double(*p);
  return std::get<std::string>(c);
}

ojson cell_json(const Cell& c) {
  if (auto p = std::get_if<long long>(&c)) return *p;
  if (auto p = std::get_if<double>(&c)) return *p;
  return std::get<std::string>(c);
}

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    ojson arr = ojson::array();
    for (const auto& row : t.rows) {
      ojson obj = ojson::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
      arr.push_back(std::move(obj));
    }
    os << arr.dump() << '\n';
    return os.str();
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  return os.str();
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
  f << text;
}

unsigned thread_count(const Config& cfg) {
  if (cfg.threads) return std::max(1u, *cfg.threads);
  if (const char* env = std::getenv("TROPSTAT_THREADS")) {
    unsigned v = 0;
    std::string_view s(env);
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || v == 0) {
      throw std::invalid_argument("TROPSTAT_THREADS must be a positive integer");
    }
    return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t integer_n(const Config& cfg) {
  if (!cfg.n) throw std::invalid_argument("--n is required");
  const double n = *cfg.n;
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e9) {
    throw std::invalid_argument("--n must be a positive integer");
  }
  return static_cast<std::size_t>(n);
}

std::vector<double> n_values(const Config& cfg) {
  if (!cfg.n_grid.empty()) return parse_n_grid(cfg.n_grid);
  return {static_cast<double>(integer_n(cfg))};
}

std::string composition_text(const OrderedPartition& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::string rational_text(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::vector<double> parse_coefficients(const Config& cfg) {
  std::string text = cfg.coeffs;
  if (!cfg.file.empty()) {
    std::ifstream f(cfg.file);
    if (!f) throw std::runtime_error("cannot read '" + cfg.file + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw std::invalid_argument("zeros needs --coeffs or --file");
  std::vector<double> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    double v = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad coefficient '" + token + "'");
    }
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::string run_zeros(const Config& cfg) {
  const TropicalPolynomial poly(parse_coefficients(cfg));
  const auto z = zeros(poly);
  if (cfg.format == "csv") {
    Table t{{"x", "mult"}, {}};
    for (const auto& zero : z) t.rows.push_back({zero.location, zero.multiplicity});
    return render(t, "csv");
  }
  ojson arr = ojson::array();
  for (const auto& zero : z) arr.push_back({{"x", zero.location}, {"mult", zero.multiplicity}});
  return arr.dump() + "\n";
}

std::string run_sample_zn(const Config& cfg) {
  const auto dist = AtomDistribution::parse(cfg.dist);
  Table t{{"n", "trial", "count"}, {}};
  for (double n : n_values(cfg)) {
    const auto counts = zn_trials(dist, static_cast<std::size_t>(n), cfg.trials, *cfg.seed,
                                  thread_count(cfg));
    for (std::size_t k = 0; k < counts.size(); ++k) {
      t.rows.push_back({static_cast<long long>(n), static_cast<long long>(k),
                        static_cast<long long>(counts[k])});
    }
  }
  return render(t, cfg.format);
}

std::string run_exact_pn(const Config& cfg) {
  const int n = static_cast<int>(integer_n(cfg));
  if (n > 20) throw std::invalid_argument("exact-pn enumerates 2^(n-1) compositions; use n <= 20");
  Table t{{"composition", "probability"}, {}};
  for (const auto& c : compositions(n)) t.rows.push_back({composition_text(c), rational_text(exact_pn(c))});
  return render(t, cfg.format);
}

std::string run_exact_pkn(const Config& cfg) {
  const int n = static_cast<int>(integer_n(cfg));
  if (n > 200) throw std::invalid_argument("exact-pkn supports n <= 200");
  const auto row = exact_pkn_row(n);
  Table t{{"k", "probability"}, {}};
  for (int k = 1; k <= n; ++k) {
    if (cfg.k && *cfg.k != k) continue;
    t.rows.push_back({static_cast<long long>(k), rational_text(row[static_cast<std::size_t>(k)])});
  }
  if (cfg.k && (*cfg.k < 1 || *cfg.k > n)) throw std::invalid_argument("--k must lie in 1..n");
  return render(t, cfg.format);
}

template <class Sampler>
std::string run_partition_sampler(const Config& cfg, std::string_view tag, Sampler sampler) {
  const int n = static_cast<int>(integer_n(cfg));
  const auto draws = run_trials(cfg.trials, *cfg.seed, stream_tag(tag), thread_count(cfg),
                                [&](Rng& rng, std::size_t) { return sampler(n, rng); });
  Table t{{"trial", "composition"}, {}};
  for (std::size_t k = 0; k < draws.size(); ++k) {
    t.rows.push_back({static_cast<long long>(k), composition_text(draws[k])});
  }
  return render(t, cfg.format);
}

std::string run_renewal(const Config& cfg) {
  const double a = cfg.a.value_or(1.0);
  const auto counts = run_trials(cfg.trials, *cfg.seed, stream_tag("renewal"), thread_count(cfg),
                                 [&](Rng& rng, std::size_t) {
                                   return renewal_count(a, cfg.t, cfg.delay, rng);
                                 });
  Table t{{"trial", "count"}, {}};
  for (std::size_t k = 0; k < counts.size(); ++k) {
    t.rows.push_back({static_cast<long long>(k), static_cast<long long>(counts[k])});
  }
  return render(t, cfg.format);
}

std::string run_ppp(const Config& cfg) {
  const auto dist = AtomDistribution::parse(cfg.dist);
  if (!cfg.n) throw std::invalid_argument("--n is required");
  const double n = *cfg.n;
  if (cfg.kind != "homog" && cfg.kind != "inhomog" && cfg.kind != "discrete") {
    throw std::invalid_argument("--kind must be homog, inhomog or discrete");
  }
  if (cfg.emit != "counts" && cfg.emit != "points") {
    throw std::invalid_argument("--emit must be counts or points");
  }
  const std::size_t discrete_n = cfg.kind == "discrete" ? integer_n(cfg) : 0;
  const auto samples = run_trials(cfg.trials, *cfg.seed, stream_tag("ppp:" + cfg.kind),
                                  thread_count(cfg), [&](Rng& rng, std::size_t) {
                                    if (cfg.kind == "homog") return sim_homogeneous(n, rng);
                                    if (cfg.kind == "inhomog") return sim_inhomogeneous(dist, n, rng);
                                    return sim_discrete(dist, discrete_n, rng);
                                  });
  if (cfg.emit == "points") {
    Table t{{"trial", "x", "y"}, {}};
    for (std::size_t k = 0; k < samples.size(); ++k) {
      for (const auto& p : samples[k].points) t.rows.push_back({static_cast<long long>(k), p.x, p.y});
    }
    return render(t, cfg.format);
  }
  Table t{{"trial", "points", "faces"}, {}};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    t.rows.push_back({static_cast<long long>(k), static_cast<long long>(samples[k].total_points),
                      static_cast<long long>(hull_count(samples[k]))});
  }
  return render(t, cfg.format);
}

std::string run_couple_check(const Config& cfg) {
  const auto dist = AtomDistribution::parse(cfg.dist);
  Table t{{"n", "trial", "source", "coupled"}, {}};
  for (double n : n_values(cfg)) {
    const auto pairs = couple_check(dist, static_cast<std::size_t>(n), cfg.trials, *cfg.seed,
                                    thread_count(cfg));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      t.rows.push_back({static_cast<long long>(n), static_cast<long long>(k),
                        static_cast<long long>(pairs[k].source),
                        static_cast<long long>(pairs[k].coupled)});
    }
  }
  return render(t, cfg.format);
}

std::string run_an_stat(const Config& cfg) {
  const auto dist = AtomDistribution::parse(cfg.dist);
  Table t{{"n", "trial", "faces", "area_sum"}, {}};
  for (double n : n_values(cfg)) {
    const auto rows = an_stat(dist, static_cast<std::size_t>(n), cfg.trials, *cfg.seed,
                              thread_count(cfg));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      t.rows.push_back({static_cast<long long>(n), static_cast<long long>(k),
                        static_cast<long long>(rows[k].faces), rows[k].area_sum});
    }
  }
  return render(t, cfg.format);
}

std::string run_clt_report(const Config& cfg) {
  const auto dist = AtomDistribution::parse(cfg.dist);
  if (cfg.n_grid.empty()) throw std::invalid_argument("clt-report needs --n-grid");
  const double a = cfg.a.value_or(dist.a());
  const auto report = clt_report(dist, a, parse_n_grid(cfg.n_grid), cfg.trials, *cfg.seed,
                                 thread_count(cfg));
  return to_json(report).dump(2) + "\n";
}

void add_common(CLI::App* sub, Config& cfg, bool sampling) {
  sub->add_option("--threads", cfg.threads, "worker threads (default: $TROPSTAT_THREADS or all cores)");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "output file (default: stdout)");
  if (sampling) sub->add_option("--seed", cfg.seed, "master seed")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random tropical polynomials, lower hulls and their limit laws"};
  app.require_subcommand(1);
  Config cfg;

  auto* zeros_cmd = app.add_subcommand("zeros", "zeros of a min-plus polynomial");
  zeros_cmd->add_option("--coeffs", cfg.coeffs, "comma-separated coefficients C_0..C_n");
  zeros_cmd->add_option("--file", cfg.file, "file with coefficients");
  add_common(zeros_cmd, cfg, false);

  auto* zn_cmd = app.add_subcommand("sample-zn", "zero counts of random polynomials");
  zn_cmd->add_option("--dist", cfg.dist, "atom law: exp, unif, gamma:<a>, weibull:<k>, discrete:<k>");
  zn_cmd->add_option("--n", cfg.n, "degree");
  zn_cmd->add_option("--n-grid", cfg.n_grid, "lo:hi:steps, log-spaced");
  zn_cmd->add_option("--trials", cfg.trials);
  add_common(zn_cmd, cfg, true);

  auto* pn_cmd = app.add_subcommand("exact-pn", "exact law of the hull partition");
  pn_cmd->add_option("--n", cfg.n)->required();
  add_common(pn_cmd, cfg, false);

  auto* pkn_cmd = app.add_subcommand("exact-pkn", "exact law of the number of parts");
  pkn_cmd->add_option("--n", cfg.n)->required();
  pkn_cmd->add_option("--k", cfg.k, "single k");
  add_common(pkn_cmd, cfg, false);

  auto* crp_cmd = app.add_subcommand("crp", "Beta(2,1) Chinese restaurant process");
  crp_cmd->add_option("--n", cfg.n)->required();
  crp_cmd->add_option("--trials", cfg.trials);
  add_common(crp_cmd, cfg, true);

  auto* sieve_cmd = app.add_subcommand("sieve", "Bernoulli sieve over Beta(2,a) sticks");
  sieve_cmd->add_option("--n", cfg.n)->required();
  sieve_cmd->add_option("--a", cfg.a, "stick parameter (default 1)");
  sieve_cmd->add_option("--trials", cfg.trials);
  add_common(sieve_cmd, cfg, true);

  auto* renewal_cmd = app.add_subcommand("renewal", "renewal counts with -ln Beta(a,2) steps");
  renewal_cmd->add_option("--a", cfg.a, "tail exponent (default 1)");
  renewal_cmd->add_option("--t", cfg.t, "horizon");
  renewal_cmd->add_option("--delay", cfg.delay, "first epoch");
  renewal_cmd->add_option("--trials", cfg.trials);
  add_common(renewal_cmd, cfg, true);

  auto* ppp_cmd = app.add_subcommand("ppp", "Poisson point process samples");
  ppp_cmd->add_option("--kind", cfg.kind, "homog, inhomog or discrete");
  ppp_cmd->add_option("--dist", cfg.dist);
  ppp_cmd->add_option("--n", cfg.n)->required();
  ppp_cmd->add_option("--trials", cfg.trials);
  ppp_cmd->add_option("--emit", cfg.emit, "counts or points");
  add_common(ppp_cmd, cfg, true);

  auto* couple_cmd = app.add_subcommand("couple-check", "lower-left face counts before and after strip snapping");
  couple_cmd->add_option("--dist", cfg.dist);
  couple_cmd->add_option("--n", cfg.n);
  couple_cmd->add_option("--n-grid", cfg.n_grid);
  couple_cmd->add_option("--trials", cfg.trials);
  add_common(couple_cmd, cfg, true);

  auto* an_cmd = app.add_subcommand("an-stat", "summed triangle areas of the lower-left hull");
  an_cmd->add_option("--dist", cfg.dist);
  an_cmd->add_option("--n", cfg.n);
  an_cmd->add_option("--n-grid", cfg.n_grid);
  an_cmd->add_option("--trials", cfg.trials);
  add_common(an_cmd, cfg, true);

  auto* clt_cmd = app.add_subcommand("clt-report", "zero-count CLT check over an n-grid (JSON)");
  clt_cmd->add_option("--dist", cfg.dist);
  clt_cmd->add_option("--a", cfg.a, "tail exponent for the constants (default: from --dist)");
  clt_cmd->add_option("--n-grid", cfg.n_grid)->required();
  clt_cmd->add_option("--trials", cfg.trials);
  add_common(clt_cmd, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (cfg.format.empty()) cfg.format = zeros_cmd->parsed() ? "json" : "csv";

  try {
    std::string text;
    if (zeros_cmd->parsed()) text = run_zeros(cfg);
    else if (zn_cmd->parsed()) text = run_sample_zn(cfg);
    else if (pn_cmd->parsed()) text = run_exact_pn(cfg);
    else if (pkn_cmd->parsed()) text = run_exact_pkn(cfg);
    else if (crp_cmd->parsed()) text = run_partition_sampler(cfg, "crp", [](int n, Rng& rng) { return crp_sample(n, rng); });
    else if (sieve_cmd->parsed()) {
      const double a = cfg.a.value_or(1.0);
      text = run_partition_sampler(cfg, "sieve", [a](int n, Rng& rng) {
        StickBreaking sticks(a);
        return sieve_sample(n, sticks, rng);
      });
    } else if (renewal_cmd->parsed()) text = run_renewal(cfg);
    else if (ppp_cmd->parsed()) text = run_ppp(cfg);
    else if (couple_cmd->parsed()) text = run_couple_check(cfg);
    else if (an_cmd->parsed()) text = run_an_stat(cfg);
    else if (clt_cmd->parsed()) text = run_clt_report(cfg);
    write_output(cfg, text);
  } catch (const std::exception& e) {
    std::cerr << "tropstat: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
