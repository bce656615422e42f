#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tropstat/atoms.hpp"
#include "tropstat/stats.hpp"

namespace tropstat {

/// "lo:hi:steps" -> `steps` log-spaced integers from lo to hi. Throws unless
/// the result is strictly increasing.
std::vector<double> parse_n_grid(std::string_view text);

/// Seed stream for experiment `label` at scale n.
std::uint64_t experiment_tag(std::string_view label, double n);

/// Distinct-zero counts of `trials` random tropical polynomials of degree n.
std::vector<double> zn_trials(const AtomDistribution& dist, std::size_t n, std::size_t trials,
                              std::uint64_t seed, unsigned threads);

struct CltRow {
  TrialSummary summary;
  std::vector<double> counts;
};

struct CltReport {
  std::string dist;
  double a = 0.0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CltRow> rows;
  SlopeFit mean_fit;
  SlopeFit variance_fit;
  /// KS of standardized counts at the largest n, counts spread uniformly
  /// over their unit cell to remove the lattice effect.
  TestResult ks_printed;
  TestResult ks_renewal;
};

CltReport clt_report(const AtomDistribution& dist, double a, const std::vector<double>& grid,
                     std::size_t trials, std::uint64_t seed, unsigned threads);

nlohmann::ordered_json to_json(const CltReport& report);

/// Integer counts spread by independent U(-1/2, 1/2), seeded per value.
std::vector<double> jitter(std::span<const double> counts, std::uint64_t seed);

struct CouplePair {
  std::size_t source = 0;
  std::size_t coupled = 0;
};

/// Lower-left face counts of an inhomogeneous sample before and after
/// snapping to n strips.
std::vector<CouplePair> couple_check(const AtomDistribution& dist, std::size_t n,
                                     std::size_t trials, std::uint64_t seed, unsigned threads);

struct AreaTrial {
  std::size_t faces = 0;     ///< lower-left faces
  double area_sum = 0.0;     ///< n times the summed areas of triangles inside x <= 1
  double first_area = 0.0;   ///< lambda x G area of the first triangle, 0 if none
};

std::vector<AreaTrial> an_stat(const AtomDistribution& dist, std::size_t n, std::size_t trials,
                               std::uint64_t seed, unsigned threads);

struct WalkTrial {
  std::size_t faces = 0;  ///< lower-left faces
  std::size_t walk = 0;   ///< coupled walk count on horizon ln(n)/a
};

std::vector<WalkTrial> walk_check(const AtomDistribution& dist, std::size_t n, std::size_t trials,
                                  std::uint64_t seed, unsigned threads);

}  // namespace tropstat
