#pragma once

#include <cstddef>

#include "tropstat/atoms.hpp"
#include "tropstat/random.hpp"

namespace tropstat {

/// Beta(a,2) CDF (a+1) b^a - a b^{a+1}, the s -> 0 limit of the jump law.
double i0_cdf(double a, double b);
double i0_quantile(double a, double u);

/// Law of the ratio b = y'/y between consecutive lower-left hull vertex
/// heights when the upper one sits at height s:
///   I_s(b) = [(1-b) G([0,sb]) + int_0^b G([0,st]) dt] / int_0^1 G([0,st]) dt.
/// s = 0 selects the Beta(a,2) limit. The normaliser is computed once.
/// With `closed_form` set, atom laws whose G is a power of y skip the
/// quadrature since I_s is then Beta(a,2) for every s.
class JumpLaw {
 public:
  JumpLaw(const AtomDistribution& dist, double s, bool closed_form = true);

  double s() const noexcept { return s_; }
  /// True when I_s does not depend on s (G a power of y) or s = 0.
  bool state_free() const noexcept { return state_free_; }

  double cdf(double b) const;
  double quantile(double u) const;

 private:
  double ratio(double t) const;
  double integral(double b) const;

  const AtomDistribution* dist_;
  double s_;
  double a_;
  bool state_free_ = false;
  double g_s_ = 1.0;
  double norm_ = 1.0;
};

/// Always evaluated by quadrature (except at s = 0).
double i_s_cdf(const AtomDistribution& dist, double s, double b);
/// Inverse-CDF draw from I_s; one uniform.
double i_s_sample(const AtomDistribution& dist, double s, Rng& rng);

/// Walk S_0 = -ln s0, S_{i+1} = S_i - ln b_i with b_i ~ I_{exp(-S_i)}.
/// Returns #{i >= 0 : S_i <= t}.
std::size_t walk_count(const AtomDistribution& dist, double s0, double t, Rng& rng);

/// Renewal epochs delay + X_1 + ... + X_k (k >= 0), X_i = -ln B_i with
/// B_i ~ Beta(a,2). Returns the number of epochs in [0,t].
std::size_t renewal_count(double a, double t, double delay, Rng& rng);

struct CoupledCounts {
  std::size_t walk = 0;
  std::size_t renewal = 0;
};

/// walk_count and renewal_count (delay -ln s0) driven by the same uniforms:
/// step i of both uses u_i through the respective inverse CDF.
CoupledCounts coupled_counts(const AtomDistribution& dist, double s0, double t, Rng& rng);

struct RenewalConstants {
  double a = 1.0;
  double mu = 0.0;
  double sigma2 = 0.0;
  /// E Z_n ~ mean_coeff ln n.
  double mean_coeff = 0.0;
  /// Var Z_n ~ var_coeff ln n, as printed for general a.
  double var_coeff_printed = 0.0;
  /// Var Z_n ~ var_coeff ln n, from two renewal counts on horizon ln(n)/a.
  double var_coeff_renewal = 0.0;
  /// Triangle-area sum over one side: E ~ area_mean_coeff ln n.
  double area_mean_coeff = 0.0;
  /// Its variance coefficient as printed, (6a^3+8a^2+4a+1)/(2a+1)^3.
  double area_var_coeff_printed = 0.0;
  /// Its variance coefficient from E J + Var J.
  double area_var_coeff_renewal = 0.0;
};

RenewalConstants constants(double a);

}  // namespace tropstat
