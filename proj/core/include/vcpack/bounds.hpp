#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "vcpack/entropy.hpp"
#include "vcpack/interval.hpp"

namespace vcpack {

enum class BoundName {
  HausslerUpper,
  GkmUpper,
  KaryUpper,
  SauerUpper,
  GeneralizedSauer,
  RothSeroussi,
  RothSeroussiCn,
  HausslerLower,
  GilbertVarshamovLower,
};

const char* to_string(BoundName name);

/// A named bound value with its inputs and precondition status. value is
/// meaningful only when preconditions_met; otherwise notes carries the
/// diagnostic. Out-of-range cells are legitimate in bound tables, so
/// precondition failures are reported structurally, not thrown.
struct BoundReport {
  BoundName name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::optional<BigInt> exact_value;
  bool preconditions_met = false;
  std::string notes;
};

// eps <-> gamma conversion, centralized: gamma = 1 - 2*eps.
inline double gamma_from_eps(double eps) { return 1.0 - 2.0 * eps; }
inline double eps_from_gamma(double gamma) { return (1.0 - gamma) / 2.0; }

/// e*(d+1)*(2e/eps)^d.
double haussler_upper(double eps, long d);

/// 100 * 2^{d*beta(gamma)}.
double gkm_upper(double gamma, long d);
/// Report form; notes a warning when n is supplied and d > n/2.
BoundReport gkm_upper_report(double gamma, long d,
                             std::optional<long> n = std::nullopt);

/// 34 * k^d * 2^{d/delta(gamma,k)} with the theorem's d-range checks.
BoundReport kary_upper(double gamma, long k, long d, long n);

/// (1/(2e(eps + d/n)))^d.
double haussler_lower(double eps, long d, long n);
/// n -> infinity limit: (1/(2e*eps))^d.
double haussler_lower_limit(double eps, long d);

/// |F| <= 1/(1 - (1-1/n)/(1-gamma^2)) when gamma^2 < 1/n; vacuous otherwise.
BoundReport roth_seroussi(long n, double gamma);

/// (c^2 n - 1)/(c^2 - 1), c > 1.
double roth_seroussi_cn(long n, double c);

/// Interval routes for the algebraic identity
/// roth_seroussi(n, 1/(c sqrt n)) = roth_seroussi_cn(n, c); returns true
/// when the two enclosures intersect (they must).
bool roth_seroussi_identity_check(long n, double c, long precision_bits = 128);

/// ceil(2^n / sum_{i<d} C(n,i)). Standard Gilbert-Varshamov form.
BigInt gv_lower(long n, long min_dist);

/// ((ln 2) beta(gamma), ln(4e/(1-gamma))): the per-d log-asymptotics of the
/// two upper bounds.
std::pair<double, double> asymptotic_log_per_d(double gamma);

/// gamma* in (0, 0.15) where the two asymptotics cross, by bisection.
double crossover_gamma(double tol);

}  // namespace vcpack
