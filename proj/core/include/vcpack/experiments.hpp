#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcpack/family.hpp"
#include "vcpack/interval.hpp"

namespace vcpack {

enum class CollisionMode { Exhaustive, Sampled };

/// Collision probability P(A) of two uniformly random class members
/// projecting identically onto a uniformly random size-r index set, with the
/// proof's lower/upper envelopes 1/binom_sum(r,d) and 1/m + ((1+gamma)/2)^r.
struct ProjectionStats {
  int r = 0;
  CollisionMode mode = CollisionMode::Exhaustive;
  Rational p_collision;      // exact, Exhaustive mode
  double estimate = 0.0;     // Sampled mode
  double std_error = 0.0;
  long trials = 0;
  Rational lower_envelope;
  Rational upper_envelope;
  bool in_proof_range = true;  // 2d <= r <= n
};

/// Exhaustive mode iterates every size-r index set (within the elementary
/// comparison budget C(n,r)*m^2) and is exact; Sampled mode is seeded Monte
/// Carlo. Computes outside [2d, n] too, flagging in_proof_range.
ProjectionStats projection_collision(const FunctionClass& fc, int r,
                                     CollisionMode mode,
                                     std::uint64_t seed = 0,
                                     long trials = 100000,
                                     long long budget = 100000000LL);

/// Exact conditional collision probability sum P_pi(x')^2 on the projection
/// onto I, checked against both floors 1/|F'| (Jensen) and
/// 1/binom_sum(|I|, d) (Sauer). Always true; false flags an oracle bug.
bool collision_floor_check(const FunctionClass& fc,
                           std::span<const int> coords);

struct KeyInequalityReport {
  bool preconditions_met = false;
  bool pass = false;
  Interval lhs;     // 1.02 * 2^{-r H(d/r)}
  Interval rhs;     // 1/|F| + ((1+gamma)/2)^r
  Interval margin;  // rhs - lhs
  std::string note;
};

/// Checks 1.02 * 2^{-r H(d/r)} < 1/|F| + ((1+gamma)/2)^r at interval
/// precision with d = vc_dimension(F), gamma = gamma_orth(F). Requires
/// integer r in [2d, n], d >= 1. Precision escalates internally to 1024
/// bits before giving up.
KeyInequalityReport key_inequality_check(const FunctionClass& fc, int r,
                                         long precision_bits = 128);

struct RStarResult {
  long r_star = 0;
  bool verification_pass = false;  // 2^{-r* H(d/r*)} >= ((1+gamma)/2)^{r*}
};

/// r* = ceil(beta(gamma) * d), with the proof's verification step checked
/// at interval precision.
RStarResult rstar_choice(double gamma, long d, long precision_bits = 128);

// CSV emitters: header row, '.' decimal separator, 12 significant digits,
// LF endings. Bit-stable across runs.

/// Columns (gamma, (ln2) beta(gamma), ln(4e/(1-gamma))).
std::string figure1_data(const std::vector<double>& gamma_grid);
/// Columns (gamma, beta(gamma)).
std::string figure2_data(const std::vector<double>& gamma_grid);
/// Default grids: 0:0.001:0.15 and 0:0.001:0.25.
std::vector<double> default_figure1_grid();
std::vector<double> default_figure2_grid();

struct LemmaSweepReport {
  long total = 0;
  long verified = 0;
  long counterexamples = 0;
  long precision_insufficient = 0;
  double tightest_ratio = 0.0;  // max of (exact sum)/(bound) observed
  long tight_n = 0;
  long tight_d = 0;
  long tight_k = 0;  // 0 for the binary lemma
};

/// Runs the binary lemma check over all 1 <= d <= n/2, n <= n_max, and the
/// k-ary check over all admissible (n, d, k) for the given alphabet sizes.
LemmaSweepReport lemma_sweep(long n_max, const std::vector<long>& k_set);

/// One row per (gamma, d): upper and lower bounds side by side; cells show
/// the value or "n/a: <reason>".
std::string bound_comparison_table(const std::vector<double>& gamma_grid,
                                   const std::vector<long>& d_list,
                                   std::optional<long> n = std::nullopt);

}  // namespace vcpack
