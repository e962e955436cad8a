#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcpack/family.hpp"

namespace vcpack {

/// Rows of the order-2^e Sylvester matrix H_{2^e} as a binary class of
/// length 2^e: H[i][j] = (-1)^{popcount(i & j)}, built by the doubling
/// recursion [[H, H], [H, -H]].
FunctionClass sylvester_hadamard(int order_exp);

/// floor(exp(n * gamma^2 / 4)), the construction's target cardinality.
long default_m_target(int n, double gamma);

struct RandomFamilySpec {
  int n = 1;
  double gamma = 0.0;       // target orthogonality, in (0,1)
  long m_target = 0;        // 0 means default_m_target(n, gamma)
  std::uint64_t seed = 0;
  int max_attempts = 100;
};

struct RandomFamilyResult {
  std::optional<FunctionClass> family;  // set on success
  double gamma_measured = 0.0;          // gamma_orth of the accepted family
  int attempts = 0;
  int dvc_upper = 0;                    // floor(log2 m)
  std::optional<int> dvc_exact;         // measured when the oracle is feasible
  bool success = false;
  std::string note;
};

/// Samples m_target x n +-1 matrices from the seeded generator; accepts the
/// first attempt with distinct rows and gamma_orth <= gamma. Retries with
/// derived sub-seeds up to max_attempts; exhaustion is a structured failure,
/// not an exception.
RandomFamilyResult random_orthogonal_family(const RandomFamilySpec& spec);

struct VclbRow {
  int n = 0;
  double gamma_used = 0.0;
  double d_measured = 0.0;  // exact value, or the log2(m) cap when too large
  bool d_exact = false;
  long m_achieved = 0;
  double reference = 0.0;   // exp(n^{1/(2a+1)})
  bool consistent = false;  // gamma within a factor 2 of d^{-a}
  std::string note;
};

/// One row per n: resolve gamma = d^{-a} by fixed-point iteration (gamma_t
/// from d_t, rebuild, re-measure; stop at 5% stability or 10 rounds), build
/// the family, and report the achieved parameters.
std::vector<VclbRow> vclb_curve(double a, const std::vector<int>& n_list,
                                const std::vector<std::uint64_t>& seeds);

/// Random incremental packing: keep each sampled +-1 vector that is
/// rho >= eps from everything kept so far, until stall_limit consecutive
/// rejections.
FunctionClass greedy_packing(int n, const Rational& eps, std::uint64_t seed,
                             int stall_limit = 2000);

}  // namespace vcpack
