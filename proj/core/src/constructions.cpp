#include "vcpack/constructions.hpp"

#include <bit>
#include <cmath>
#include <set>

#include "vcpack/errors.hpp"
#include "vcpack/rng.hpp"

namespace vcpack {

FunctionClass sylvester_hadamard(int order_exp) {
  if (order_exp < 0) throw domain_error("sylvester_hadamard: order_exp < 0");
  if (order_exp > 12) {
    throw domain_error("sylvester_hadamard: 2^order_exp too large");
  }
  const std::uint32_t size = 1u << order_exp;
  std::vector<std::vector<std::uint8_t>> rows(
      size, std::vector<std::uint8_t>(size));
  for (std::uint32_t i = 0; i < size; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      rows[i][j] = std::popcount(i & j) % 2 == 0 ? 1 : 0;
    }
  }
  return FunctionClass(2, static_cast<int>(size), std::move(rows));
}

long default_m_target(int n, double gamma) {
  const double exponent = n * gamma * gamma / 4.0;
  if (exponent > 42.0) {  // floor(exp(42)) already overflows practicality
    throw budget_error("default_m_target: exp(n gamma^2/4) too large");
  }
  return std::max(1L, static_cast<long>(std::floor(std::exp(exponent))));
}

namespace {

std::vector<std::vector<std::uint8_t>> sample_matrix(RandomSource& rnd,
                                                     long m, int n) {
  std::vector<std::vector<std::uint8_t>> rows(
      m, std::vector<std::uint8_t>(n));
  for (auto& row : rows) {
    for (auto& cell : row) cell = rnd.next_bit() ? 1 : 0;
  }
  return rows;
}

bool vc_oracle_feasible(int n, long m) { return n <= 20 && m <= 100; }

}  // namespace

RandomFamilyResult random_orthogonal_family(const RandomFamilySpec& spec) {
  if (spec.n < 1) throw domain_error("random_orthogonal_family: n < 1");
  if (!(spec.gamma > 0.0 && spec.gamma < 1.0)) {
    throw domain_error("random_orthogonal_family: gamma outside (0,1)");
  }
  if (spec.max_attempts < 1) {
    throw domain_error("random_orthogonal_family: max_attempts < 1");
  }
  const long m =
      spec.m_target > 0 ? spec.m_target : default_m_target(spec.n, spec.gamma);
  const Rational gamma_target(spec.gamma);  // exact value of the double

  RandomFamilyResult result;
  result.dvc_upper = static_cast<int>(std::floor(std::log2(
      static_cast<double>(m))));
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    ++result.attempts;
    RandomSource rnd(subseed(spec.seed, attempt));
    auto rows = sample_matrix(rnd, m, spec.n);
    std::set<std::vector<std::uint8_t>> distinct(rows.begin(), rows.end());
    if (static_cast<long>(distinct.size()) != m) continue;
    FunctionClass fc(2, spec.n, std::move(rows));
    const Rational measured = fc.gamma_orth();
    if (measured > gamma_target) continue;
    result.gamma_measured = measured.convert_to<double>();
    if (vc_oracle_feasible(spec.n, m)) {
      result.dvc_exact = fc.vc_dimension();
    }
    result.family = std::move(fc);
    result.success = true;
    return result;
  }
  result.note = "exhausted attempts without an accepted family";
  return result;
}

std::vector<VclbRow> vclb_curve(double a, const std::vector<int>& n_list,
                                const std::vector<std::uint64_t>& seeds) {
  if (!(a > 0.0)) throw domain_error("vclb_curve: need a > 0");
  std::vector<VclbRow> table;
  for (std::size_t row_idx = 0; row_idx < n_list.size(); ++row_idx) {
    const int n = n_list[row_idx];
    const std::uint64_t seed =
        seeds.empty() ? 0 : seeds[row_idx % seeds.size()];
    VclbRow row;
    row.n = n;
    row.reference = std::exp(std::pow(static_cast<double>(n),
                                      1.0 / (2.0 * a + 1.0)));
    // Fixed point for the self-referential gamma = d^{-a}: iterate
    // gamma_t -> m_t -> d_t -> gamma_{t+1} until 5% stability or 10 rounds.
    double gamma = 0.5;
    double d_used = 1.0;
    long m = 1;
    bool feasible = true;
    for (int round = 0; round < 10; ++round) {
      try {
        m = default_m_target(n, gamma);
      } catch (const budget_error&) {
        feasible = false;
        row.note = "m_target overflows the construction budget";
        break;
      }
      d_used = std::max(1.0, std::floor(std::log2(
          static_cast<double>(m))));
      const double next = std::pow(d_used, -a);
      if (std::abs(next - gamma) <= 0.05 * gamma) {
        gamma = next;
        break;
      }
      gamma = next;
    }
    if (!feasible) {
      table.push_back(row);
      continue;
    }
    row.gamma_used = gamma;
    RandomFamilySpec spec;
    spec.n = n;
    spec.gamma = gamma;
    spec.m_target = m;
    spec.seed = seed;
    auto built = random_orthogonal_family(spec);
    if (!built.success) {
      row.note = "construction failed: " + built.note;
      table.push_back(row);
      continue;
    }
    row.m_achieved = built.family->size();
    if (built.dvc_exact) {
      row.d_measured = *built.dvc_exact;
      row.d_exact = true;
    } else {
      row.d_measured = built.dvc_upper;
      row.d_exact = false;
    }
    const double implied = std::pow(std::max(1.0, row.d_measured), -a);
    row.consistent = gamma >= implied / 2.0 && gamma <= implied * 2.0;
    table.push_back(row);
  }
  return table;
}

FunctionClass greedy_packing(int n, const Rational& eps, std::uint64_t seed,
                             int stall_limit) {
  if (n < 1) throw domain_error("greedy_packing: n < 1");
  if (!(eps > 0 && eps <= 1)) {
    throw domain_error("greedy_packing: need 0 < eps <= 1");
  }
  RandomSource rnd(seed);
  std::vector<std::vector<std::uint8_t>> kept;
  int stall = 0;
  while (stall < stall_limit) {
    std::vector<std::uint8_t> candidate(n);
    for (auto& cell : candidate) cell = rnd.next_bit() ? 1 : 0;
    bool ok = true;
    for (const auto& row : kept) {
      long diff = 0;
      for (int i = 0; i < n; ++i) diff += row[i] != candidate[i];
      if (Rational(diff, n) < eps) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(std::move(candidate));
      stall = 0;
    } else {
      ++stall;
    }
  }
  return FunctionClass(2, n, std::move(kept));
}

}  // namespace vcpack
