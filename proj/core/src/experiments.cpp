#include "vcpack/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vcpack/bounds.hpp"
#include "vcpack/entropy.hpp"
#include "vcpack/errors.hpp"
#include "vcpack/rng.hpp"

namespace vcpack {

namespace {

Rational rational_pow(Rational base, long e) {
  Rational out = 1;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

// Counts of identical projected rows on the given coordinates.
std::vector<long> projection_counts(const FunctionClass& fc,
                                    std::span<const int> coords) {
  std::vector<std::vector<std::uint8_t>> proj;
  proj.reserve(fc.size());
  for (int i = 0; i < fc.size(); ++i) {
    std::vector<std::uint8_t> p;
    p.reserve(coords.size());
    for (int c : coords) p.push_back(fc.row(i)[c]);
    proj.push_back(std::move(p));
  }
  std::sort(proj.begin(), proj.end());
  std::vector<long> counts;
  for (std::size_t i = 0; i < proj.size();) {
    std::size_t j = i;
    while (j < proj.size() && proj[j] == proj[i]) ++j;
    counts.push_back(static_cast<long>(j - i));
    i = j;
  }
  return counts;
}

template <typename Fn>
void for_each_combination(int n, int s, Fn&& fn) {
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

ProjectionStats projection_collision(const FunctionClass& fc, int r,
                                     CollisionMode mode, std::uint64_t seed,
                                     long trials, long long budget) {
  if (r < 1 || r > fc.n()) {
    throw domain_error("projection_collision: need 1 <= r <= n");
  }
  const int d = fc.vc_dimension();
  const long m = fc.size();
  ProjectionStats stats;
  stats.r = r;
  stats.mode = mode;
  stats.in_proof_range = 2 * d <= r;
  stats.lower_envelope = Rational(1) / Rational(binom_sum(r, std::min<long>(d, r)));
  const Rational gamma = fc.gamma_orth();
  stats.upper_envelope =
      Rational(1, m) + rational_pow((1 + gamma) / 2, r);

  if (mode == CollisionMode::Exhaustive) {
    const BigInt sets = binom(fc.n(), r);
    if (sets * m * m > budget) {
      throw budget_error("projection_collision: exhaustive budget exceeded");
    }
    BigInt collisions = 0;  // sum over index sets of (ordered colliding pairs)
    for_each_combination(fc.n(), r, [&](const std::vector<int>& idx) {
      long long acc = 0;
      for (long c : projection_counts(fc, idx)) {
        acc += static_cast<long long>(c) * c;
      }
      collisions += acc;
    });
    stats.p_collision = Rational(collisions, sets * m * m);
    return stats;
  }

  if (trials < 1) throw domain_error("projection_collision: trials < 1");
  RandomSource rnd(seed);
  std::vector<int> coords(fc.n());
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    for (int i = 0; i < fc.n(); ++i) coords[i] = i;
    for (int i = 0; i < r; ++i) {
      std::swap(coords[i], coords[i + rnd.bounded(static_cast<std::uint64_t>(
                                        fc.n() - i))]);
    }
    const int x = static_cast<int>(rnd.bounded(m));
    const int y = static_cast<int>(rnd.bounded(m));
    bool equal = true;
    for (int i = 0; i < r && equal; ++i) {
      equal = fc.row(x)[coords[i]] == fc.row(y)[coords[i]];
    }
    if (equal) ++hits;
  }
  stats.trials = trials;
  stats.estimate = static_cast<double>(hits) / trials;
  stats.std_error =
      std::sqrt(stats.estimate * (1.0 - stats.estimate) / trials);
  return stats;
}

bool collision_floor_check(const FunctionClass& fc,
                           std::span<const int> coords) {
  const auto counts = projection_counts(fc, coords);
  const long m = fc.size();
  Rational q = 0;
  for (long c : counts) q += Rational(c, m) * Rational(c, m);
  const Rational jensen_floor(1, static_cast<long>(counts.size()));
  const int d = fc.vc_dimension();
  const Rational sauer_floor =
      Rational(1) / Rational(binom_sum(static_cast<long>(coords.size()),
                                       std::min<long>(d, coords.size())));
  return q >= jensen_floor && q >= sauer_floor;
}

KeyInequalityReport key_inequality_check(const FunctionClass& fc, int r,
                                         long precision_bits) {
  KeyInequalityReport report;
  const int d = fc.vc_dimension();
  if (d < 1 || r < 2 * d || r > fc.n()) {
    report.note = "precondition failed: need d >= 1 and r in [2d, n]";
    return report;
  }
  report.preconditions_met = true;
  const Rational gamma = fc.gamma_orth();
  const Rational half_plus = (1 + gamma) / 2;
  const BigInt num = numerator(half_plus);
  const BigInt den = denominator(half_plus);
  for (long prec = precision_bits; prec <= 1024; prec *= 2) {
    const Interval lhs =
        Interval::ratio(102, 100, prec) *
        exp2(-(Interval::exact(static_cast<long>(r), prec) *
               entropy_interval(d, r, prec)));
    const Interval rhs =
        Interval::ratio(1, fc.size(), prec) +
        pow_int(Interval::ratio(num, den, prec), r);
    report.lhs = lhs;
    report.rhs = rhs;
    report.margin = rhs - lhs;
    if (lhs.strictly_below(rhs)) {
      report.pass = true;
      return report;
    }
    if (lhs.certainly_ge(rhs)) {
      report.pass = false;
      report.note = "inequality violated";
      return report;
    }
  }
  report.note = "indeterminate at 1024 bits";
  return report;
}

RStarResult rstar_choice(double gamma, long d, long precision_bits) {
  if (d < 1) throw domain_error("rstar_choice: need d >= 1");
  RStarResult result;
  result.r_star = static_cast<long>(std::ceil(beta(gamma) * d));
  const Rational half_plus(Rational(1 + Rational(gamma)) / 2);
  const BigInt num = numerator(half_plus);
  const BigInt den = denominator(half_plus);
  for (long prec = precision_bits; prec <= 1024; prec *= 2) {
    const Interval lhs = exp2(-(Interval::exact(result.r_star, prec) *
                                entropy_interval(d, result.r_star, prec)));
    const Interval rhs =
        pow_int(Interval::ratio(num, den, prec), result.r_star);
    if (lhs.certainly_ge(rhs)) {
      result.verification_pass = true;
      return result;
    }
    if (lhs.strictly_below(rhs)) return result;
  }
  return result;
}

std::vector<double> default_figure1_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 150; ++i) grid.push_back(i * 0.001);
  return grid;
}

std::vector<double> default_figure2_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 250; ++i) grid.push_back(i * 0.001);
  return grid;
}

std::string figure1_data(const std::vector<double>& gamma_grid) {
  std::string out = "gamma,gkm_log_per_d,haussler_log_per_d\n";
  for (double g : gamma_grid) {
    const auto [gkm, haussler] = asymptotic_log_per_d(g);
    out += format_sig12(g) + "," + format_sig12(gkm) + "," +
           format_sig12(haussler) + "\n";
  }
  return out;
}

std::string figure2_data(const std::vector<double>& gamma_grid) {
  std::string out = "gamma,beta\n";
  for (double g : gamma_grid) {
    out += format_sig12(g) + "," + format_sig12(beta(g)) + "\n";
  }
  return out;
}

LemmaSweepReport lemma_sweep(long n_max, const std::vector<long>& k_set) {
  if (n_max < 2) throw domain_error("lemma_sweep: n_max < 2");
  LemmaSweepReport report;
  auto tally = [&](const LemmaCheck& check, long n, long d, long k) {
    ++report.total;
    switch (check.verdict) {
      case Verdict::Verified:
        ++report.verified;
        break;
      case Verdict::Counterexample:
        ++report.counterexamples;
        break;
      default:
        ++report.precision_insufficient;
        break;
    }
    // Tightness = sum/bound; reconstruct from margin = bound - sum.
    const BigInt sum = k == 0 ? binom_sum(n, d) : binom_sum_k(n, d, k);
    const Interval sum_iv = Interval::exact(sum);
    const Interval bound = check.margin + sum_iv;
    const double ratio = sum_iv.hi_double() / bound.lo_double();
    if (ratio > report.tightest_ratio) {
      report.tightest_ratio = ratio;
      report.tight_n = n;
      report.tight_d = d;
      report.tight_k = k;
    }
  };
  for (long n = 2; n <= n_max; ++n) {
    for (long d = 1; 2 * d <= n; ++d) {
      tally(check_lemma_binom_auto(n, d), n, d, 0);
    }
  }
  for (long k : k_set) {
    for (long n = 6; n <= n_max; ++n) {
      for (long d = 2; d * (10 * k + 16) <= 10 * n * k; ++d) {
        tally(check_lemma_binom_k_auto(n, d, k), n, d, k);
      }
    }
  }
  return report;
}

std::string bound_comparison_table(const std::vector<double>& gamma_grid,
                                   const std::vector<long>& d_list,
                                   std::optional<long> n) {
  std::string out =
      "gamma,d,haussler_upper,gkm_upper,sauer_upper,roth_seroussi,"
      "haussler_lower\n";
  for (double g : gamma_grid) {
    for (long d : d_list) {
      const double eps = eps_from_gamma(g);
      out += format_sig12(g) + "," + std::to_string(d);
      if (eps > 0.0 && d >= 1) {
        out += "," + format_sig12(haussler_upper(eps, d));
      } else {
        out += ",n/a: eps <= 0";
      }
      if (g >= 0.0 && g < 1.0 && d >= 1) {
        out += "," + format_sig12(gkm_upper(g, d));
      } else {
        out += ",n/a: gamma >= 1";
      }
      if (n && d <= *n) {
        out += "," + binom_sum(*n, d).str();
      } else {
        out += ",n/a: needs n >= d";
      }
      if (n) {
        const auto rs = roth_seroussi(*n, g);
        out += rs.preconditions_met ? "," + format_sig12(rs.value)
                                    : ",n/a: vacuous";
      } else {
        out += ",n/a: needs n";
      }
      if (n && d >= 1 && d <= *n && eps > 0.0) {
        out += "," + format_sig12(haussler_lower(eps, d, *n));
      } else if (eps > 0.0 && d >= 1) {
        out += "," + format_sig12(haussler_lower_limit(eps, d));
      } else {
        out += ",n/a: eps <= 0";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace vcpack
