#include "vcpack/entropy.hpp"

#include <cmath>

#include "vcpack/errors.hpp"

namespace vcpack {

namespace {
constexpr double kBisectTol = 1e-12;
constexpr int kBisectCap = 200;
}  // namespace

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw domain_error("binary_entropy: x outside [0,1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_inverse(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw domain_error("entropy_inverse: y outside [0,1]");
  }
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 0.5;
  double lo = 0.0, hi = 0.5;
  for (int it = 0; it < kBisectCap && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double beta(double gamma) {
  if (gamma < 0.0) throw domain_error("beta: gamma < 0");
  if (gamma >= 1.0) throw divergence_error("beta: diverges for gamma >= 1");
  const double x = entropy_inverse(std::log2(2.0 / (1.0 + gamma)));
  return 1.0 / x;
}

double delta(double gamma, long k, DeltaDomain dom) {
  if (k < 2) throw domain_error("delta: k < 2");
  if (gamma < 0.0) throw domain_error("delta: gamma < 0");
  if (gamma >= 1.0) {
    throw divergence_error("delta: right-hand side <= 0 for gamma >= 1");
  }
  const double kd = static_cast<double>(k);
  const double rhs = std::log2(kd / (1.0 + (kd - 1.0) * gamma));
  if (rhs <= 0.0) {
    throw divergence_error("delta: right-hand side <= 0");
  }
  const double right_end =
      dom == DeltaDomain::Proof ? kd / (kd + 1.6) : kd / (kd + 1.0);
  const double log2k = std::log2(kd);
  auto lhs = [&](double x) { return x * log2k + binary_entropy(x) - rhs; };
  if (lhs(right_end) <= 0.0) return right_end;
  // lhs is strictly increasing on the proof interval; bisect the equality.
  double lo = 0.0, hi = right_end;
  for (int it = 0; it < kBisectCap && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lhs(mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BigInt binom(long n, long i) {
  if (i < 0 || n < 0 || i > n) throw domain_error("binom: need 0 <= i <= n");
  if (i > n - i) i = n - i;
  BigInt c = 1;
  for (long j = 1; j <= i; ++j) {
    c *= n - i + j;
    c /= j;
  }
  return c;
}

BigInt binom_sum(long n, long d) {
  if (d < 0 || n < 0 || d > n) {
    throw domain_error("binom_sum: need 0 <= d <= n");
  }
  BigInt sum = 0, c = 1;
  for (long i = 0; i <= d; ++i) {
    sum += c;
    c *= n - i;
    c /= i + 1;
  }
  return sum;
}

BigInt binom_sum_k(long n, long d, long k) {
  if (d < 0 || n < 0 || d > n) {
    throw domain_error("binom_sum_k: need 0 <= d <= n");
  }
  if (k < 2) throw domain_error("binom_sum_k: k < 2");
  BigInt sum = 0, c = 1, kp = 1;
  for (long i = 0; i <= d; ++i) {
    sum += c * kp;
    c *= n - i;
    c /= i + 1;
    kp *= k;
  }
  return sum;
}

Interval entropy_interval(long p, long q, long prec) {
  if (q <= 0 || p < 0 || p > q) {
    throw domain_error("entropy_interval: need 0 <= p/q <= 1");
  }
  if (p == 0 || p == q) return Interval(prec);
  const Interval x = Interval::ratio(p, q, prec);
  const Interval one = Interval::exact(1L, prec);
  return -(x * log2(x)) - (one - x) * log2(one - x);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "Verified";
    case Verdict::Counterexample:
      return "Counterexample";
    default:
      return "PrecisionInsufficient";
  }
}

namespace {

// Strict comparison lhs < rhs with exact integer lhs and interval rhs.
LemmaCheck decide(const BigInt& lhs, const Interval& rhs, long prec) {
  const Interval lhs_iv = Interval::exact(lhs, prec);
  LemmaCheck out{Verdict::PrecisionInsufficient, rhs - lhs_iv};
  if (lhs_iv.strictly_below(rhs)) {
    out.verdict = Verdict::Verified;
  } else if (lhs_iv.certainly_ge(rhs)) {
    out.verdict = Verdict::Counterexample;
  }
  return out;
}

}  // namespace

LemmaCheck check_lemma_binom(long n, long d, long prec, long c_num,
                             long c_den) {
  if (d < 1 || 2 * d > n) {
    throw precondition_error("check_lemma_binom: need 1 <= d <= n/2");
  }
  const BigInt lhs = binom_sum(n, d);
  const Interval c = Interval::ratio(c_num, c_den, prec);
  const Interval rhs =
      c * exp2(Interval::exact(n, prec) * entropy_interval(d, n, prec));
  return decide(lhs, rhs, prec);
}

LemmaCheck check_lemma_binom_k(long n, long d, long k, long prec, long c_num,
                               long c_den) {
  if (k < 2) throw precondition_error("check_lemma_binom_k: need k >= 2");
  if (n < 6) throw precondition_error("check_lemma_binom_k: need n >= 6");
  // d <= n*k/(k+1.6)  <=>  d*(10k+16) <= 10*n*k, kept in integers.
  if (d < 2 || d * (10 * k + 16) > 10 * n * k) {
    throw precondition_error(
        "check_lemma_binom_k: need 2 <= d <= n*k/(k+1.6)");
  }
  const BigInt lhs = binom_sum_k(n, d, k);
  const Interval c = Interval::ratio(c_num, c_den, prec);
  const Interval exponent =
      Interval::exact(n, prec) * entropy_interval(d, n, prec) +
      Interval::exact(d, prec) * log2(Interval::exact(k, prec));
  return decide(lhs, c * exp2(exponent), prec);
}

namespace {

template <typename F>
LemmaCheck escalate(F&& f) {
  LemmaCheck last{Verdict::PrecisionInsufficient, Interval()};
  for (long prec = 128; prec <= 1024; prec *= 2) {
    last = f(prec);
    if (last.verdict != Verdict::PrecisionInsufficient) break;
  }
  return last;
}

}  // namespace

LemmaCheck check_lemma_binom_auto(long n, long d, long c_num, long c_den) {
  return escalate(
      [&](long p) { return check_lemma_binom(n, d, p, c_num, c_den); });
}

LemmaCheck check_lemma_binom_k_auto(long n, long d, long k, long c_num,
                                    long c_den) {
  return escalate(
      [&](long p) { return check_lemma_binom_k(n, d, k, p, c_num, c_den); });
}

Interval stirling_binom_upper(long n, long i, long prec) {
  if (i < 1 || i > n - 1) {
    throw domain_error("stirling_binom_upper: need 1 <= i <= n-1");
  }
  const Interval num =
      exp2(Interval::exact(n, prec) * entropy_interval(i, n, prec));
  const Interval den =
      sqrt(Interval::exact(2L, prec) * Interval::pi(prec) *
           Interval::exact(i, prec) *
           (Interval::exact(1L, prec) - Interval::ratio(i, n, prec)));
  return num / den;
}

}  // namespace vcpack
