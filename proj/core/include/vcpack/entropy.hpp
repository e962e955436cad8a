#pragma once

#include <utility>

#include "vcpack/interval.hpp"

namespace vcpack {

/// H(x) = -x log2 x - (1-x) log2 (1-x), with 0*log 0 := 0.
double binary_entropy(double x);

/// Unique x in [0, 1/2] with H(x) = y. Monotone bisection, absolute
/// tolerance 1e-12, iteration cap 200.
double entropy_inverse(double y);

/// beta(gamma) = 1 / H^{-1}(log2(2/(1+gamma))). Defined on [0,1),
/// nondecreasing, beta(0) = 2; diverges as gamma -> 1.
double beta(double gamma);

// The search interval for delta: the theorem statement uses k/(k+1), the
// proof establishes monotonicity only on k/(k+1.6). Default is the proof
// interval.
enum class DeltaDomain { Proof, Theorem };

/// Largest x in the search interval with x*log2(k) + H(x) <=
/// log2(k/(1+(k-1)*gamma)). Bisection on the equality, clamped to the
/// interval endpoint when the inequality holds there.
double delta(double gamma, long k, DeltaDomain dom = DeltaDomain::Proof);

/// Exact C(n, i).
BigInt binom(long n, long i);

/// Exact sum_{i=0}^{d} C(n,i).
BigInt binom_sum(long n, long d);

/// Exact sum_{i=0}^{d} C(n,i) * k^i.
BigInt binom_sum_k(long n, long d, long k);

/// Interval enclosure of H(p/q) at the given precision; endpoints 0 and q
/// give the exact point [0,0].
Interval entropy_interval(long p, long q, long precision_bits = 128);

enum class Verdict { Verified, Counterexample, PrecisionInsufficient };

const char* to_string(Verdict v);

struct LemmaCheck {
  Verdict verdict;
  Interval margin;  // enclosure of (rhs bound) - (exact sum)
};

/// Rigorously decides sum_{i<=d} C(n,i) < (c_num/c_den) * 2^{n H(d/n)}.
/// Exact integer on the left, outward-rounded interval on the right.
/// Precondition: 1 <= d <= n/2.
LemmaCheck check_lemma_binom(long n, long d, long precision_bits = 128,
                             long c_num = 98, long c_den = 100);

/// Rigorously decides sum_{i<=d} C(n,i) k^i <
/// (c_num/c_den) * 2^{n H(d/n) + d log2 k}.
/// Preconditions: 2 <= d <= n*k/(k+1.6), n >= 6, k >= 2.
LemmaCheck check_lemma_binom_k(long n, long d, long k,
                               long precision_bits = 128, long c_num = 94,
                               long c_den = 100);

/// Escalating wrappers: start at 128 bits, double on PrecisionInsufficient
/// up to 1024 bits.
LemmaCheck check_lemma_binom_auto(long n, long d, long c_num = 98,
                                  long c_den = 100);
LemmaCheck check_lemma_binom_k_auto(long n, long d, long k, long c_num = 94,
                                    long c_den = 100);

/// Enclosure of 2^{n H(i/n)} / sqrt(2 pi i (1 - i/n)), the Stirling upper
/// estimate dominating C(n, i). Requires 1 <= i <= n-1.
Interval stirling_binom_upper(long n, long i, long precision_bits = 128);

}  // namespace vcpack
