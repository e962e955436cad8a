#include <doctest.h>

#include "vcpack/errors.hpp"
#include "vcpack/interval.hpp"
#include "vcpack/rng.hpp"

using vcpack::BigInt;
using vcpack::Interval;

TEST_CASE("point intervals and exact comparisons") {
  const auto two = Interval::exact(2L);
  const auto three = Interval::exact(3L);
  CHECK(two.strictly_below(three));
  CHECK(three.certainly_ge(three));
  CHECK_FALSE(three.strictly_below(two));
  CHECK((two - two).contains_zero());
}

TEST_CASE("ratio encloses the exact rational") {
  const auto third = Interval::ratio(1, 3);
  CHECK(third.lo_double() <= 1.0 / 3.0);
  CHECK(third.hi_double() >= 1.0 / 3.0);
  CHECK(third.width_double() < 1e-30);
  // 3 * (1/3) contains 1.
  CHECK((Interval::exact(3L) * third - Interval::exact(1L)).contains_zero());
}

TEST_CASE("big integers survive the round trip within outward rounding") {
  BigInt huge = 1;
  for (int i = 0; i < 40; ++i) huge *= 1000003;
  const auto iv = Interval::exact(huge, 256);
  const auto diff = iv - Interval::exact(huge, 256);
  CHECK(diff.contains_zero());
}

TEST_CASE("elementary function enclosures") {
  // log2(8) = 3, exp2(3) = 8, sqrt(4) = 2: all exactly representable.
  CHECK(log2(Interval::exact(8L)).certainly_ge(Interval::exact(3L)));
  CHECK(Interval::exact(3L).certainly_ge(log2(Interval::exact(8L))));
  CHECK(exp2(Interval::exact(3L)).certainly_ge(Interval::exact(8L)));
  CHECK(sqrt(Interval::exact(4L)).certainly_ge(Interval::exact(2L)));
  CHECK((pow_int(Interval::ratio(1, 2), 3) - Interval::ratio(1, 8))
            .contains_zero());
}

TEST_CASE("division by an interval containing zero is rejected") {
  const auto spanning = Interval::exact(1L) - Interval::ratio(1, 1);
  CHECK_THROWS_AS(Interval::exact(1L) / spanning, vcpack::domain_error);
}

TEST_CASE("pi enclosure is tight and correct") {
  const auto pi = Interval::pi(128);
  CHECK(pi.lo_double() <= 3.1415926535897933);
  CHECK(pi.hi_double() >= 3.1415926535897931);
  CHECK(pi.width_double() < 1e-30);
}

TEST_CASE("randomized containment property: interval ops enclose doubles") {
  // For random small rationals, the interval result of (a*b + a/b - b)
  // encloses the value computed in plain rational-free double arithmetic
  // up to that arithmetic's own error.
  vcpack::RandomSource rnd(42);
  for (int t = 0; t < 200; ++t) {
    const long pa = 1 + static_cast<long>(rnd.bounded(100));
    const long qa = 1 + static_cast<long>(rnd.bounded(100));
    const long pb = 1 + static_cast<long>(rnd.bounded(100));
    const long qb = 1 + static_cast<long>(rnd.bounded(100));
    const auto a = Interval::ratio(pa, qa);
    const auto b = Interval::ratio(pb, qb);
    const auto got = a * b + a / b - b;
    const double ref = (double(pa) / qa) * (double(pb) / qb) +
                       (double(pa) / qa) / (double(pb) / qb) -
                       double(pb) / qb;
    CHECK(got.lo_double() <= ref + 1e-9);
    CHECK(got.hi_double() >= ref - 1e-9);
  }
}
