#pragma once

#include <mpfr.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace vcpack {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision interval [lo, hi] with outward rounding: every
/// operation returns an interval that contains the exact result. Used to make
/// inequality checks against exact integers machine-rigorous.
class Interval {
 public:
  explicit Interval(long precision_bits = 128);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(long value, long precision_bits = 128);
  static Interval exact(const BigInt& value, long precision_bits = 128);
  // A double converts exactly (binary value), so the interval is a point.
  static Interval exact(double value, long precision_bits = 128);
  // Outward-rounded enclosure of p/q.
  static Interval ratio(const BigInt& p, const BigInt& q,
                        long precision_bits = 128);
  static Interval ratio(long p, long q, long precision_bits = 128);
  static Interval hull(const Interval& a, const Interval& b);
  static Interval pi(long precision_bits = 128);

  long precision_bits() const { return prec_; }
  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  double width_double() const;
  std::string str(int digits = 17) const;

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0

  // hi < other.lo: every value of *this is below every value of other.
  bool strictly_below(const Interval& other) const;
  // lo >= other.hi.
  bool certainly_ge(const Interval& other) const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval log2(const Interval& a);   // requires lo > 0
  friend Interval ln(const Interval& a);     // requires lo > 0
  friend Interval exp2(const Interval& a);   // 2^x
  friend Interval sqrt(const Interval& a);   // requires lo >= 0
  friend Interval pow_int(const Interval& a, long e);  // requires lo >= 0

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  long prec_;
};

}  // namespace vcpack
