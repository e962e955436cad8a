#include "vcpack/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "vcpack/errors.hpp"

namespace vcpack {

Interval::Interval(long precision_bits) : prec_(precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) {
    throw domain_error("interval precision too small");
  }
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    if (prec_ != other.prec_) {
      mpfr_set_prec(lo_, other.prec_);
      mpfr_set_prec(hi_, other.prec_);
      prec_ = other.prec_;
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(long value, long precision_bits) {
  Interval r(precision_bits);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::exact(const BigInt& value, long precision_bits) {
  Interval r(precision_bits);
  const std::string s = value.str();
  mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
  return r;
}

Interval Interval::exact(double value, long precision_bits) {
  Interval r(precision_bits);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::ratio(const BigInt& p, const BigInt& q,
                         long precision_bits) {
  if (q == 0) throw domain_error("interval ratio: zero denominator");
  return exact(p, precision_bits) / exact(q, precision_bits);
}

Interval Interval::ratio(long p, long q, long precision_bits) {
  return ratio(BigInt(p), BigInt(q), precision_bits);
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pi(long precision_bits) {
  Interval r(precision_bits);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  return 0.5 * (lo_double() + hi_double());
}

double Interval::width_double() const {
  Interval w(prec_);
  mpfr_sub(w.hi_, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.hi_, MPFR_RNDU);
}

std::string Interval::str(int digits) const {
  char buf[256];
  std::string out = "[";
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, lo_);
  out += buf;
  out += ", ";
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, hi_);
  out += buf;
  out += "]";
  return out;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::strictly_below(const Interval& other) const {
  return mpfr_cmp(hi_, other.lo_) < 0;
}

bool Interval::certainly_ge(const Interval& other) const {
  return mpfr_cmp(lo_, other.hi_) >= 0;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo: min of the four endpoint products rounded down.
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi: max of the four rounded up.
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw domain_error("interval division by an interval containing zero");
  }
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval log2(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw domain_error("interval log2: lo <= 0");
  Interval r(a.prec_);
  mpfr_log2(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval ln(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw domain_error("interval ln: lo <= 0");
  Interval r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp2(const Interval& a) {
  Interval r(a.prec_);
  mpfr_exp2(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp2(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw domain_error("interval sqrt: lo < 0");
  Interval r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval pow_int(const Interval& a, long e) {
  if (mpfr_sgn(a.lo_) < 0) throw domain_error("interval pow_int: lo < 0");
  if (e < 0) return Interval::exact(1L, a.prec_) / pow_int(a, -e);
  Interval r(a.prec_);
  mpfr_pow_si(r.lo_, a.lo_, e, MPFR_RNDD);
  mpfr_pow_si(r.hi_, a.hi_, e, MPFR_RNDU);
  return r;
}

}  // namespace vcpack
