#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "dtaylor/rational.hpp"

namespace dtaylor {

// Working precision used when a caller does not specify one.
inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMinPrecision = 64;

// Arbitrary-precision binary floating value at an explicit working precision.
// Binary operations on two values are carried out at the larger of the two
// precisions, rounding to nearest.
class BigReal {
 public:
  explicit BigReal(long precision_bits = kDefaultPrecision);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal() { mpfr_clear(v_); }

  static BigReal of(double value, long precision_bits);
  static BigReal of_long(long value, long precision_bits);
  static BigReal from_rational(const Rational& q, long precision_bits,
                               mpfr_rnd_t rnd = MPFR_RNDN);
  // Parses a base-10 decimal (scientific notation allowed).
  static BigReal from_decimal(const std::string& text, long precision_bits);
  static BigReal pi(long precision_bits);
  static BigReal pow2(long e, long precision_bits);  // 2^e

  long precision() const { return mpfr_get_prec(v_); }
  // Same value rounded to a (usually smaller) precision.
  BigReal rounded_to(long precision_bits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigReal abs() const;
  BigReal operator-() const;
  BigReal pow_int(long k) const;  // this^k, k may be negative

  // Decimal string with the given number of significant digits, scientific
  // notation ("-1.234...e-5").
  std::string to_decimal_string(int significant_digits = 40) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(joint_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(joint_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(joint_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(joint_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator-=(const BigReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator*=(const BigReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  // Mixed arithmetic with exact rationals, at this value's precision.
  friend BigReal operator*(const BigReal& a, const Rational& q) {
    BigReal r(a.precision());
    mpfr_mul_q(r.v_, a.v_, q.raw(), MPFR_RNDN);
    return r;
  }
  friend BigReal operator+(const BigReal& a, const Rational& q) {
    BigReal r(a.precision());
    mpfr_add_q(r.v_, a.v_, q.raw(), MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) {
    return !(a == b);
  }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator>=(const BigReal& a, const BigReal& b) {
    return b <= a;
  }

 private:
  static long joint_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
  }

  mpfr_t v_;
};

inline BigReal abs(const BigReal& x) { return x.abs(); }
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

}  // namespace dtaylor
