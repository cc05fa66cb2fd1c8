#pragma once

#include <gmp.h>

#include <string>

namespace dtaylor {

// Exact rational scalar backed by GMP. Always canonical: the denominator is
// positive and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT: implicit by design, integers are rationals
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  // Parses "p" or "p/q" in base 10.
  explicit Rational(const std::string& text);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rational abs() const;
  Rational reciprocal() const;        // throws DomainError on zero
  Rational pow(unsigned long e) const;

  // "p" when the denominator is 1, else "p/q".
  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;
  double to_double() const { return mpq_get_d(q_); }

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

  static Rational binomial(unsigned long n, unsigned long k);
  static Rational factorial(unsigned long n);
  static Rational pow2(long e);  // 2^e, e may be negative

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

 private:
  mpq_t q_;
};

}  // namespace dtaylor
