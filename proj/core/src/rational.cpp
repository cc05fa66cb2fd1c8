#include "dtaylor/rational.hpp"

#include <cstring>

#include "dtaylor/errors.hpp"

namespace dtaylor {
namespace {

std::string take_gmp_string(char* s) {
  std::string out(s);
  void (*free_fn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(s, std::strlen(s) + 1);
  return out;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  mpq_init(q_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

Rational::Rational(const std::string& text) {
  mpq_init(q_);
  if (mpq_set_str(q_, text.c_str(), 10) != 0) {
    mpq_clear(q_);
    throw DomainError("Rational: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) == 0)
    throw DomainError("Rational: zero denominator in '" + text + "'");
  mpq_canonicalize(q_);
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("Rational: reciprocal of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(unsigned long e) const {
  Rational r(1);
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
  return r;  // canonical input stays canonical under coordinatewise powers
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

std::string Rational::to_string() const {
  return take_gmp_string(mpq_get_str(nullptr, 10, q_));
}

std::string Rational::numerator_string() const {
  return take_gmp_string(mpz_get_str(nullptr, 10, mpq_numref(q_)));
}

std::string Rational::denominator_string() const {
  return take_gmp_string(mpz_get_str(nullptr, 10, mpq_denref(q_)));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
  Rational r;
  mpz_bin_uiui(mpq_numref(r.q_), n, k);
  return r;
}

Rational Rational::factorial(unsigned long n) {
  Rational r;
  mpz_fac_ui(mpq_numref(r.q_), n);
  return r;
}

Rational Rational::pow2(long e) {
  Rational r;
  if (e >= 0) {
    mpz_ui_pow_ui(mpq_numref(r.q_), 2, static_cast<unsigned long>(e));
  } else {
    mpz_set_ui(mpq_numref(r.q_), 1);
    mpz_ui_pow_ui(mpq_denref(r.q_), 2, static_cast<unsigned long>(-e));
  }
  return r;
}

}  // namespace dtaylor
