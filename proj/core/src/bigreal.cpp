#include "dtaylor/bigreal.hpp"

#include <vector>

#include "dtaylor/errors.hpp"

namespace dtaylor {
namespace {

long checked_prec(long precision_bits) {
  if (precision_bits < kMinPrecision)
    throw DomainError("BigReal: precision below " +
                      std::to_string(kMinPrecision) + " bits");
  return precision_bits;
}

}  // namespace

BigReal::BigReal(long precision_bits) {
  mpfr_init2(v_, checked_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigReal BigReal::of(double value, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::of_long(long value, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_rational(const Rational& q, long precision_bits,
                               mpfr_rnd_t rnd) {
  BigReal r(precision_bits);
  mpfr_set_q(r.v_, q.raw(), rnd);
  return r;
}

BigReal BigReal::from_decimal(const std::string& text, long precision_bits) {
  BigReal r(precision_bits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("BigReal: cannot parse '" + text + "'");
  return r;
}

BigReal BigReal::pi(long precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long e, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigReal BigReal::rounded_to(long precision_bits) const {
  BigReal r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::abs() const {
  BigReal r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow_int(long k) const {
  BigReal r(precision());
  mpfr_pow_si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

std::string BigReal::to_decimal_string(int significant_digits) const {
  if (significant_digits < 2) significant_digits = 2;
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", significant_digits - 1, v_);
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
  return std::string(buf.data());
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

}  // namespace dtaylor
