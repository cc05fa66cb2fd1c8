#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtaylor/bigreal.hpp"
#include "dtaylor/rational.hpp"

namespace dtaylor {

// Exact scalar of the form sum_e q_e * pi^e, with rational q_e and integer
// exponents e. This is the coefficient domain of every series in the
// library: closed under +, -, * and under division by a single-term value,
// and realized as a BigReal only at evaluation time, so no rounding enters
// coefficient formulas.
//
// Most coefficients are a single term (plain rationals, or values like 2/pi);
// multi-term values arise from products and from endpoint corrections such as
// pi^2/4 - 2.
class PiExpr {
 public:
  PiExpr() = default;  // zero
  PiExpr(Rational r);  // NOLINT: implicit by design, rationals embed
  PiExpr(long n) : PiExpr(Rational(n)) {}  // NOLINT
  PiExpr(Rational r, int pi_exponent);

  static PiExpr pi(int exponent = 1) { return PiExpr(Rational(1), exponent); }

  bool is_zero() const { return terms_.empty(); }
  bool single_term() const { return terms_.size() == 1; }
  // True when the value is a plain rational (possibly zero).
  bool rational_only() const;
  // The rational value if rational_only(), else nullopt.
  std::optional<Rational> as_rational() const;

  // Terms as (pi exponent, coefficient), ascending exponent, no zeros.
  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

  PiExpr operator-() const;
  friend PiExpr operator+(const PiExpr& a, const PiExpr& b);
  friend PiExpr operator-(const PiExpr& a, const PiExpr& b) { return a + (-b); }
  friend PiExpr operator*(const PiExpr& a, const PiExpr& b);
  PiExpr& operator+=(const PiExpr& o) { return *this = *this + o; }

  // Division by a single-term value; throws DomainError otherwise.
  PiExpr divided_by(const PiExpr& divisor) const;
  PiExpr pow_nonneg(int k) const;

  // Sign when it is decidable without numerics: zero, or all terms of one
  // sign. nullopt for genuinely mixed terms.
  std::optional<int> exact_sign() const;
  // Sign with a numeric fallback at the given precision (retried once at
  // double precision). nullopt when the value cannot be separated from zero,
  // which for this library's inputs means it is best treated as inconclusive.
  std::optional<int> sign(long prec = kDefaultPrecision) const;

  BigReal realize(long prec) const;

  // "0", "2/45", "2/pi", "1/4*pi^2 - 2", "4/pi^2", ... Terms are printed in
  // descending pi exponent.
  std::string to_string() const;

  friend bool operator==(const PiExpr& a, const PiExpr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PiExpr& a, const PiExpr& b) { return !(a == b); }

 private:
  void insert_term(int exponent, const Rational& coeff);

  std::vector<std::pair<int, Rational>> terms_;
};

}  // namespace dtaylor
