#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dtaylor/pi_expr.hpp"

namespace dtaylor {

// A polynomial coefficient: exact (rational times pi powers), or a big float
// computed at some working precision (endpoint corrections for functions
// whose limit has no exact form).
class Scalar {
 public:
  Scalar(PiExpr e) : v_(std::move(e)) {}   // NOLINT: implicit by design
  Scalar(BigReal x) : v_(std::move(x)) {}  // NOLINT
  Scalar(Rational q) : v_(PiExpr(std::move(q))) {}  // NOLINT
  Scalar(long n) : v_(PiExpr(Rational(n))) {}       // NOLINT

  bool exact() const { return std::holds_alternative<PiExpr>(v_); }
  const PiExpr& exact_value() const { return std::get<PiExpr>(v_); }
  const BigReal& approx_value() const { return std::get<BigReal>(v_); }

  bool is_zero() const {
    return exact() ? exact_value().is_zero()
                   : std::get<BigReal>(v_).is_zero();
  }

  BigReal realize(long prec) const {
    return exact() ? exact_value().realize(prec)
                   : std::get<BigReal>(v_).rounded_to(prec);
  }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);

  // Exact string when exact, else a decimal at the stored precision.
  std::string to_string(int decimal_digits = 40) const;

 private:
  std::variant<PiExpr, BigReal> v_;
};

// Polynomial in powers of (x - anchor). The anchor is kept exact so the
// polynomial can be evaluated faithfully at any precision. Trailing zero
// coefficients are stripped at construction.
class Poly {
 public:
  Poly(PiExpr anchor, std::vector<Scalar> coeffs);

  const PiExpr& anchor() const { return anchor_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  // Number of stored coefficients minus one; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of (x-anchor)^k; zero beyond degree.
  Scalar coeff(int k) const;

  bool all_exact() const;

  Poly operator-() const;
  // Addition requires equal anchors.
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  // True when both polynomials are all-exact with identical coefficients and
  // anchors.
  bool equals_exact(const Poly& o) const;

  // "2 + 2/45*x^4", with "(x - pi/2)" style factors for nonzero anchors.
  std::string to_string(const std::string& var = "x") const;

 private:
  PiExpr anchor_;
  std::vector<Scalar> coeffs_;
};

// Horner evaluation at working precision `prec`; exact coefficients are
// rounded only here.
BigReal poly_eval(const Poly& p, const BigReal& x, long prec);

}  // namespace dtaylor
