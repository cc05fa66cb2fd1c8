#include "dtaylor/poly.hpp"

#include <algorithm>

#include "dtaylor/errors.hpp"

namespace dtaylor {

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(-exact_value());
  return Scalar(-approx_value());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(a.exact_value() + b.exact_value());
  const long prec = std::max(a.exact() ? kDefaultPrecision : a.approx_value().precision(),
                             b.exact() ? kDefaultPrecision : b.approx_value().precision());
  return Scalar(a.realize(prec) + b.realize(prec));
}

std::string Scalar::to_string(int decimal_digits) const {
  if (exact()) return exact_value().to_string();
  return approx_value().to_decimal_string(decimal_digits);
}

Poly::Poly(PiExpr anchor, std::vector<Scalar> coeffs)
    : anchor_(std::move(anchor)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(int k) const {
  if (k < 0) throw DomainError("Poly: negative coefficient index");
  if (k > degree()) return Scalar(PiExpr());
  return coeffs_[static_cast<size_t>(k)];
}

bool Poly::all_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& c) { return c.exact(); });
}

Poly Poly::operator-() const {
  std::vector<Scalar> neg;
  neg.reserve(coeffs_.size());
  for (const auto& c : coeffs_) neg.push_back(-c);
  return Poly(anchor_, std::move(neg));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.anchor() != b.anchor())
    throw DomainError("Poly: addition requires a common anchor");
  std::vector<Scalar> sum;
  const int n = std::max(a.degree(), b.degree());
  sum.reserve(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) sum.push_back(a.coeff(k) + b.coeff(k));
  return Poly(a.anchor(), std::move(sum));
}

bool Poly::equals_exact(const Poly& o) const {
  if (!(anchor_ == o.anchor_) || coeffs_.size() != o.coeffs_.size())
    return false;
  if (!all_exact() || !o.all_exact()) return false;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k].exact_value() != o.coeffs_[k].exact_value()) return false;
  return true;
}

std::string Poly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  const std::string shift =
      anchor_.is_zero() ? var : "(" + var + " - " + anchor_.to_string() + ")";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Scalar& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    // Parenthesize multi-term exact coefficients.
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string power = (k == 1) ? shift : shift + "^" + std::to_string(k);
      term = (cs == "1") ? power : cs + "*" + power;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

BigReal poly_eval(const Poly& p, const BigReal& x, long prec) {
  if (p.coeffs().empty()) return BigReal(prec);
  const BigReal dx = x.rounded_to(prec) - p.anchor().realize(prec);
  BigReal acc = p.coeffs().back().realize(prec);
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc *= dx;
    acc += p.coeffs()[static_cast<size_t>(k)].realize(prec);
  }
  return acc;
}

}  // namespace dtaylor
