#include "dtaylor/pi_expr.hpp"

#include <algorithm>

#include "dtaylor/errors.hpp"

namespace dtaylor {

PiExpr::PiExpr(Rational r) {
  if (!r.is_zero()) terms_.emplace_back(0, std::move(r));
}

PiExpr::PiExpr(Rational r, int pi_exponent) {
  if (!r.is_zero()) terms_.emplace_back(pi_exponent, std::move(r));
}

bool PiExpr::rational_only() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::optional<Rational> PiExpr::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
  return std::nullopt;
}

void PiExpr::insert_term(int exponent, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const auto& term, int e) { return term.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {exponent, coeff});
  }
}

PiExpr PiExpr::operator-() const {
  PiExpr r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, q] : terms_) r.terms_.emplace_back(e, -q);
  return r;
}

PiExpr operator+(const PiExpr& a, const PiExpr& b) {
  PiExpr r = a;
  for (const auto& [e, q] : b.terms_) r.insert_term(e, q);
  return r;
}

PiExpr operator*(const PiExpr& a, const PiExpr& b) {
  PiExpr r;
  for (const auto& [ea, qa] : a.terms_)
    for (const auto& [eb, qb] : b.terms_) r.insert_term(ea + eb, qa * qb);
  return r;
}

PiExpr PiExpr::divided_by(const PiExpr& divisor) const {
  if (divisor.is_zero()) throw DomainError("PiExpr: division by zero");
  if (!divisor.single_term())
    throw DomainError("PiExpr: division only by single-term values");
  const auto& [de, dq] = divisor.terms_[0];
  PiExpr r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, q] : terms_) r.terms_.emplace_back(e - de, q / dq);
  return r;
}

PiExpr PiExpr::pow_nonneg(int k) const {
  if (k < 0) throw DomainError("PiExpr: negative power");
  PiExpr r(Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<int> PiExpr::exact_sign() const {
  if (terms_.empty()) return 0;
  int s = terms_[0].second.sign();
  for (const auto& [e, q] : terms_)
    if (q.sign() != s) return std::nullopt;
  return s;
}

std::optional<int> PiExpr::sign(long prec) const {
  if (auto s = exact_sign()) return s;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const long p = prec << attempt;
    BigReal v = realize(p);
    // Realization error is a handful of ulps per term; 2^{-p+32} relative to
    // the term magnitudes is a comfortable guard.
    BigReal scale(p);
    for (const auto& [e, q] : terms_) {
      BigReal t = BigReal::from_rational(q.abs(), p) *
                  BigReal::pi(p).pow_int(e);
      scale += t;
    }
    BigReal guard = BigReal::pow2(-p + 32, p) * scale;
    if (v.abs() > guard) return v.sign();
  }
  return std::nullopt;
}

BigReal PiExpr::realize(long prec) const {
  const long wp = prec + 32;
  BigReal sum(wp);
  if (terms_.empty()) return sum.rounded_to(prec);
  const BigReal pi_wp = BigReal::pi(wp);
  for (const auto& [e, q] : terms_) {
    if (e == 0) {
      sum = sum + q;
    } else {
      sum += pi_wp.pow_int(e) * q;
    }
  }
  return sum.rounded_to(prec);
}

std::string PiExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, q] = *it;
    const Rational mag = q.abs();
    std::string term;
    if (e == 0) {
      term = mag.to_string();
    } else {
      std::string pi_part = (e == 1 || e == -1) ? "pi" : "pi^" + std::to_string(std::abs(e));
      if (e > 0) {
        term = (mag == Rational(1)) ? pi_part : mag.to_string() + "*" + pi_part;
      } else {
        term = mag.to_string() + "/" + pi_part;
      }
    }
    if (out.empty()) {
      out = (q.sign() < 0 ? "-" : "") + term;
    } else {
      out += (q.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace dtaylor
