#include "dtaylor/series_fn.hpp"

#include <algorithm>
#include <utility>

#include "dtaylor/errors.hpp"

namespace dtaylor {

std::string to_string(SignPattern p) {
  switch (p) {
    case SignPattern::kAllNonneg:
      return "ALL_NONNEG";
    case SignPattern::kAllNonposAfterConst:
      return "ALL_NONPOS_AFTER_CONST";
    case SignPattern::kMixed:
      return "MIXED";
  }
  return "?";
}

SeriesFn::SeriesFn(Init init) {
  if (!init.coeff) throw DomainError("SeriesFn: missing coefficient generator");
  const PiExpr w = init.right_end - init.anchor;
  auto ws = w.sign();
  if (!ws || *ws <= 0)
    throw DomainError("SeriesFn '" + init.name + "': right_end must exceed anchor");
  if (!init.end_limit && init.end_exact) {
    PiExpr end = *init.end_exact;
    init.end_limit = [end](long prec) { return end.realize(prec); };
  }
  init_ = std::make_shared<const Init>(std::move(init));
}

PiExpr SeriesFn::coeff(int k) const {
  if (k < 0) throw DomainError("SeriesFn: negative coefficient index");
  if (init_->coeff_limit && k >= *init_->coeff_limit)
    throw DomainError("SeriesFn '" + init_->name + "': coefficient index " +
                      std::to_string(k) + " beyond generator validity (" +
                      std::to_string(*init_->coeff_limit) + ")");
  return init_->coeff(k);
}

bool SeriesFn::has_end_limit() const {
  return static_cast<bool>(init_->end_limit);
}

BigReal SeriesFn::end_limit(long prec) const {
  if (!init_->end_limit)
    throw EndpointError("SeriesFn '" + init_->name +
                        "': no finite endpoint limit at b-");
  return init_->end_limit(prec);
}

SeriesFn series_mul(const SeriesFn& u, const SeriesFn& v, int terms) {
  if (terms < 1) throw DomainError("series_mul: terms must be positive");
  if (u.anchor() != v.anchor() || u.right_end() != v.right_end())
    throw IntervalMismatchError("series_mul: '" + u.name() + "' and '" +
                                v.name() + "' live on different intervals");
  int limit = terms;
  if (u.coeff_limit()) limit = std::min(limit, *u.coeff_limit());
  if (v.coeff_limit()) limit = std::min(limit, *v.coeff_limit());

  SeriesFn::Init init;
  init.name = u.name() + "*" + v.name();
  init.anchor = u.anchor();
  init.right_end = u.right_end();
  init.coeff_limit = limit;
  init.coeff = [u, v](int k) {
    PiExpr sum;
    for (int i = 0; i <= k; ++i) sum += u.coeff(i) * v.coeff(k - i);
    return sum;
  };
  if (u.end_exact() && v.end_exact())
    init.end_exact = *u.end_exact() * *v.end_exact();
  else if (u.has_end_limit() && v.has_end_limit())
    init.end_limit = [u, v](long prec) {
      return u.end_limit(prec) * v.end_limit(prec);
    };
  init.sign_pattern = SignPattern::kMixed;
  return SeriesFn(std::move(init));
}

SeriesFn polynomial_series(std::string name, std::vector<PiExpr> coeffs,
                           PiExpr anchor, PiExpr right_end) {
  PiExpr end;
  const PiExpr w = right_end - anchor;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    end = end * w + coeffs[static_cast<size_t>(k)];
  SeriesFn::Init init;
  init.name = std::move(name);
  init.anchor = std::move(anchor);
  init.right_end = std::move(right_end);
  init.coeff = [coeffs](int k) {
    return k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<size_t>(k)]
                                               : PiExpr();
  };
  init.end_exact = end;
  return SeriesFn(std::move(init));
}

SeriesFn mirror(const SeriesFn& f) {
  SeriesFn::Init init = f.init_copy();
  init.name = "mirror(" + f.name() + ")";
  auto base = init.coeff;
  init.coeff = [base](int k) {
    PiExpr c = base(k);
    return (k % 2 == 0) ? c : -c;
  };
  init.end_exact.reset();
  init.end_limit = nullptr;
  init.sign_pattern = SignPattern::kMixed;
  init.nonneg_tail_from.reset();
  return SeriesFn(std::move(init));
}

}  // namespace dtaylor
