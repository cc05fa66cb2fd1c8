#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtaylor/pi_expr.hpp"

namespace dtaylor {

// Reference evaluator: x at working precision -> value. Used for oracles and
// for generic curves handed to the verification engine.
using Evaluator = std::function<BigReal(const BigReal& x, long prec)>;

// Declared coefficient sign structure of a series. The chain constructions
// trust this declaration (and the catalog verifies it by scanning).
enum class SignPattern {
  kAllNonneg,            // c_k >= 0 for all k
  kAllNonposAfterConst,  // c_0 arbitrary, c_k <= 0 for k >= 1
  kMixed,                // anything else / no tail guarantee
};

std::string to_string(SignPattern p);

// An analytic function on (a, b) described by an exact coefficient generator
// at the anchor a, plus optional endpoint data at b-. Immutable and safe to
// share across threads.
class SeriesFn {
 public:
  struct Init {
    std::string name;
    PiExpr anchor;                        // a
    PiExpr right_end;                     // b, must satisfy b > a
    std::function<PiExpr(int)> coeff;     // k -> c_k, deterministic
    std::optional<PiExpr> end_exact;      // f(b-) when exactly representable
    std::function<BigReal(long)> end_limit;  // f(b-) at precision; may be null
    SignPattern sign_pattern = SignPattern::kMixed;
    // When set, c_k >= 0 is declared for every k >= this index.
    std::optional<int> nonneg_tail_from;
    // When set, the generator is only valid for k < coeff_limit.
    std::optional<int> coeff_limit;
  };

  explicit SeriesFn(Init init);

  const std::string& name() const { return init_->name; }
  const PiExpr& anchor() const { return init_->anchor; }
  const PiExpr& right_end() const { return init_->right_end; }
  // b - a, exact.
  PiExpr width() const { return init_->right_end - init_->anchor; }

  // Exact coefficient of (x - a)^k.
  PiExpr coeff(int k) const;

  bool has_end_limit() const;
  // f(b-) at the given precision; throws EndpointError when unavailable.
  BigReal end_limit(long prec) const;
  const std::optional<PiExpr>& end_exact() const { return init_->end_exact; }

  SignPattern sign_pattern() const { return init_->sign_pattern; }
  const std::optional<int>& nonneg_tail_from() const {
    return init_->nonneg_tail_from;
  }
  const std::optional<int>& coeff_limit() const { return init_->coeff_limit; }

  // Copy of the construction data, for derived series.
  Init init_copy() const { return *init_; }

 private:
  std::shared_ptr<const Init> init_;
};

// Cauchy product u*v on the shared interval; the coefficient generator is
// valid for indices < terms. Endpoint data is the product of the factors'
// endpoint data and is present only when both factors carry it.
SeriesFn series_mul(const SeriesFn& u, const SeriesFn& v, int terms);

// The polynomial c_0 + c_1 (x-a) + ... as a SeriesFn (exact endpoint data).
SeriesFn polynomial_series(std::string name, std::vector<PiExpr> coeffs,
                           PiExpr anchor, PiExpr right_end);

// Coefficient mirror c_k -> (-1)^k c_k. This converts between a series in
// (x - b) powers and the same function's series in (b - x) powers, and is an
// involution. Endpoint data does not transport and is dropped.
SeriesFn mirror(const SeriesFn& f);

}  // namespace dtaylor
