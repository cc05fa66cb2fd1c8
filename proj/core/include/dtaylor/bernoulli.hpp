#pragma once

#include "dtaylor/rational.hpp"

namespace dtaylor {

// k-th Bernoulli number, B_1 = -1/2 convention (inert downstream: only even
// absolute values are consumed by the series formulas). Computed by the
// defining recurrence sum_{j=0}^{m} binom(m+1, j) B_j = 0 and memoized.
// Safe for concurrent callers; duplicated computation may occur but every
// caller observes a consistent cache.
Rational bernoulli(unsigned k);

// |B_k|, the form the coefficient formulas consume.
Rational bernoulli_abs(unsigned k);

}  // namespace dtaylor
