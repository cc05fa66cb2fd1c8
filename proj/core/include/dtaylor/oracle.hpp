#pragma once

#include "dtaylor/bigreal.hpp"

namespace dtaylor {

// Reference trigonometric evaluators built from the entire sine/cosine
// Taylor series, which converge everywhere and are independent of the
// tangent/cotangent expansions under test. Terms are accumulated with guard
// bits until the first omitted term is below 2^-(prec+8), then rounded back
// to prec.
BigReal ref_sin(const BigReal& x, long prec);
BigReal ref_cos(const BigReal& x, long prec);
BigReal ref_tan(const BigReal& x, long prec);
BigReal ref_cot(const BigReal& x, long prec);

}  // namespace dtaylor
