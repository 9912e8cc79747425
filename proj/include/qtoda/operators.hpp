#pragma once

#include "qtoda/param_point.hpp"
#include "qtoda/series.hpp"

#include <vector>

namespace qtoda {

// One summand of a difference operator in normal form: a scalar times a
// monomial multiplier times a single-axis q-shift T_axis^{sign}
// (x_axis -> q^{sign} x_axis). Multipliers lie in the operator's cone with
// degree 0 (diagonal) or 1 (raising), so application never lowers degree.
struct OperatorTerm {
    Rational scalar;
    ConeMonomial multiplier;
    int axis = 1; // 1-based
    int sign = 1; // +1 or -1
};

struct DifferenceOperator {
    ConeVariant variant;
    Rational q;
    std::vector<OperatorTerm> terms;
    Rational eigenvalue; // eigenvalue on the normalized eigenfunction
};

// Relative q-Toda operator: 2n - 1 terms, eigenvalue sum s_i.
DifferenceOperator build_toda_a(const ParamPoint& p);

// Variant B q-Toda operator: 4n - 1 terms including the inverse shifts,
// eigenvalue sum s_i + 1/s_i.
DifferenceOperator build_toda_b(const ParamPoint& p);

// Applies the operator term by term: scalar * mul_monomial(shift(f), mult),
// truncated at f's order. Requires matching cone variants.
TruncatedSeries apply(const DifferenceOperator& op, const TruncatedSeries& f);

} // namespace qtoda
