#pragma once

#include "qtoda/operators.hpp"
#include "qtoda/param_point.hpp"
#include "qtoda/series.hpp"

namespace qtoda {

// Asymptotically free eigenfunction constructions, normalized to constant
// term 1, truncated at a degree bound "order". Each requires order <=
// p.order_bound() so the point's certificate covers every denominator.

// Variant A eigenfunction as an explicit sum of c_toda coefficients over
// multiplicity matrices.
TruncatedSeries toda_a_direct(const ParamPoint& p, long order);

// Same series built by peeling off one variable at a time with d_toda layer
// weights; agrees with toda_a_direct.
TruncatedSeries toda_a_recursive(const ParamPoint& p, long order);

// Same series computed at the reversed-and-inverted parameter point and
// re-indexed through x_i -> 1/x_{n+1-i}. The derived point is certified from
// scratch; throws NonGenericPoint if it fails.
TruncatedSeries toda_a_inverted(const ParamPoint& p, long order);

// Variant B eigenfunction assembled from variant A eigenfunctions at
// q-shifted parameters with e_branch weights.
TruncatedSeries toda_b_branching(const ParamPoint& p, long order);

// Order-by-order solve of op f = eigenvalue f with constant term 1. Requires
// every multiplier degree to be 0 or 1. Throws NonGenericPoint if an
// eigenvalue divisor vanishes.
TruncatedSeries solve_eigenfunction(const DifferenceOperator& op, long order);

} // namespace qtoda
