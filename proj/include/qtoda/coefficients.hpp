#pragma once

#include "qtoda/param_point.hpp"
#include "qtoda/qpochhammer.hpp"
#include "qtoda/theta.hpp"

namespace qtoda {

// Coefficient families for the eigenfunction series. All three are products
// of q-powers and reciprocal q-Pochhammer factors; a vanishing denominator
// factor raises NonGenericPoint (a certified ParamPoint never triggers one
// within its order bound).

// Series coefficient attached to a full multiplicity matrix; the variant A
// eigenfunction is the sum of c_toda(theta) * x^theta over all matrices.
// c_toda of the zero matrix is 1.
Rational c_toda(const ThetaMatrix& theta, const ParamPoint& p, PochhammerTable& table);
Rational c_toda(const ThetaMatrix& theta, const ParamPoint& p);

// Layer weight in the one-row recursion for variant A; theta has length
// n - 1 and requires n >= 2. A tuple with a negative entry weighs 0.
Rational d_toda(const ThetaVector& theta, const ParamPoint& p, PochhammerTable& table);
Rational d_toda(const ThetaVector& theta, const ParamPoint& p);

// Branching weight for assembling the variant B eigenfunction from variant A
// ones; theta has length n. A tuple with a negative entry weighs 0.
Rational e_branch(const ThetaVector& theta, const ParamPoint& p, PochhammerTable& table);
Rational e_branch(const ThetaVector& theta, const ParamPoint& p);

} // namespace qtoda
