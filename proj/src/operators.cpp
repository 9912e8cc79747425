#include "qtoda/operators.hpp"

#include "qtoda/errors.hpp"

namespace qtoda {

DifferenceOperator build_toda_a(const ParamPoint& p) {
    const int n = p.n();
    const ConeVariant v{ConeType::A, n};
    DifferenceOperator op{v, p.q(), {}, Rational(0)};
    for (int i = 1; i < n; ++i)
        op.terms.push_back({p.s(i), zero_monomial(v), i, +1});
    for (int i = 1; i < n; ++i)
        op.terms.push_back({-p.s(i), ratio_monomial(v, i + 1, i), i, +1});
    op.terms.push_back({p.s(n), zero_monomial(v), n, +1});
    for (int i = 1; i <= n; ++i)
        op.eigenvalue += p.s(i);
    return op;
}

DifferenceOperator build_toda_b(const ParamPoint& p) {
    const int n = p.n();
    const ConeVariant v{ConeType::B, n};
    DifferenceOperator op{v, p.q(), {}, Rational(0)};
    for (int i = 1; i < n; ++i) {
        op.terms.push_back({p.s(i), zero_monomial(v), i, +1});
        op.terms.push_back({-p.s(i), ratio_monomial(v, i + 1, i), i, +1});
    }
    op.terms.push_back({p.s(n), zero_monomial(v), n, +1});
    op.terms.push_back({-p.s(n), inverse_monomial(v, n), n, +1});
    op.terms.push_back({p.s(1).inverse(), zero_monomial(v), 1, -1});
    for (int i = 2; i <= n; ++i) {
        op.terms.push_back({p.s(i).inverse(), zero_monomial(v), i, -1});
        op.terms.push_back({-p.s(i).inverse(), ratio_monomial(v, i, i - 1), i, -1});
    }
    for (int i = 1; i <= n; ++i)
        op.eigenvalue += p.s(i) + p.s(i).inverse();
    return op;
}

TruncatedSeries apply(const DifferenceOperator& op, const TruncatedSeries& f) {
    if (op.variant != f.variant())
        throw VariantMismatch("apply: operator and series cone variants differ");
    TruncatedSeries acc(f.variant(), f.order());
    for (const OperatorTerm& t : op.terms)
        acc = add(acc, scale(mul_monomial(shift(f, t.axis, t.sign, op.q), t.multiplier), t.scalar));
    return acc;
}

} // namespace qtoda
