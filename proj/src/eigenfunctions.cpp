#include "qtoda/eigenfunctions.hpp"

#include "qtoda/coefficients.hpp"
#include "qtoda/errors.hpp"
#include "qtoda/qpochhammer.hpp"
#include "qtoda/theta.hpp"

#include <stdexcept>
#include <string>

namespace qtoda {

namespace {

void check_order(const ParamPoint& p, long order, const char* who) {
    if (order < 0)
        throw std::invalid_argument(std::string(who) + ": negative order");
    if (order > p.order_bound())
        throw std::invalid_argument(std::string(who) + ": order exceeds the point's certified bound");
}

std::string exp_str(const std::vector<long>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(m[i]);
    }
    return out + "]";
}

TruncatedSeries a_direct_impl(const ParamPoint& p, long order, PochhammerTable& table) {
    const ConeVariant v{ConeType::A, p.n()};
    TruncatedSeries::TermMap acc;
    for (const ThetaMatrix& theta : enumerate_theta_matrices(p.n(), order)) {
        const Rational c = c_toda(theta, p, table);
        if (c.is_zero())
            continue;
        auto [it, fresh] = acc.emplace(theta.monomial_exponents(), c);
        if (!fresh)
            it->second += c;
    }
    return TruncatedSeries::from_terms(v, order, std::move(acc));
}

TruncatedSeries a_recursive_impl(const ParamPoint& p, long order, PochhammerTable& table) {
    const int n = p.n();
    const ConeVariant v{ConeType::A, n};
    if (n == 1)
        return TruncatedSeries::one(v, order);

    // Layer weights: the prefactor of tuple theta has degree
    // sum (n - i) * theta_i.
    std::vector<long> weights;
    for (int i = 1; i < n; ++i)
        weights.push_back(n - i);

    TruncatedSeries acc(v, order);
    for (const ThetaVector& theta : enumerate_weighted_vectors(weights, order)) {
        long wdeg = 0;
        for (std::size_t i = 0; i < theta.size(); ++i)
            wdeg += weights[i] * theta[i];

        const Rational d = d_toda(theta, p, table);

        // prod (x_n / x_i)^{theta_i}
        std::vector<long> pre(static_cast<std::size_t>(n), 0);
        for (int i = 1; i < n; ++i) {
            pre[static_cast<std::size_t>(i - 1)] -= theta[static_cast<std::size_t>(i - 1)];
            pre[static_cast<std::size_t>(n - 1)] += theta[static_cast<std::size_t>(i - 1)];
        }
        const ConeMonomial prefactor = make_cone_monomial(std::move(pre), v);

        std::vector<Rational> inner_s;
        inner_s.reserve(static_cast<std::size_t>(n - 1));
        for (int i = 1; i < n; ++i)
            inner_s.push_back(pow(p.q(), -theta[static_cast<std::size_t>(i - 1)]) * p.s(i));

        const TruncatedSeries inner =
            a_recursive_impl(p.reparam(std::move(inner_s)), order - wdeg, table);
        const TruncatedSeries lifted = embed(inner, v).with_order(order);
        acc = add(acc, scale(mul_monomial(lifted, prefactor), d));
    }
    return acc;
}

} // namespace

TruncatedSeries toda_a_direct(const ParamPoint& p, long order) {
    check_order(p, order, "toda_a_direct");
    PochhammerTable table(p.q());
    return a_direct_impl(p, order, table);
}

TruncatedSeries toda_a_recursive(const ParamPoint& p, long order) {
    check_order(p, order, "toda_a_recursive");
    PochhammerTable table(p.q());
    return a_recursive_impl(p, order, table);
}

TruncatedSeries toda_a_inverted(const ParamPoint& p, long order) {
    check_order(p, order, "toda_a_inverted");
    const int n = p.n();
    std::vector<Rational> rev;
    rev.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i)
        rev.push_back(p.s(i).inverse());
    const ParamPoint flipped = ParamPoint::make(p.q(), std::move(rev), p.order_bound());
    return invert_axes(toda_a_direct(flipped, order));
}

TruncatedSeries toda_b_branching(const ParamPoint& p, long order) {
    check_order(p, order, "toda_b_branching");
    const int n = p.n();
    const ConeVariant v{ConeType::B, n};
    PochhammerTable table(p.q());

    // Prefactor of tuple theta is prod x_i^{-theta_i}, degree
    // sum (n + 1 - i) * theta_i.
    std::vector<long> weights;
    for (int i = 1; i <= n; ++i)
        weights.push_back(n + 1 - i);

    TruncatedSeries acc(v, order);
    for (const ThetaVector& theta : enumerate_weighted_vectors(weights, order)) {
        long wdeg = 0;
        for (std::size_t i = 0; i < theta.size(); ++i)
            wdeg += weights[i] * theta[i];

        const Rational e = e_branch(theta, p, table);

        std::vector<long> pre(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i)
            pre[i] = -theta[i];
        const ConeMonomial prefactor = make_cone_monomial(std::move(pre), v);

        std::vector<Rational> inner_s;
        inner_s.reserve(theta.size());
        for (int i = 1; i <= n; ++i)
            inner_s.push_back(pow(p.q(), -theta[static_cast<std::size_t>(i - 1)]) * p.s(i));

        const TruncatedSeries inner = a_direct_impl(p.reparam(std::move(inner_s)), order - wdeg, table);
        const TruncatedSeries lifted = embed(inner, v).with_order(order);
        acc = add(acc, scale(mul_monomial(lifted, prefactor), e));
    }
    return acc;
}

TruncatedSeries solve_eigenfunction(const DifferenceOperator& op, long order) {
    if (order < 0)
        throw std::invalid_argument("solve_eigenfunction: negative order");
    const ConeVariant v = op.variant;
    const int n = v.n;

    std::vector<const OperatorTerm*> diagonal;
    std::vector<const OperatorTerm*> raising;
    for (const OperatorTerm& t : op.terms) {
        if (t.multiplier.degree == 0)
            diagonal.push_back(&t);
        else if (t.multiplier.degree == 1)
            raising.push_back(&t);
        else
            throw std::invalid_argument("solve_eigenfunction: multiplier degree must be 0 or 1");
    }

    TruncatedSeries::TermMap terms;
    std::vector<std::vector<std::vector<long>>> by_degree(static_cast<std::size_t>(order) + 1);
    const std::vector<long> origin(static_cast<std::size_t>(n), 0);
    terms[origin] = Rational(1);
    by_degree[0].push_back(origin);

    for (long d = 1; d <= order; ++d) {
        // Raising terms feed degree d only from degree d - 1.
        std::map<std::vector<long>, Rational> contrib;
        for (const std::vector<long>& m : by_degree[static_cast<std::size_t>(d - 1)]) {
            const Rational& c = terms[m];
            for (const OperatorTerm* t : raising) {
                std::vector<long> nm(m.size());
                for (std::size_t i = 0; i < m.size(); ++i)
                    nm[i] = m[i] + t->multiplier.exponents[i];
                const Rational inc = t->scalar * pow(op.q, t->sign * m[static_cast<std::size_t>(t->axis - 1)]) * c;
                auto [it, fresh] = contrib.emplace(std::move(nm), inc);
                if (!fresh)
                    it->second += inc;
            }
        }
        for (auto& [m, v_in] : contrib) {
            if (v_in.is_zero())
                continue;
            Rational diag(0);
            for (const OperatorTerm* t : diagonal)
                diag += t->scalar * pow(op.q, t->sign * m[static_cast<std::size_t>(t->axis - 1)]);
            const Rational divisor = diag - op.eigenvalue;
            if (divisor.is_zero())
                throw NonGenericPoint("solve_eigenfunction: eigenvalue divisor vanishes at " + exp_str(m));
            Rational cm = -v_in / divisor;
            if (cm.is_zero())
                continue;
            by_degree[static_cast<std::size_t>(d)].push_back(m);
            terms.emplace(m, std::move(cm));
        }
    }
    return TruncatedSeries::from_terms(v, order, std::move(terms));
}

} // namespace qtoda
