#include "doctest.h"

#include "helpers.hpp"
#include "qtoda/errors.hpp"
#include "qtoda/operators.hpp"

#include <random>

using namespace qtoda;
using th::exps;
using th::rat;
using th::rats;

namespace {

TruncatedSeries random_series(const ConeVariant& v, long order, std::mt19937_64& rng) {
    TruncatedSeries::TermMap terms;
    for (const ConeMonomial& m : enumerate_cone_monomials(v, order)) {
        const long num = static_cast<long>(rng() % 9) - 4;
        if (num != 0)
            terms[m.exponents] = Rational(num, 1 + static_cast<long>(rng() % 5));
    }
    return TruncatedSeries::from_terms(v, order, std::move(terms));
}

} // namespace

TEST_CASE("variant A operator shape") {
    for (int n = 1; n <= 5; ++n) {
        std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
        const ParamPoint p = draw_generic_point(n, 3, rng);
        const DifferenceOperator op = build_toda_a(p);
        CHECK(op.terms.size() == static_cast<std::size_t>(2 * n - 1));
        Rational eig(0);
        for (int i = 1; i <= n; ++i)
            eig += p.s(i);
        CHECK(op.eigenvalue == eig);
        for (const OperatorTerm& t : op.terms) {
            CHECK(t.sign == 1);
            CHECK((t.multiplier.degree == 0 || t.multiplier.degree == 1));
        }
    }
}

TEST_CASE("variant B operator shape") {
    for (int n = 1; n <= 4; ++n) {
        std::mt19937_64 rng(2000 + static_cast<unsigned>(n));
        const ParamPoint p = draw_generic_point(n, 3, rng);
        const DifferenceOperator op = build_toda_b(p);
        CHECK(op.terms.size() == static_cast<std::size_t>(4 * n - 1));
        Rational eig(0);
        for (int i = 1; i <= n; ++i)
            eig += p.s(i) + p.s(i).inverse();
        CHECK(op.eigenvalue == eig);
        for (const OperatorTerm& t : op.terms)
            CHECK((t.multiplier.degree == 0 || t.multiplier.degree == 1));
    }
}

TEST_CASE("action on the constant series") {
    const ParamPoint p = th::point2();
    SUBCASE("variant A: sum s_i minus raising monomials") {
        const TruncatedSeries r = apply(build_toda_a(p), TruncatedSeries::one({ConeType::A, 2}, 2));
        CHECK(r.constant_term() == p.s(1) + p.s(2));
        CHECK(r.coeff(exps({-1, 1})) == -p.s(1));
        CHECK(r.term_count() == 2);
    }
    SUBCASE("variant B at n = 1") {
        const ParamPoint p1 = ParamPoint::make(rat("3/7"), rats({"2"}), 3);
        const TruncatedSeries r = apply(build_toda_b(p1), TruncatedSeries::one({ConeType::B, 1}, 2));
        CHECK(r.constant_term() == p1.s(1) + p1.s(1).inverse());
        CHECK(r.coeff(exps({-1})) == -p1.s(1));
        CHECK(r.term_count() == 2);
    }
}

TEST_CASE("diagonal coefficients on a single monomial") {
    // The coefficient of x^m in op(x^m) is the diagonal symbol at m.
    std::mt19937_64 rng(555);
    const ParamPoint p = draw_generic_point(3, 4, rng);
    const Rational q = p.q();

    const DifferenceOperator opa = build_toda_a(p);
    for (const ConeMonomial& m : enumerate_cone_monomials({ConeType::A, 3}, 3)) {
        const TruncatedSeries f = TruncatedSeries::single(m, Rational(1), 4);
        Rational expect(0);
        for (int i = 1; i <= 3; ++i)
            expect += p.s(i) * pow(q, m.exponents[static_cast<std::size_t>(i - 1)]);
        CHECK(apply(opa, f).coeff(m.exponents) == expect);
    }

    const DifferenceOperator opb = build_toda_b(p);
    for (const ConeMonomial& m : enumerate_cone_monomials({ConeType::B, 3}, 3)) {
        const TruncatedSeries f = TruncatedSeries::single(m, Rational(1), 4);
        Rational expect(0);
        for (int i = 1; i <= 3; ++i) {
            const long mi = m.exponents[static_cast<std::size_t>(i - 1)];
            expect += p.s(i) * pow(q, mi) + p.s(i).inverse() * pow(q, -mi);
        }
        CHECK(apply(opb, f).coeff(m.exponents) == expect);
    }
}

TEST_CASE("application is linear and degree-bounded") {
    std::mt19937_64 rng(77);
    const ParamPoint p = draw_generic_point(2, 4, rng);
    const DifferenceOperator op = build_toda_b(p);
    const ConeVariant v{ConeType::B, 2};
    for (int trial = 0; trial < 10; ++trial) {
        const TruncatedSeries f = random_series(v, 3, rng);
        const TruncatedSeries g = random_series(v, 3, rng);
        const Rational c(static_cast<long>(rng() % 7) + 1, 3);
        CHECK(apply(op, add(f, scale(g, c))) == add(apply(op, f), scale(apply(op, g), c)));
    }
    // A single monomial maps into degrees deg(m) and deg(m) + 1 only.
    const ConeMonomial m = make_cone_monomial(exps({-1, 0}), v);
    const TruncatedSeries image = apply(op, TruncatedSeries::single(m, Rational(1), 4));
    for (const auto& [exp, c] : image.terms()) {
        const long d = cone_degree(exp, v);
        CHECK(d >= m.degree);
        CHECK(d <= m.degree + 1);
    }
}

TEST_CASE("variant mismatch is refused") {
    const ParamPoint p = th::point2();
    CHECK_THROWS_AS(apply(build_toda_a(p), TruncatedSeries::one({ConeType::B, 2}, 2)),
                    VariantMismatch);
}
