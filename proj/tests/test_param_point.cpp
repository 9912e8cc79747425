#include "doctest.h"

#include "helpers.hpp"
#include "qtoda/errors.hpp"
#include "qtoda/param_point.hpp"

#include <random>

using namespace qtoda;
using th::rat;
using th::rats;

namespace {
bool mentions(const GenericityReport& rep, const std::string& needle) {
    for (const auto& v : rep.violations)
        if (v.factor.find(needle) != std::string::npos)
            return true;
    return false;
}
} // namespace

TEST_CASE("degenerate bases are flagged") {
    CHECK(mentions(genericity_check(rat("1"), rats({"2", "5"}), 2, 3), "1 - q^1"));
    CHECK(mentions(genericity_check(rat("-1"), rats({"2", "5"}), 2, 3), "1 - q^2"));
    CHECK(mentions(genericity_check(rat("0"), rats({"2"}), 1, 3), "q = 0"));
    CHECK(mentions(genericity_check(rat("1/3"), rats({"2", "0"}), 2, 3), "s2 = 0"));
}

TEST_CASE("coincident and q-linked spectral parameters are flagged") {
    CHECK(mentions(genericity_check(rat("1/3"), rats({"2", "2"}), 2, 3), "s2/s1"));
    // s2 = q * s1 trips the k = 1 member of the ratio family.
    CHECK(mentions(genericity_check(rat("1/3"), rats({"6", "2"}), 2, 3), "q^1 s1/s2"));
    // s1 * s2 = q trips the product family.
    CHECK(mentions(genericity_check(rat("3/4"), rats({"3", "1/4"}), 2, 3), "(s1 s2)"));
}

TEST_CASE("eigenvalue divisors are scanned for both variants") {
    // With s^2 = q the variant B divisor at the first nonzero monomial
    // vanishes: s(1/q - 1) + (1/s)(q - 1) = 0.
    const auto rep = genericity_check(rat("9/16"), rats({"3/4"}), 1, 2);
    CHECK_FALSE(rep.ok());
    CHECK(mentions(rep, "eigenvalue divisor"));
}

TEST_CASE("the standing example point is certified") {
    const auto rep = genericity_check(rat("3/7"), rats({"2", "5", "11"}), 3, 6);
    CHECK(rep.ok());
    const ParamPoint p = ParamPoint::make(rat("3/7"), rats({"2", "5", "11"}), 6);
    CHECK(p.n() == 3);
    CHECK(p.q() == rat("3/7"));
    CHECK(p.s(2) == rat("5"));
    CHECK(p.order_bound() == 6);
}

TEST_CASE("make refuses non-generic points") {
    CHECK_THROWS_AS(ParamPoint::make(rat("1"), rats({"2", "5"}), 3), NonGenericPoint);
    CHECK_THROWS_AS(ParamPoint::make(rat("1/3"), rats({"2", "2"}), 3), NonGenericPoint);
}

TEST_CASE("passing a bound certifies every smaller bound") {
    const std::vector<Rational> s = rats({"2", "5", "11"});
    REQUIRE(genericity_check(rat("3/7"), s, 3, 6).ok());
    for (long bound = 0; bound <= 6; ++bound)
        CHECK(genericity_check(rat("3/7"), s, 3, bound).ok());
}

TEST_CASE("summary lists the vanished factors") {
    const auto rep = genericity_check(rat("1"), rats({"2", "5"}), 2, 1);
    CHECK(rep.summary().find("1 - q^1 = 0") != std::string::npos);
    CHECK(genericity_check(rat("3/7"), rats({"2"}), 1, 1).summary() == "ok");
}

TEST_CASE("seeded draws are reproducible and certified") {
    std::mt19937_64 rng_a(42), rng_b(42), rng_c(43);
    const ParamPoint a = draw_generic_point(3, 5, rng_a);
    const ParamPoint b = draw_generic_point(3, 5, rng_b);
    CHECK(a.q() == b.q());
    CHECK(a.s() == b.s());
    CHECK(genericity_check(a.q(), a.s(), 3, 5).ok());
    // Another seed draws an equally valid point.
    const ParamPoint c = draw_generic_point(3, 5, rng_c);
    CHECK(genericity_check(c.q(), c.s(), 3, 5).ok());
}

TEST_CASE("reparam keeps q and the bound, validates shape") {
    const ParamPoint p = th::point3();
    const ParamPoint r = p.reparam(rats({"2/3", "5"}));
    CHECK(r.n() == 2);
    CHECK(r.q() == p.q());
    CHECK(r.order_bound() == p.order_bound());
    CHECK_THROWS_AS(p.reparam({}), std::invalid_argument);
    CHECK_THROWS_AS(p.reparam(rats({"0"})), std::invalid_argument);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(genericity_check(rat("1/3"), rats({"2"}), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(genericity_check(rat("1/3"), rats({"2"}), 1, -1), std::invalid_argument);
}
