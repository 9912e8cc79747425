#include "doctest.h"

#include "helpers.hpp"
#include "qtoda/qpochhammer.hpp"
#include "qtoda/rational.hpp"

#include <random>

using qtoda::PochhammerTable;
using qtoda::qpoch;
using qtoda::Rational;
using th::rat;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts num and num/den and rejects junk") {
    CHECK(rat("5").str() == "5");
    CHECK(rat("-5").str() == "-5");
    CHECK(rat("15/35").str() == "3/7");
    CHECK(rat("  -14/21 ").str() == "-2/3");
    CHECK(rat("0/9").str() == "0");
    CHECK_THROWS_AS(rat(""), std::invalid_argument);
    CHECK_THROWS_AS(rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat("5/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat("1.5"), std::invalid_argument);
}

TEST_CASE("str/parse round trip") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const long num = static_cast<long>(rng() % 2001) - 1000;
        const long den = 1 + static_cast<long>(rng() % 999);
        const Rational x(num, den);
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("arithmetic and guarded division") {
    const Rational a(3, 7), b(2, 5);
    CHECK(a + b == Rational(29, 35));
    CHECK(a - b == Rational(1, 35));
    CHECK(a * b == Rational(6, 35));
    CHECK(a / b == Rational(15, 14));
    CHECK(-a == Rational(-3, 7));
    CHECK(a.inverse() == Rational(7, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("integer powers of either sign") {
    CHECK(pow(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(pow(Rational(3, 2), 0) == Rational(1));
    CHECK(pow(Rational(3, 2), -2) == Rational(4, 9));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(0), 0) == Rational(1));
    CHECK(pow(Rational(0), 5) == Rational(0));
    CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("qpoch small cases") {
    CHECK(qpoch(Rational(5), Rational(2), 0) == Rational(1));
    // Length 1 is 1 - a regardless of q.
    CHECK(qpoch(Rational(7, 3), Rational(9), 1) == Rational(-4, 3));
    // (1/2; 1/3)_2 = (1 - 1/2)(1 - 1/6) = 5/12.
    CHECK(qpoch(Rational(1, 2), Rational(1, 3), 2) == Rational(5, 12));
    CHECK_THROWS_AS(qpoch(Rational(1, 2), Rational(1, 3), -1), std::invalid_argument);
}

TEST_CASE("qpoch splitting identity") {
    // (a;q)_{m+n} = (a;q)_m (a q^m; q)_n
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational a(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
        const Rational q(1 + static_cast<long>(rng() % 9), 2 + static_cast<long>(rng() % 9));
        for (long m = 0; m <= 8; ++m)
            for (long n = 0; n <= 8; ++n)
                CHECK(qpoch(a, q, m + n) == qpoch(a, q, m) * qpoch(pow(q, m) * a, q, n));
    }
}

TEST_CASE("qpoch vanishes exactly when a is an inverse q power in range") {
    const Rational q(3, 7);
    for (long k = 0; k < 6; ++k) {
        const Rational a = pow(q, -k);
        for (long n = 0; n <= 8; ++n) {
            const bool expect_zero = k < n;
            CHECK(qpoch(a, q, n).is_zero() == expect_zero);
        }
    }
    CHECK_FALSE(qpoch(Rational(2, 5), q, 8).is_zero());
}

TEST_CASE("memoized table matches the direct product") {
    const Rational q(3, 7);
    PochhammerTable table(q);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational a(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 9));
        const long n = static_cast<long>(rng() % 12);
        CHECK(table(a, n) == qpoch(a, q, n));
        // Ask again in a different order; memoization must be transparent.
        CHECK(table(a, n / 2) == qpoch(a, q, n / 2));
    }
}
