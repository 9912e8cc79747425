#pragma once

#include "qtoda/cone.hpp"
#include "qtoda/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qtoda {

struct GenericityViolation {
    std::string factor; // human-readable description of the vanished factor
};

struct GenericityReport {
    std::vector<GenericityViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary(std::size_t max_items = 4) const;
};

// Certifies that (q, s_1..s_n) avoids every denominator and eigenvalue
// divisor that the series constructions bounded by order_bound can meet:
//   * q not in {0, 1, -1}, all s_i nonzero (via the factor families below);
//   * 1 - q^m for 1 <= m <= K,             with K = 2 * order_bound + 4;
//   * 1 - q^k s_j / s_i (i != j) and 1 - q^k / (s_i s_j) (i <= j), |k| <= K;
//   * the eigenvalue divisors of both operator variants at every nonzero
//     cone monomial of degree <= order_bound.
// Lists all violations found. Passing at order_bound implies passing at any
// smaller bound.
GenericityReport genericity_check(const Rational& q, const std::vector<Rational>& s, int n,
                                  long order_bound);

// A certified evaluation point. Construction through make() runs the full
// genericity scan; reparam() derives a point that reuses the parent
// certificate (see below).
class ParamPoint {
public:
    static ParamPoint make(Rational q, std::vector<Rational> s, long order_bound);

    int n() const { return static_cast<int>(s_.size()); }
    const Rational& q() const { return q_; }
    const std::vector<Rational>& s() const { return s_; }
    const Rational& s(int i) const { return s_[static_cast<std::size_t>(i - 1)]; } // 1-based
    long order_bound() const { return order_bound_; }

    // Derived point with the same q and certificate scope but new parameters.
    // The caller asserts that new_s stays inside the q-power orbit the
    // certificate was scanned over (components multiplied by powers of q
    // within the bound, or a prefix of such). Reversals and inversions are
    // not covered; re-certify those with make().
    ParamPoint reparam(std::vector<Rational> new_s) const;

private:
    ParamPoint(Rational q, std::vector<Rational> s, long order_bound)
        : q_(std::move(q)), s_(std::move(s)), order_bound_(order_bound) {}

    Rational q_;
    std::vector<Rational> s_;
    long order_bound_ = 0;
};

// Draws small prime-built rationals (q as a ratio of two distinct primes,
// each s_i a prime or a prime ratio, pairwise distinct) until the genericity
// scan passes. Throws GenericityExhausted after max_retries failed draws.
// Deterministic for a given engine state.
ParamPoint draw_generic_point(int n, long order_bound, std::mt19937_64& rng, int max_retries = 64);

// count nonzero positive rationals (primes or prime ratios), not necessarily
// distinct. Used for auxiliary identity parameters.
std::vector<Rational> draw_rationals(int count, std::mt19937_64& rng);

} // namespace qtoda
