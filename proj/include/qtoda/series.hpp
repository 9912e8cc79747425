#pragma once

#include "qtoda/cone.hpp"
#include "qtoda/rational.hpp"

#include "json.hpp"

#include <map>
#include <vector>

namespace qtoda {

// Formal series supported on cone monomials, truncated at a degree bound:
// only terms of cone degree <= order are stored, zero coefficients are never
// stored, and terms iterate in lexicographic exponent order. A series of
// order M promises that every coefficient in degrees 0..M is exact; degrees
// beyond M are unknown, not zero.
class TruncatedSeries {
public:
    using TermMap = std::map<std::vector<long>, Rational>;

    TruncatedSeries(ConeVariant variant, long order);

    static TruncatedSeries one(ConeVariant variant, long order);
    // c * x^m; silently drops the term if its degree exceeds order.
    static TruncatedSeries single(const ConeMonomial& m, const Rational& c, long order);
    // Validates every key against the cone and the order bound, drops zeros.
    static TruncatedSeries from_terms(ConeVariant variant, long order, TermMap terms);

    const ConeVariant& variant() const { return variant_; }
    long order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Zero if the monomial is absent.
    Rational coeff(const std::vector<long>& exponents) const;
    const Rational& constant_term() const;

    // Copy with the coefficient at one monomial replaced (validated against
    // the cone and order; a zero value removes the term).
    TruncatedSeries with_coeff(const std::vector<long>& exponents, const Rational& value) const;

    // Same terms under a different bound. Lowering the bound truncates;
    // raising it is the caller asserting completeness up to the new bound
    // (e.g. before multiplying by a monomial that restores the slack).
    TruncatedSeries with_order(long new_order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.variant_ == b.variant_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    ConeVariant variant_;
    long order_;
    TermMap terms_;
};

// Sum; result order is the smaller of the two (degrees above it drop).
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, const Rational& c);
// Product truncated at min(f.order, g.order).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
// f * x^g at f's order; products beyond the bound drop.
TruncatedSeries mul_monomial(const TruncatedSeries& f, const ConeMonomial& g);
// Substitution x_axis -> q^{sign} x_axis: the coefficient at m picks up
// q^{sign * m_axis}. sign must be +1 or -1, axis is 1-based.
TruncatedSeries shift(const TruncatedSeries& f, int axis, int sign, const Rational& q);

// Variant A(n) -> A(n+1) (append a final axis with exponent 0) or
// A(n) -> B(n) (same exponents, larger cone). Order is preserved.
TruncatedSeries embed(const TruncatedSeries& f, const ConeVariant& target);

// Variant A only: x_i -> 1/x_{n+1-i}, an automorphism of the variant A cone.
// Degrees are preserved.
TruncatedSeries invert_axes(const TruncatedSeries& f);

// {"variant": "A"|"B", "n": .., "order": .., "terms": [{"exponent": [...],
// "coefficient": "num/den"}, ...]} with terms in lexicographic order.
nlohmann::json to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& f) { return scale(f, c); }

} // namespace qtoda
