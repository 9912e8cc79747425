#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qtoda {

// Laurent monomials in x_1..x_n are graded against a simplicial cone of
// "lowering" directions. Variant A is spanned by the ratios x_{i+1}/x_i for
// i = 1..n-1; variant B additionally contains 1/x_n. Cone coordinates are
// the (unique) expansion of a monomial in those generators; a monomial lies
// in the cone iff all coordinates are nonnegative, and its degree is the
// coordinate sum.
enum class ConeType { A, B };

struct ConeVariant {
    ConeType type;
    int n; // number of x variables, n >= 1
};

inline bool operator==(const ConeVariant& a, const ConeVariant& b) {
    return a.type == b.type && a.n == b.n;
}
inline bool operator!=(const ConeVariant& a, const ConeVariant& b) { return !(a == b); }

// Number of cone generators: n-1 for variant A, n for variant B.
inline int coord_count(const ConeVariant& v) {
    return v.type == ConeType::A ? v.n - 1 : v.n;
}

std::string variant_name(const ConeVariant& v); // "A" or "B"

struct ConeMonomial {
    ConeVariant variant;
    std::vector<long> exponents; // exponent of x_i, length n
    std::vector<long> coords;    // expansion in cone generators
    long degree = 0;             // sum of coords
};

// Outcome of resolving an exponent vector against the cone. On rejection,
// reject_coord is the index (0-based, in generator order) of the first
// coordinate that is negative, or, for variant A, the first position whose
// full prefix sum is nonzero where it must vanish.
struct ConeCoordsResult {
    std::optional<ConeMonomial> monomial;
    int reject_coord = -1;
    long reject_value = 0;

    bool inside() const { return monomial.has_value(); }
};

ConeCoordsResult cone_coords(std::span<const long> exponents, const ConeVariant& variant);

// As cone_coords, but throws std::invalid_argument when the monomial lies
// outside the cone.
ConeMonomial make_cone_monomial(std::vector<long> exponents, const ConeVariant& variant);

ConeMonomial zero_monomial(const ConeVariant& variant);
ConeMonomial monomial_from_coords(const ConeVariant& variant, std::span<const long> coords);

// x_num / x_den with 1 <= den < num <= n; a degree-(num - den) cone element.
ConeMonomial ratio_monomial(const ConeVariant& variant, int num_axis, int den_axis);

// 1 / x_axis; only a cone element for variant B, degree n + 1 - axis.
ConeMonomial inverse_monomial(const ConeVariant& variant, int axis);

// Degree of an exponent vector known to lie in the cone; throws otherwise.
long cone_degree(std::span<const long> exponents, const ConeVariant& variant);

// Every cone monomial of degree <= max_degree, in lexicographic coordinate
// order. Deterministic.
std::vector<ConeMonomial> enumerate_cone_monomials(const ConeVariant& variant, long max_degree);

} // namespace qtoda
