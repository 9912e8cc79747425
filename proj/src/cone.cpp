#include "qtoda/cone.hpp"

#include <functional>
#include <stdexcept>

namespace qtoda {

std::string variant_name(const ConeVariant& v) {
    return v.type == ConeType::A ? "A" : "B";
}

static void check_variant(const ConeVariant& v) {
    if (v.n < 1)
        throw std::invalid_argument("ConeVariant: n must be >= 1");
}

ConeCoordsResult cone_coords(std::span<const long> exponents, const ConeVariant& variant) {
    check_variant(variant);
    if (static_cast<int>(exponents.size()) != variant.n)
        throw std::invalid_argument("cone_coords: exponent vector has wrong length");

    ConeCoordsResult res;
    std::vector<long> coords;
    coords.reserve(static_cast<std::size_t>(coord_count(variant)));
    long prefix = 0;
    long degree = 0;
    for (int i = 0; i + 1 < variant.n; ++i) {
        prefix += exponents[static_cast<std::size_t>(i)];
        const long a = -prefix; // coefficient of x_{i+1}/x_i (0-based slot i)
        if (a < 0) {
            res.reject_coord = i;
            res.reject_value = a;
            return res;
        }
        coords.push_back(a);
        degree += a;
    }
    prefix += exponents[static_cast<std::size_t>(variant.n - 1)];
    if (variant.type == ConeType::B) {
        const long b = -prefix; // coefficient of 1/x_n
        if (b < 0) {
            res.reject_coord = variant.n - 1;
            res.reject_value = b;
            return res;
        }
        coords.push_back(b);
        degree += b;
    } else if (prefix != 0) {
        // Variant A monomials must have total exponent zero.
        res.reject_coord = variant.n - 1;
        res.reject_value = -prefix;
        return res;
    }

    ConeMonomial m;
    m.variant = variant;
    m.exponents.assign(exponents.begin(), exponents.end());
    m.coords = std::move(coords);
    m.degree = degree;
    res.monomial = std::move(m);
    return res;
}

ConeMonomial make_cone_monomial(std::vector<long> exponents, const ConeVariant& variant) {
    ConeCoordsResult res = cone_coords(exponents, variant);
    if (!res.inside())
        throw std::invalid_argument("make_cone_monomial: exponent vector outside cone (coordinate " +
                                    std::to_string(res.reject_coord) + " resolves to " +
                                    std::to_string(res.reject_value) + ")");
    return std::move(*res.monomial);
}

ConeMonomial zero_monomial(const ConeVariant& variant) {
    check_variant(variant);
    ConeMonomial m;
    m.variant = variant;
    m.exponents.assign(static_cast<std::size_t>(variant.n), 0);
    m.coords.assign(static_cast<std::size_t>(coord_count(variant)), 0);
    m.degree = 0;
    return m;
}

ConeMonomial monomial_from_coords(const ConeVariant& variant, std::span<const long> coords) {
    check_variant(variant);
    if (static_cast<int>(coords.size()) != coord_count(variant))
        throw std::invalid_argument("monomial_from_coords: wrong coordinate count");
    ConeMonomial m;
    m.variant = variant;
    m.coords.assign(coords.begin(), coords.end());
    m.exponents.assign(static_cast<std::size_t>(variant.n), 0);
    m.degree = 0;
    long prev_prefix = 0;
    for (int i = 0; i < variant.n; ++i) {
        long prefix;
        if (i + 1 < variant.n)
            prefix = -coords[static_cast<std::size_t>(i)];
        else
            prefix = variant.type == ConeType::B ? -coords[static_cast<std::size_t>(variant.n - 1)] : 0;
        if (i < coord_count(variant)) {
            if (coords[static_cast<std::size_t>(i)] < 0)
                throw std::invalid_argument("monomial_from_coords: negative coordinate");
            m.degree += coords[static_cast<std::size_t>(i)];
        }
        m.exponents[static_cast<std::size_t>(i)] = prefix - prev_prefix;
        prev_prefix = prefix;
    }
    return m;
}

ConeMonomial ratio_monomial(const ConeVariant& variant, int num_axis, int den_axis) {
    check_variant(variant);
    if (den_axis < 1 || num_axis <= den_axis || num_axis > variant.n)
        throw std::invalid_argument("ratio_monomial: need 1 <= den < num <= n");
    std::vector<long> exp(static_cast<std::size_t>(variant.n), 0);
    exp[static_cast<std::size_t>(num_axis - 1)] = 1;
    exp[static_cast<std::size_t>(den_axis - 1)] = -1;
    return make_cone_monomial(std::move(exp), variant);
}

ConeMonomial inverse_monomial(const ConeVariant& variant, int axis) {
    check_variant(variant);
    if (variant.type != ConeType::B)
        throw std::invalid_argument("inverse_monomial: 1/x_i lies outside the variant A cone");
    if (axis < 1 || axis > variant.n)
        throw std::invalid_argument("inverse_monomial: axis out of range");
    std::vector<long> exp(static_cast<std::size_t>(variant.n), 0);
    exp[static_cast<std::size_t>(axis - 1)] = -1;
    return make_cone_monomial(std::move(exp), variant);
}

long cone_degree(std::span<const long> exponents, const ConeVariant& variant) {
    ConeCoordsResult res = cone_coords(exponents, variant);
    if (!res.inside())
        throw std::invalid_argument("cone_degree: exponent vector outside cone");
    return res.monomial->degree;
}

std::vector<ConeMonomial> enumerate_cone_monomials(const ConeVariant& variant, long max_degree) {
    check_variant(variant);
    if (max_degree < 0)
        throw std::invalid_argument("enumerate_cone_monomials: negative degree bound");
    std::vector<ConeMonomial> out;
    const int k = coord_count(variant);
    std::vector<long> coords(static_cast<std::size_t>(k), 0);
    std::function<void(int, long)> rec = [&](int pos, long remaining) {
        if (pos == k) {
            out.push_back(monomial_from_coords(variant, coords));
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            coords[static_cast<std::size_t>(pos)] = c;
            rec(pos + 1, remaining - c);
        }
        coords[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, max_degree);
    return out;
}

} // namespace qtoda
