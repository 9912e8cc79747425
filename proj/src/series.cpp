#include "qtoda/series.hpp"

#include "qtoda/errors.hpp"

#include <stdexcept>

namespace qtoda {

namespace {

const Rational kZero(0);

void require_same_variant(const ConeVariant& a, const ConeVariant& b, const char* who) {
    if (a != b)
        throw VariantMismatch(std::string(who) + ": cone variants differ (" + variant_name(a) + std::to_string(a.n) +
                              " vs " + variant_name(b) + std::to_string(b.n) + ")");
}

// Degree of an exponent vector already known to lie in the cone.
long degree_in_cone(const std::vector<long>& exponents, const ConeVariant& v) {
    long prefix = 0;
    long degree = 0;
    for (int i = 0; i + 1 < v.n; ++i) {
        prefix += exponents[static_cast<std::size_t>(i)];
        degree -= prefix;
    }
    prefix += exponents[static_cast<std::size_t>(v.n - 1)];
    if (v.type == ConeType::B)
        degree -= prefix;
    return degree;
}

} // namespace

TruncatedSeries::TruncatedSeries(ConeVariant variant, long order) : variant_(variant), order_(order) {
    if (variant.n < 1)
        throw std::invalid_argument("TruncatedSeries: n must be >= 1");
    if (order < 0)
        throw std::invalid_argument("TruncatedSeries: negative order");
}

TruncatedSeries TruncatedSeries::one(ConeVariant variant, long order) {
    TruncatedSeries f(variant, order);
    f.terms_[std::vector<long>(static_cast<std::size_t>(variant.n), 0)] = Rational(1);
    return f;
}

TruncatedSeries TruncatedSeries::single(const ConeMonomial& m, const Rational& c, long order) {
    TruncatedSeries f(m.variant, order);
    if (!c.is_zero() && m.degree <= order)
        f.terms_[m.exponents] = c;
    return f;
}

TruncatedSeries TruncatedSeries::from_terms(ConeVariant variant, long order, TermMap terms) {
    TruncatedSeries f(variant, order);
    for (auto& [exp, c] : terms) {
        if (c.is_zero())
            continue;
        const ConeMonomial m = make_cone_monomial(exp, variant);
        if (m.degree > order)
            throw std::invalid_argument("TruncatedSeries::from_terms: term degree exceeds order");
        f.terms_.emplace(exp, std::move(c));
    }
    return f;
}

Rational TruncatedSeries::coeff(const std::vector<long>& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? kZero : it->second;
}

const Rational& TruncatedSeries::constant_term() const {
    const auto it = terms_.find(std::vector<long>(static_cast<std::size_t>(variant_.n), 0));
    return it == terms_.end() ? kZero : it->second;
}

TruncatedSeries TruncatedSeries::with_coeff(const std::vector<long>& exponents, const Rational& value) const {
    const ConeMonomial m = make_cone_monomial(exponents, variant_);
    if (m.degree > order_)
        throw std::invalid_argument("TruncatedSeries::with_coeff: monomial degree exceeds order");
    TruncatedSeries f = *this;
    if (value.is_zero())
        f.terms_.erase(exponents);
    else
        f.terms_[exponents] = value;
    return f;
}

TruncatedSeries TruncatedSeries::with_order(long new_order) const {
    if (new_order < 0)
        throw std::invalid_argument("TruncatedSeries::with_order: negative order");
    TruncatedSeries f(variant_, new_order);
    for (const auto& [exp, c] : terms_)
        if (degree_in_cone(exp, variant_) <= new_order)
            f.terms_.emplace(exp, c);
    return f;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_variant(f.variant(), g.variant(), "add");
    const long order = std::min(f.order(), g.order());
    TruncatedSeries::TermMap acc;
    for (const auto& [exp, c] : f.terms())
        if (degree_in_cone(exp, f.variant()) <= order)
            acc[exp] = c;
    for (const auto& [exp, c] : g.terms()) {
        if (degree_in_cone(exp, g.variant()) > order)
            continue;
        auto [it, fresh] = acc.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                acc.erase(it);
        }
    }
    return TruncatedSeries::from_terms(f.variant(), order, std::move(acc));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return add(f, scale(g, Rational(-1)));
}

TruncatedSeries scale(const TruncatedSeries& f, const Rational& c) {
    TruncatedSeries out(f.variant(), f.order());
    if (c.is_zero())
        return out;
    TruncatedSeries::TermMap acc;
    for (const auto& [exp, v] : f.terms())
        acc.emplace(exp, v * c);
    return TruncatedSeries::from_terms(f.variant(), f.order(), std::move(acc));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_variant(f.variant(), g.variant(), "mul");
    const long order = std::min(f.order(), g.order());
    const ConeVariant v = f.variant();
    TruncatedSeries::TermMap acc;
    for (const auto& [fe, fc] : f.terms()) {
        const long fd = degree_in_cone(fe, v);
        if (fd > order)
            continue;
        for (const auto& [ge, gc] : g.terms()) {
            if (fd + degree_in_cone(ge, v) > order)
                continue;
            std::vector<long> exp(fe.size());
            for (std::size_t i = 0; i < fe.size(); ++i)
                exp[i] = fe[i] + ge[i];
            auto [it, fresh] = acc.emplace(std::move(exp), fc * gc);
            if (!fresh) {
                it->second += fc * gc;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }
    return TruncatedSeries::from_terms(v, order, std::move(acc));
}

TruncatedSeries mul_monomial(const TruncatedSeries& f, const ConeMonomial& g) {
    require_same_variant(f.variant(), g.variant, "mul_monomial");
    TruncatedSeries::TermMap acc;
    for (const auto& [exp, c] : f.terms()) {
        if (degree_in_cone(exp, f.variant()) + g.degree > f.order())
            continue;
        std::vector<long> ne(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i)
            ne[i] = exp[i] + g.exponents[i];
        acc.emplace(std::move(ne), c);
    }
    return TruncatedSeries::from_terms(f.variant(), f.order(), std::move(acc));
}

TruncatedSeries shift(const TruncatedSeries& f, int axis, int sign, const Rational& q) {
    if (axis < 1 || axis > f.variant().n)
        throw std::invalid_argument("shift: axis out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("shift: sign must be +1 or -1");
    TruncatedSeries::TermMap acc;
    for (const auto& [exp, c] : f.terms())
        acc.emplace(exp, c * pow(q, sign * exp[static_cast<std::size_t>(axis - 1)]));
    return TruncatedSeries::from_terms(f.variant(), f.order(), std::move(acc));
}

TruncatedSeries embed(const TruncatedSeries& f, const ConeVariant& target) {
    const ConeVariant src = f.variant();
    if (src.type != ConeType::A)
        throw std::invalid_argument("embed: source must be variant A");
    const bool widen = target.type == ConeType::A && target.n == src.n + 1;
    const bool relax = target.type == ConeType::B && target.n == src.n;
    if (!widen && !relax)
        throw std::invalid_argument("embed: target must be A(n+1) or B(n)");
    TruncatedSeries::TermMap acc;
    for (const auto& [exp, c] : f.terms()) {
        std::vector<long> ne = exp;
        if (widen)
            ne.push_back(0);
        acc.emplace(std::move(ne), c);
    }
    return TruncatedSeries::from_terms(target, f.order(), std::move(acc));
}

TruncatedSeries invert_axes(const TruncatedSeries& f) {
    if (f.variant().type != ConeType::A)
        throw std::invalid_argument("invert_axes: variant A only");
    TruncatedSeries::TermMap acc;
    for (const auto& [exp, c] : f.terms()) {
        std::vector<long> ne(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i)
            ne[i] = -exp[exp.size() - 1 - i];
        acc.emplace(std::move(ne), c);
    }
    return TruncatedSeries::from_terms(f.variant(), f.order(), std::move(acc));
}

nlohmann::json to_json(const TruncatedSeries& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, c] : f.terms())
        terms.push_back({{"exponent", exp}, {"coefficient", c.str()}});
    return {{"variant", variant_name(f.variant())},
            {"n", f.variant().n},
            {"order", f.order()},
            {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    const std::string vs = j.at("variant").get<std::string>();
    if (vs != "A" && vs != "B")
        throw std::invalid_argument("series_from_json: variant must be \"A\" or \"B\"");
    const ConeVariant v{vs == "A" ? ConeType::A : ConeType::B, j.at("n").get<int>()};
    const long order = j.at("order").get<long>();
    TruncatedSeries::TermMap terms;
    for (const auto& t : j.at("terms")) {
        std::vector<long> exp = t.at("exponent").get<std::vector<long>>();
        Rational c = Rational::parse(t.at("coefficient").get<std::string>());
        if (!terms.emplace(std::move(exp), std::move(c)).second)
            throw std::invalid_argument("series_from_json: duplicate exponent vector");
    }
    return TruncatedSeries::from_terms(v, order, std::move(terms));
}

} // namespace qtoda
