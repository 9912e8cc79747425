#include "qtoda/param_point.hpp"

#include "qtoda/errors.hpp"

#include <stdexcept>

namespace qtoda {

std::string GenericityReport::summary(std::size_t max_items) const {
    if (violations.empty())
        return "ok";
    std::string out;
    const std::size_t shown = std::min(max_items, violations.size());
    for (std::size_t i = 0; i < shown; ++i) {
        if (i)
            out += "; ";
        out += violations[i].factor;
    }
    if (violations.size() > shown)
        out += " (+" + std::to_string(violations.size() - shown) + " more)";
    return out;
}

static std::string exp_str(const std::vector<long>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(m[i]);
    }
    return out + "]";
}

GenericityReport genericity_check(const Rational& q, const std::vector<Rational>& s, int n,
                                  long order_bound) {
    if (n < 1)
        throw std::invalid_argument("genericity_check: n must be >= 1");
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("genericity_check: s has wrong length");
    if (order_bound < 0)
        throw std::invalid_argument("genericity_check: negative order bound");

    GenericityReport rep;
    if (q.is_zero()) {
        rep.violations.push_back({"q = 0"});
        return rep;
    }
    bool zero_s = false;
    for (int i = 1; i <= n; ++i)
        if (s[static_cast<std::size_t>(i - 1)].is_zero()) {
            rep.violations.push_back({"s" + std::to_string(i) + " = 0"});
            zero_s = true;
        }
    if (zero_s)
        return rep;

    const long K = 2 * order_bound + 4;

    // 1 - q^m = 0 for some 1 <= m <= K covers q = 1 and q = -1.
    {
        Rational qp(1);
        for (long m = 1; m <= K; ++m) {
            qp *= q;
            if (qp.is_one())
                rep.violations.push_back({"1 - q^" + std::to_string(m) + " = 0"});
        }
    }

    std::vector<Rational> qpow(static_cast<std::size_t>(2 * K + 1));
    qpow[static_cast<std::size_t>(K)] = Rational(1);
    for (long k = 1; k <= K; ++k) {
        qpow[static_cast<std::size_t>(K + k)] = qpow[static_cast<std::size_t>(K + k - 1)] * q;
        qpow[static_cast<std::size_t>(K - k)] = qpow[static_cast<std::size_t>(K - k + 1)] / q;
    }
    auto qk = [&](long k) -> const Rational& { return qpow[static_cast<std::size_t>(K + k)]; };

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Rational r_ji = s[static_cast<std::size_t>(j - 1)] / s[static_cast<std::size_t>(i - 1)];
            const Rational r_ij = r_ji.inverse();
            for (long k = -K; k <= K; ++k) {
                if ((qk(k) * r_ji).is_one())
                    rep.violations.push_back({"1 - q^" + std::to_string(k) + " s" + std::to_string(j) +
                                              "/s" + std::to_string(i) + " = 0"});
                if ((qk(k) * r_ij).is_one())
                    rep.violations.push_back({"1 - q^" + std::to_string(k) + " s" + std::to_string(i) +
                                              "/s" + std::to_string(j) + " = 0"});
            }
        }

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const Rational prod = s[static_cast<std::size_t>(i - 1)] * s[static_cast<std::size_t>(j - 1)];
            for (long k = -K; k <= K; ++k)
                if ((qk(k) / prod).is_one())
                    rep.violations.push_back({"1 - q^" + std::to_string(k) + "/(s" + std::to_string(i) +
                                              " s" + std::to_string(j) + ") = 0"});
        }

    // Eigenvalue divisors of both operator variants over the truncation range.
    for (ConeType type : {ConeType::A, ConeType::B}) {
        const ConeVariant v{type, n};
        for (const ConeMonomial& m : enumerate_cone_monomials(v, order_bound)) {
            if (m.degree == 0)
                continue;
            Rational div(0);
            for (int i = 1; i <= n; ++i) {
                const long mi = m.exponents[static_cast<std::size_t>(i - 1)];
                const Rational& si = s[static_cast<std::size_t>(i - 1)];
                div += si * (pow(q, mi) - Rational(1));
                if (type == ConeType::B)
                    div += si.inverse() * (pow(q, -mi) - Rational(1));
            }
            if (div.is_zero())
                rep.violations.push_back({"eigenvalue divisor (variant " + variant_name(v) +
                                          ") = 0 at " + exp_str(m.exponents)});
        }
    }

    return rep;
}

ParamPoint ParamPoint::make(Rational q, std::vector<Rational> s, long order_bound) {
    const GenericityReport rep = genericity_check(q, s, static_cast<int>(s.size()), order_bound);
    if (!rep.ok())
        throw NonGenericPoint("non-generic parameter point: " + rep.summary());
    return ParamPoint(std::move(q), std::move(s), order_bound);
}

ParamPoint ParamPoint::reparam(std::vector<Rational> new_s) const {
    if (new_s.empty())
        throw std::invalid_argument("ParamPoint::reparam: empty parameter list");
    for (const Rational& v : new_s)
        if (v.is_zero())
            throw std::invalid_argument("ParamPoint::reparam: zero parameter");
    return ParamPoint(q_, std::move(new_s), order_bound_);
}

namespace {

constexpr long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
constexpr std::size_t kPrimeCount = sizeof(kPrimes) / sizeof(kPrimes[0]);

long pick_prime(std::mt19937_64& rng) {
    // rng() % k keeps draws identical across standard library implementations.
    return kPrimes[rng() % kPrimeCount];
}

Rational pick_prime_ratio(std::mt19937_64& rng) {
    long a = pick_prime(rng);
    long b = pick_prime(rng);
    while (b == a)
        b = pick_prime(rng);
    return Rational(a, b);
}

Rational pick_value(std::mt19937_64& rng) {
    return (rng() % 2 == 0) ? Rational(pick_prime(rng)) : pick_prime_ratio(rng);
}

} // namespace

ParamPoint draw_generic_point(int n, long order_bound, std::mt19937_64& rng, int max_retries) {
    if (n < 1)
        throw std::invalid_argument("draw_generic_point: n must be >= 1");
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        const Rational q = pick_prime_ratio(rng);
        std::vector<Rational> s;
        s.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            s.push_back(pick_value(rng));
        bool distinct = true;
        for (std::size_t i = 0; i < s.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j]) {
                    distinct = false;
                    break;
                }
        if (!distinct)
            continue;
        try {
            return ParamPoint::make(q, std::move(s), order_bound);
        } catch (const NonGenericPoint&) {
            continue;
        }
    }
    throw GenericityExhausted("draw_generic_point: no generic point found in " +
                              std::to_string(max_retries) + " attempts");
}

std::vector<Rational> draw_rationals(int count, std::mt19937_64& rng) {
    if (count < 0)
        throw std::invalid_argument("draw_rationals: negative count");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(pick_value(rng));
    return out;
}

} // namespace qtoda
