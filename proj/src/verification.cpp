#include "qtoda/verification.hpp"

#include "qtoda/coefficients.hpp"
#include "qtoda/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtoda {

namespace {

long degree_of(const std::vector<long>& exponents, const ConeVariant& v) {
    return cone_degree(exponents, v);
}

nlohmann::json point_params(const ParamPoint& p) {
    nlohmann::json s = nlohmann::json::array();
    for (const Rational& v : p.s())
        s.push_back(v.str());
    return {{"q", p.q().str()}, {"s", std::move(s)}};
}

nlohmann::json rationals_json(const std::vector<Rational>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& v : values)
        out.push_back(v.str());
    return out;
}

Rational checked_div(const Rational& num, const Rational& den, const char* where) {
    if (den.is_zero())
        throw NonGenericPoint(std::string(where) + ": vanishing denominator");
    return num / den;
}

std::vector<Rational> lowered_s(const ParamPoint& p, int k) {
    std::vector<Rational> s = p.s();
    s[static_cast<std::size_t>(k - 1)] /= p.q();
    return s;
}

// All tuples of the given length with entries in [0, max_entry], ascending
// lexicographically.
std::vector<ThetaVector> entry_bounded_tuples(int length, long max_entry) {
    std::vector<ThetaVector> out;
    ThetaVector cur(static_cast<std::size_t>(length), 0);
    while (true) {
        out.push_back(cur);
        int pos = length - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == max_entry) {
            cur[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++cur[static_cast<std::size_t>(pos)];
    }
    return out;
}

} // namespace

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json ff = nullptr;
    if (r.first_failure)
        ff = {{"kind", r.first_failure->kind},
              {"where", r.first_failure->where},
              {"lhs", r.first_failure->lhs},
              {"rhs", r.first_failure->rhs}};
    return {{"check", r.check},      {"n", r.n},
            {"order", r.order},      {"params", r.params},
            {"seed", r.seed},        {"pass", r.pass},
            {"firstFailure", ff},    {"trustedDegree", r.trusted_degree}};
}

CheckReport series_equal_report(std::string check, const TruncatedSeries& lhs,
                                const TruncatedSeries& rhs) {
    if (lhs.variant() != rhs.variant())
        throw VariantMismatch("series_equal_report: cone variants differ");
    const long horizon = std::min(lhs.order(), rhs.order());
    const ConeVariant v = lhs.variant();

    CheckReport rep;
    rep.check = std::move(check);
    rep.n = v.n;
    rep.order = horizon;
    rep.trusted_degree = horizon;

    bool found = false;
    long best_degree = 0;
    std::vector<long> best_key;
    auto consider = [&](const std::vector<long>& key) {
        const long d = degree_of(key, v);
        if (d > horizon)
            return;
        if (lhs.coeff(key) == rhs.coeff(key))
            return;
        if (!found || d < best_degree || (d == best_degree && key < best_key)) {
            found = true;
            best_degree = d;
            best_key = key;
        }
    };
    for (const auto& [key, c] : lhs.terms())
        consider(key);
    for (const auto& [key, c] : rhs.terms())
        consider(key);

    rep.pass = !found;
    if (found)
        rep.first_failure =
            FirstFailure{"coefficient", best_key, lhs.coeff(best_key).str(), rhs.coeff(best_key).str()};
    return rep;
}

CheckReport eigen_residual_report(std::string check, const DifferenceOperator& op,
                                  const TruncatedSeries& f) {
    const TruncatedSeries residual = sub(apply(op, f), scale(f, op.eigenvalue));
    CheckReport rep;
    rep.check = std::move(check);
    rep.n = f.variant().n;
    rep.order = f.order();
    rep.trusted_degree = f.order();
    rep.pass = residual.is_zero();
    if (!rep.pass) {
        // Smallest offending monomial by (degree, lex).
        const ConeVariant v = f.variant();
        auto best = residual.terms().begin();
        long best_degree = degree_of(best->first, v);
        for (auto it = std::next(best); it != residual.terms().end(); ++it) {
            const long d = degree_of(it->first, v);
            if (d < best_degree) {
                best = it;
                best_degree = d;
            }
        }
        rep.first_failure = FirstFailure{"coefficient", best->first, best->second.str(), "0"};
    }
    return rep;
}

CheckReport value_equal_report(std::string check, std::vector<long> where, const Rational& lhs,
                               const Rational& rhs) {
    CheckReport rep;
    rep.check = std::move(check);
    rep.pass = lhs == rhs;
    if (!rep.pass)
        rep.first_failure = FirstFailure{"value", std::move(where), lhs.str(), rhs.str()};
    return rep;
}

CheckReport verify_eigen(ConeType type, const ParamPoint& p, long order) {
    const bool is_a = type == ConeType::A;
    const DifferenceOperator op = is_a ? build_toda_a(p) : build_toda_b(p);
    const TruncatedSeries f = is_a ? toda_a_direct(p, order) : toda_b_branching(p, order);
    CheckReport rep = eigen_residual_report(is_a ? "eigen-A" : "eigen-B", op, f);
    rep.params = point_params(p);
    return rep;
}

CheckReport verify_branching(const ParamPoint& p, long order) {
    const TruncatedSeries lhs = toda_b_branching(p, order);
    const TruncatedSeries rhs = solve_eigenfunction(build_toda_b(p), order);
    CheckReport rep = series_equal_report("branching", lhs, rhs);
    rep.params = point_params(p);
    return rep;
}

std::pair<TruncatedSeries, TruncatedSeries> contiguity_sides(const ParamPoint& p, long order) {
    const int n = p.n();
    const ConeVariant v{ConeType::A, n};
    const Rational& q = p.q();

    const TruncatedSeries lhs = shift(toda_a_direct(p, order), n, +1, q);

    TruncatedSeries rhs(v, order);
    for (int k = 1; k <= n; ++k) {
        // Points one q-step down in component k are certified from scratch.
        const ParamPoint pk = ParamPoint::make(q, lowered_s(p, k), p.order_bound());
        if (k == n) {
            rhs = add(rhs, toda_a_direct(pk, order));
            continue;
        }
        Rational num = pow(q, n - k);
        for (int i = k + 1; i < n; ++i)
            num *= p.s(i) / p.s(k);
        Rational den(1);
        for (int i = k + 1; i <= n; ++i)
            den *= (Rational(1) - p.s(i) / p.s(k)) * (Rational(1) - q * p.s(i) / p.s(k));
        Rational coef = checked_div(num, den, "contiguity_sides");
        if ((n - k) % 2 == 1)
            coef = -coef;
        const TruncatedSeries inner = toda_a_direct(pk, order - (n - k)).with_order(order);
        rhs = add(rhs, scale(mul_monomial(inner, ratio_monomial(v, n, k)), coef));
    }
    return {lhs, rhs};
}

CheckReport verify_contiguity(const ParamPoint& p, long order) {
    if (order < p.n() - 1)
        throw std::invalid_argument("verify_contiguity: order must be at least n - 1");
    const auto [lhs, rhs] = contiguity_sides(p, order);
    CheckReport rep = series_equal_report("contiguity", lhs, rhs);
    rep.params = point_params(p);
    return rep;
}

std::pair<Rational, Rational> partition_identity_sides(const std::vector<Rational>& a,
                                                       const std::vector<Rational>& s) {
    const int n = static_cast<int>(s.size());
    if (n < 1 || static_cast<int>(a.size()) != n - 1)
        throw std::invalid_argument("partition_identity_sides: need |s| = |a| + 1 >= 1");
    for (const Rational& v : s)
        if (v.is_zero())
            throw NonGenericPoint("partition_identity_sides: zero parameter");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(j)])
                throw NonGenericPoint("partition_identity_sides: coincident parameters");

    Rational lhs(1);
    for (const Rational& v : a)
        lhs *= v;

    Rational rhs(0);
    for (int k = 1; k <= n; ++k) {
        const Rational& sk = s[static_cast<std::size_t>(k - 1)];
        Rational num(1);
        for (int i = 1; i < n; ++i)
            num *= Rational(1) - a[static_cast<std::size_t>(i - 1)] * sk / s[static_cast<std::size_t>(i - 1)];
        Rational den(1);
        for (int i = 1; i <= n; ++i)
            if (i != k)
                den *= Rational(1) - sk / s[static_cast<std::size_t>(i - 1)];
        rhs += (sk / s[static_cast<std::size_t>(n - 1)]) * checked_div(num, den, "partition_identity_sides");
    }
    return {lhs, rhs};
}

CheckReport verify_partition_identity(const std::vector<Rational>& a,
                                      const std::vector<Rational>& s) {
    const auto [lhs, rhs] = partition_identity_sides(a, s);
    CheckReport rep = value_equal_report("partition-identity", {}, lhs, rhs);
    rep.n = static_cast<int>(s.size());
    rep.params = {{"a", rationals_json(a)}, {"s", rationals_json(s)}};
    return rep;
}

std::pair<Rational, Rational> dn_relation_sides(const ThetaVector& theta, const ParamPoint& p) {
    const int n = p.n();
    if (n < 2 || static_cast<int>(theta.size()) != n - 1)
        throw std::invalid_argument("dn_relation_sides: tuple must have length n - 1, n >= 2");
    for (long t : theta)
        if (t < 0)
            throw std::invalid_argument("dn_relation_sides: negative tuple entry");
    const Rational& q = p.q();
    PochhammerTable table(q);

    long total = 0;
    for (long t : theta)
        total += t;
    const Rational lhs = pow(q, total);

    const Rational d0 = d_toda(theta, p, table);
    Rational rhs(0);
    for (int k = 1; k < n; ++k) {
        if (theta[static_cast<std::size_t>(k - 1)] < 1)
            continue; // lowering an entry at 0 leaves the sum
        Rational num = pow(q, n - k);
        for (int i = k + 1; i < n; ++i)
            num *= p.s(i) / p.s(k);
        Rational den(1);
        for (int i = k + 1; i <= n; ++i)
            den *= (Rational(1) - p.s(i) / p.s(k)) * (Rational(1) - q * p.s(i) / p.s(k));
        Rational coef = checked_div(num, den, "dn_relation_sides");
        if ((n - k) % 2 == 1)
            coef = -coef;
        ThetaVector lowered = theta;
        --lowered[static_cast<std::size_t>(k - 1)];
        const Rational dk = d_toda(lowered, p.reparam(lowered_s(p, k)), table);
        rhs += coef * checked_div(dk, d0, "dn_relation_sides");
    }
    const Rational dn = d_toda(theta, p.reparam(lowered_s(p, n)), table);
    rhs += checked_div(dn, d0, "dn_relation_sides");
    return {lhs, rhs};
}

CheckReport verify_dn_relation(const ThetaVector& theta, const ParamPoint& p) {
    const auto [lhs, rhs] = dn_relation_sides(theta, p);
    CheckReport rep = value_equal_report("dn-relation", theta, lhs, rhs);
    rep.n = p.n();
    rep.params = point_params(p);
    rep.params["theta"] = theta;
    return rep;
}

CheckReport verify_dn_relation_all(const ParamPoint& p, long max_entry) {
    if (p.n() < 2)
        throw std::invalid_argument("verify_dn_relation_all: needs n >= 2");
    CheckReport rep;
    rep.check = "dn-relation";
    rep.n = p.n();
    rep.params = point_params(p);
    rep.params["maxEntry"] = max_entry;
    rep.pass = true;
    for (const ThetaVector& theta : entry_bounded_tuples(p.n() - 1, max_entry)) {
        const auto [lhs, rhs] = dn_relation_sides(theta, p);
        if (lhs != rhs) {
            rep.pass = false;
            rep.first_failure = FirstFailure{"value", theta, lhs.str(), rhs.str()};
            break;
        }
    }
    return rep;
}

std::pair<Rational, Rational> e_recursion_sides(const ThetaVector& theta, const ParamPoint& p) {
    const int n = p.n();
    if (static_cast<int>(theta.size()) != n)
        throw std::invalid_argument("e_recursion_sides: tuple must have length n");
    bool all_zero = true;
    for (long t : theta) {
        if (t < 0)
            throw std::invalid_argument("e_recursion_sides: negative tuple entry");
        if (t != 0)
            all_zero = false;
    }
    if (all_zero)
        throw std::invalid_argument("e_recursion_sides: tuple must be nonzero");
    const Rational& q = p.q();
    PochhammerTable table(q);

    Rational lhs(0);
    for (int i = 1; i <= n; ++i) {
        const long ti = theta[static_cast<std::size_t>(i - 1)];
        lhs += (Rational(1) - pow(q, -ti)) * p.s(i) + (Rational(1) - pow(q, ti)) / p.s(i);
    }
    lhs *= e_branch(theta, p, table);

    const long tn = theta[static_cast<std::size_t>(n - 1)];
    Rational rhs(0);
    for (int k = 1; k <= n; ++k) {
        const long tk = theta[static_cast<std::size_t>(k - 1)];
        if (tk < 1)
            continue;
        Rational num = pow(q, -tn + (k == n ? 1 : 0)) * pow(q, n - k);
        for (int i = k + 1; i < n; ++i)
            num *= pow(q, -theta[static_cast<std::size_t>(i - 1)] + tk - 1) * p.s(i) / p.s(k);
        if ((n - k + 1) % 2 == 1)
            num = -num;
        Rational den(1);
        for (int i = k + 1; i <= n; ++i) {
            const Rational b = pow(q, -theta[static_cast<std::size_t>(i - 1)] + tk - 1) * p.s(i) / p.s(k);
            den *= (Rational(1) - b) * (Rational(1) - q * b);
        }
        ThetaVector lowered = theta;
        --lowered[static_cast<std::size_t>(k - 1)];
        rhs += p.s(n) * checked_div(num, den, "e_recursion_sides") * e_branch(lowered, p, table);
    }
    return {lhs, rhs};
}

CheckReport verify_e_recursion(const ThetaVector& theta, const ParamPoint& p) {
    const auto [lhs, rhs] = e_recursion_sides(theta, p);
    CheckReport rep = value_equal_report("e-recursion", theta, lhs, rhs);
    rep.n = p.n();
    rep.params = point_params(p);
    rep.params["theta"] = theta;
    return rep;
}

CheckReport verify_e_recursion_all(const ParamPoint& p, long max_entry) {
    CheckReport rep;
    rep.check = "e-recursion";
    rep.n = p.n();
    rep.params = point_params(p);
    rep.params["maxEntry"] = max_entry;
    rep.pass = true;
    for (const ThetaVector& theta : entry_bounded_tuples(p.n(), max_entry)) {
        bool all_zero = true;
        for (long t : theta)
            if (t != 0)
                all_zero = false;
        if (all_zero)
            continue;
        const auto [lhs, rhs] = e_recursion_sides(theta, p);
        if (lhs != rhs) {
            rep.pass = false;
            rep.first_failure = FirstFailure{"value", theta, lhs.str(), rhs.str()};
            break;
        }
    }
    return rep;
}

std::pair<Rational, Rational> type_b_identity_sides(const std::vector<Rational>& big_q,
                                                    const std::vector<Rational>& s) {
    const int n = static_cast<int>(s.size());
    if (n < 1 || static_cast<int>(big_q.size()) != n)
        throw std::invalid_argument("type_b_identity_sides: need |Q| = |s| >= 1");
    for (const Rational& v : big_q)
        if (v.is_zero())
            throw NonGenericPoint("type_b_identity_sides: zero Q parameter");
    for (const Rational& v : s)
        if (v.is_zero())
            throw NonGenericPoint("type_b_identity_sides: zero parameter");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(j)])
                throw NonGenericPoint("type_b_identity_sides: coincident parameters");
            if ((s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)]).is_one())
                throw NonGenericPoint("type_b_identity_sides: reciprocal parameters");
        }

    Rational lhs(0);
    for (int i = 1; i <= n; ++i) {
        const Rational& qi = big_q[static_cast<std::size_t>(i - 1)];
        const Rational& si = s[static_cast<std::size_t>(i - 1)];
        lhs += (Rational(1) - qi) * si + (Rational(1) - qi.inverse()) / si;
    }

    Rational rhs(0);
    for (int k = 1; k <= n; ++k) {
        const Rational& sk = s[static_cast<std::size_t>(k - 1)];
        Rational num(1);
        for (int i = 1; i <= n; ++i) {
            const Rational& qi = big_q[static_cast<std::size_t>(i - 1)];
            const Rational& si = s[static_cast<std::size_t>(i - 1)];
            num *= (Rational(1) - qi * si / sk) * (Rational(1) - qi.inverse() / (si * sk));
        }
        Rational den(1);
        for (int i = 1; i <= n; ++i) {
            if (i == k)
                continue;
            const Rational& si = s[static_cast<std::size_t>(i - 1)];
            den *= (Rational(1) - si / sk) * (Rational(1) - (si * sk).inverse());
        }
        rhs += sk * checked_div(num, den, "type_b_identity_sides");
    }
    return {lhs, rhs};
}

CheckReport verify_type_b_identity(const std::vector<Rational>& big_q,
                                   const std::vector<Rational>& s) {
    const auto [lhs, rhs] = type_b_identity_sides(big_q, s);
    CheckReport rep = value_equal_report("type-b-identity", {}, lhs, rhs);
    rep.n = static_cast<int>(s.size());
    rep.params = {{"Q", rationals_json(big_q)}, {"s", rationals_json(s)}};
    return rep;
}

CheckReport verify_symmetry(const ParamPoint& p, long order) {
    const TruncatedSeries lhs = toda_a_inverted(p, order);
    const TruncatedSeries rhs = toda_a_direct(p, order);
    CheckReport rep = series_equal_report("symmetry", lhs, rhs);
    rep.params = point_params(p);
    return rep;
}

std::vector<std::string> all_check_names(int n) {
    std::vector<std::string> names = {"eigen-A",  "eigen-B",     "branching",
                                      "contiguity", "partition-identity", "dn-relation",
                                      "e-recursion", "type-b-identity", "symmetry"};
    if (n == 1)
        names.erase(std::find(names.begin(), names.end(), "dn-relation"));
    return names;
}

ParamPoint draw_verified_point(int n, long order_bound, std::mt19937_64& rng, int max_retries) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        ParamPoint p = draw_generic_point(n, order_bound, rng, max_retries);
        // The checks also evaluate at the reversed-inverted point and at every
        // one-step lowering; require those to be generic too.
        bool ok = true;
        {
            std::vector<Rational> rev;
            for (int i = n; i >= 1; --i)
                rev.push_back(p.s(i).inverse());
            ok = genericity_check(p.q(), rev, n, order_bound).ok();
        }
        for (int k = 1; ok && k <= n; ++k)
            ok = genericity_check(p.q(), lowered_s(p, k), n, order_bound).ok();
        if (ok)
            return p;
    }
    throw GenericityExhausted("draw_verified_point: no fully generic point found in " +
                              std::to_string(max_retries) + " attempts");
}

namespace {

std::vector<Rational> draw_distinct(int count, std::mt19937_64& rng, bool forbid_reciprocal) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rational> s = draw_rationals(count, rng);
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (s[i] == s[j] || (forbid_reciprocal && (s[i] * s[j]).is_one())) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            return s;
    }
    throw GenericityExhausted("draw_distinct: no admissible tuple found");
}

CheckReport run_identity_draws(const std::string& name, int n, int draws, std::mt19937_64& rng) {
    CheckReport rep;
    rep.check = name;
    rep.n = n;
    rep.params = {{"draws", draws}};
    rep.pass = true;
    for (int d = 0; d < draws; ++d) {
        CheckReport one;
        if (name == "partition-identity") {
            const std::vector<Rational> a = draw_rationals(n - 1, rng);
            const std::vector<Rational> s = draw_distinct(n, rng, false);
            one = verify_partition_identity(a, s);
        } else {
            const std::vector<Rational> big_q = draw_rationals(n, rng);
            const std::vector<Rational> s = draw_distinct(n, rng, true);
            one = verify_type_b_identity(big_q, s);
        }
        if (!one.pass) {
            rep.pass = false;
            rep.first_failure = one.first_failure;
            rep.first_failure->where = {d};
            rep.params["failingDraw"] = one.params;
            break;
        }
    }
    return rep;
}

} // namespace

std::vector<CheckReport> run_verification(const VerifySettings& settings) {
    if (settings.n < 1)
        throw std::invalid_argument("run_verification: n must be >= 1");
    if (settings.order < 0)
        throw std::invalid_argument("run_verification: negative order");
    if (settings.points < 1)
        throw std::invalid_argument("run_verification: points must be >= 1");

    const std::vector<std::string> known = all_check_names(settings.n);
    std::vector<std::string> selected;
    if (settings.checks.empty()) {
        selected = known;
    } else {
        for (const std::string& c : settings.checks) {
            if (std::find(known.begin(), known.end(), c) == known.end())
                throw std::invalid_argument("run_verification: unknown check '" + c + "'");
        }
        // Keep the canonical execution order regardless of request order.
        for (const std::string& c : known)
            if (std::find(settings.checks.begin(), settings.checks.end(), c) != settings.checks.end())
                selected.push_back(c);
    }

    std::mt19937_64 master(settings.seed);
    std::vector<std::uint64_t> point_seeds;
    point_seeds.reserve(static_cast<std::size_t>(settings.points));
    for (int j = 0; j < settings.points; ++j)
        point_seeds.push_back(master());

    const long bound =
        std::max({settings.order, settings.theta_entry_bound, static_cast<long>(settings.n - 1)});

    std::vector<CheckReport> out;
    for (const std::string& check : selected) {
        for (int j = 0; j < settings.points; ++j) {
            std::mt19937_64 rng(point_seeds[static_cast<std::size_t>(j)]);
            CheckReport rep;
            if (check == "partition-identity" || check == "type-b-identity") {
                rep = run_identity_draws(check, settings.n, settings.identity_draws, rng);
            } else {
                const ParamPoint p = draw_verified_point(settings.n, bound, rng);
                if (check == "eigen-A")
                    rep = verify_eigen(ConeType::A, p, settings.order);
                else if (check == "eigen-B")
                    rep = verify_eigen(ConeType::B, p, settings.order);
                else if (check == "branching")
                    rep = verify_branching(p, settings.order);
                else if (check == "contiguity")
                    rep = verify_contiguity(p, std::max<long>(settings.order, settings.n - 1));
                else if (check == "dn-relation")
                    rep = verify_dn_relation_all(p, settings.theta_entry_bound);
                else if (check == "e-recursion")
                    rep = verify_e_recursion_all(p, settings.theta_entry_bound);
                else
                    rep = verify_symmetry(p, settings.order);
            }
            rep.seed = point_seeds[static_cast<std::size_t>(j)];
            out.push_back(std::move(rep));
        }
    }
    return out;
}

} // namespace qtoda
