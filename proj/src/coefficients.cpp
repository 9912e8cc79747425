#include "qtoda/coefficients.hpp"

#include "qtoda/errors.hpp"

#include <stdexcept>

namespace qtoda {

namespace {

// Pochhammer factors appear only in denominators here; a zero means the
// point sits on an excluded hyperplane.
Rational inv_poch(PochhammerTable& table, const Rational& base, long len, const char* where) {
    const Rational& v = table(base, len);
    if (v.is_zero())
        throw NonGenericPoint(std::string(where) + ": factor (" + base.str() + "; q)_" +
                              std::to_string(len) + " vanishes");
    return v.inverse();
}

} // namespace

Rational c_toda(const ThetaMatrix& theta, const ParamPoint& p, PochhammerTable& table) {
    const int n = p.n();
    if (theta.n() != n)
        throw std::invalid_argument("c_toda: matrix size does not match parameter point");
    const Rational& q = p.q();

    Rational r(1);
    for (int k = 2; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
            const long t_ik = theta.at(i, k);
            for (int j = i; j < k; ++j) {
                long a_exp = 0; // sum_{a>k} (theta_{i,a} - theta_{j+1,a})
                long b_exp = theta.at(j, k) - t_ik;
                for (int a = k + 1; a <= n; ++a) {
                    a_exp += theta.at(i, a) - theta.at(j + 1, a);
                    b_exp -= theta.at(i, a) - theta.at(j, a);
                }
                r *= inv_poch(table, pow(q, a_exp + 1) * p.s(j + 1) / p.s(i), t_ik, "c_toda");
                r *= pow(q, t_ik) *
                     inv_poch(table, pow(q, b_exp + 1) * p.s(i) / p.s(j), t_ik, "c_toda");
            }
        }
    }
    return r;
}

Rational c_toda(const ThetaMatrix& theta, const ParamPoint& p) {
    PochhammerTable table(p.q());
    return c_toda(theta, p, table);
}

Rational d_toda(const ThetaVector& theta, const ParamPoint& p, PochhammerTable& table) {
    const int n = p.n();
    if (n < 2)
        throw std::invalid_argument("d_toda: needs n >= 2");
    if (static_cast<int>(theta.size()) != n - 1)
        throw std::invalid_argument("d_toda: tuple must have length n - 1");
    for (long t : theta)
        if (t < 0)
            return Rational(0);
    const Rational& q = p.q();

    Rational r(1);
    for (int i = 1; i < n; ++i) {
        const long ti = theta[static_cast<std::size_t>(i - 1)];
        r *= inv_poch(table, q, ti, "d_toda");
        r *= pow(q, ti) * inv_poch(table, q * p.s(n) / p.s(i), ti, "d_toda");
    }
    for (int i = 1; i < n; ++i) {
        const long ti = theta[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j < n; ++j) {
            const long tj = theta[static_cast<std::size_t>(j - 1)];
            r *= inv_poch(table, q * p.s(j) / p.s(i), ti, "d_toda");
            r *= pow(q, ti) *
                 inv_poch(table, pow(q, tj - ti + 1) * p.s(i) / p.s(j), ti, "d_toda");
        }
    }
    return r;
}

Rational d_toda(const ThetaVector& theta, const ParamPoint& p) {
    PochhammerTable table(p.q());
    return d_toda(theta, p, table);
}

Rational e_branch(const ThetaVector& theta, const ParamPoint& p, PochhammerTable& table) {
    const int n = p.n();
    if (static_cast<int>(theta.size()) != n)
        throw std::invalid_argument("e_branch: tuple must have length n");
    for (long t : theta)
        if (t < 0)
            return Rational(0);
    const Rational& q = p.q();

    Rational r(1);
    for (int k = 1; k <= n; ++k) {
        const long tk = theta[static_cast<std::size_t>(k - 1)];
        r *= pow(q, (n - k + 1) * tk);
        r *= inv_poch(table, q, tk, "e_branch");
        r *= inv_poch(table, q / (p.s(k) * p.s(k)), tk, "e_branch");
    }
    for (int i = 1; i <= n; ++i) {
        const long ti = theta[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= n; ++j) {
            const long tj = theta[static_cast<std::size_t>(j - 1)];
            r *= inv_poch(table, q * p.s(j) / p.s(i), ti, "e_branch");
            r *= inv_poch(table, pow(q, tj - ti + 1) * p.s(i) / p.s(j), ti, "e_branch");
            const Rational rec = q / (p.s(i) * p.s(j));
            r *= table(rec, ti + tj);
            r *= inv_poch(table, rec, ti, "e_branch");
            r *= inv_poch(table, rec, tj, "e_branch");
        }
    }
    return r;
}

Rational e_branch(const ThetaVector& theta, const ParamPoint& p) {
    PochhammerTable table(p.q());
    return e_branch(theta, p, table);
}

} // namespace qtoda
