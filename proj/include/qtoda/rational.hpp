#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtoda {

// Arbitrary-precision rational number, kept in lowest terms with a positive
// denominator. All arithmetic is exact; nothing here rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "num" or "num/den" with an optional leading sign; surrounding
    // whitespace is tolerated. Result is reduced.
    static Rational parse(const std::string& text) {
        std::size_t b = 0, e = text.size();
        while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
        const std::string t = text.substr(b, e - b);
        if (t.empty())
            throw std::invalid_argument("Rational::parse: empty string");
        mpq_class v;
        if (v.set_str(t, 10) != 0)
            throw std::invalid_argument("Rational::parse: malformed rational '" + t + "'");
        if (sgn(v.get_den()) == 0)
            throw std::invalid_argument("Rational::parse: zero denominator in '" + t + "'");
        v.canonicalize();
        return raw_make(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return raw_make(std::move(r));
    }

    Rational operator-() const { return raw_make(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    static Rational raw_make(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;

    friend Rational pow(const Rational&, long);
};

// base^exponent with integer exponent of either sign; pow(x, 0) == 1.
inline Rational pow(const Rational& base, long exponent) {
    if (exponent == 0)
        return Rational(1);
    if (exponent < 0)
        return pow(base.inverse(), -exponent);
    // Numerator and denominator are coprime, so their powers are too.
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.raw().get_mpq_t()),
               static_cast<unsigned long>(exponent));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.raw().get_mpq_t()),
               static_cast<unsigned long>(exponent));
    return Rational::raw_make(std::move(r));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace qtoda
