#pragma once

#include "qtoda/rational.hpp"

#include <map>
#include <vector>

namespace qtoda {

// Finite q-Pochhammer symbol (a; q)_n = prod_{k=1}^{n} (1 - q^{k-1} a).
// Empty product for n == 0. Throws std::invalid_argument for n < 0.
Rational qpoch(const Rational& a, const Rational& q, long n);

// Memoizes (a; q)_n for a fixed q as prefix products per base a, so that
// repeated evaluations during a series construction cost one multiplication
// per new length. Not safe for concurrent use; each computation owns its own
// table.
class PochhammerTable {
public:
    explicit PochhammerTable(Rational q) : q_(std::move(q)) {}

    const Rational& q() const { return q_; }
    const Rational& operator()(const Rational& a, long n);

private:
    Rational q_;
    std::map<Rational, std::vector<Rational>> prefix_;
};

} // namespace qtoda
