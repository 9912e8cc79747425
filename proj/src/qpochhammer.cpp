#include "qtoda/qpochhammer.hpp"

#include <stdexcept>

namespace qtoda {

Rational qpoch(const Rational& a, const Rational& q, long n) {
    if (n < 0)
        throw std::invalid_argument("qpoch: negative length");
    Rational result(1);
    Rational qk(1); // q^{k-1}
    for (long k = 1; k <= n; ++k) {
        result *= Rational(1) - qk * a;
        qk *= q;
    }
    return result;
}

const Rational& PochhammerTable::operator()(const Rational& a, long n) {
    if (n < 0)
        throw std::invalid_argument("PochhammerTable: negative length");
    std::vector<Rational>& pre = prefix_[a];
    if (pre.empty())
        pre.push_back(Rational(1));
    while (static_cast<long>(pre.size()) <= n) {
        const long k = static_cast<long>(pre.size()); // next length
        pre.push_back(pre.back() * (Rational(1) - pow(q_, k - 1) * a));
    }
    return pre[static_cast<std::size_t>(n)];
}

} // namespace qtoda
