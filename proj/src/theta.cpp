#include "qtoda/theta.hpp"

#include <functional>
#include <stdexcept>

namespace qtoda {

static std::size_t upper_size(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

ThetaMatrix::ThetaMatrix(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("ThetaMatrix: n must be >= 1");
    entries_.assign(upper_size(n), 0);
}

ThetaMatrix::ThetaMatrix(int n, std::vector<long> upper_entries) : n_(n), entries_(std::move(upper_entries)) {
    if (n < 1)
        throw std::invalid_argument("ThetaMatrix: n must be >= 1");
    if (entries_.size() != upper_size(n))
        throw std::invalid_argument("ThetaMatrix: wrong entry count");
    for (long e : entries_)
        if (e < 0)
            throw std::invalid_argument("ThetaMatrix: negative entry");
}

std::size_t ThetaMatrix::index(int i, int j) const {
    if (i < 1 || j <= i || j > n_)
        throw std::out_of_range("ThetaMatrix: need 1 <= i < j <= n");
    // Row i starts after rows 1..i-1, which hold (n-1) + ... + (n-i+1) entries.
    const std::size_t row_offset =
        static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) - static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2;
    return row_offset + static_cast<std::size_t>(j - i - 1);
}

long ThetaMatrix::at(int i, int j) const { return entries_[index(i, j)]; }

void ThetaMatrix::set(int i, int j, long value) {
    if (value < 0)
        throw std::invalid_argument("ThetaMatrix: negative entry");
    entries_[index(i, j)] = value;
}

long ThetaMatrix::degree() const {
    long d = 0;
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            d += static_cast<long>(j - i) * at(i, j);
    return d;
}

std::vector<long> ThetaMatrix::monomial_exponents() const {
    std::vector<long> exp(static_cast<std::size_t>(n_), 0);
    for (int i = 1; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            const long t = at(i, j);
            exp[static_cast<std::size_t>(j - 1)] += t;
            exp[static_cast<std::size_t>(i - 1)] -= t;
        }
    return exp;
}

ThetaMatrix ThetaMatrix::truncated() const {
    if (n_ < 2)
        throw std::logic_error("ThetaMatrix::truncated: nothing to drop");
    ThetaMatrix t(n_ - 1);
    for (int i = 1; i < n_ - 1; ++i)
        for (int j = i + 1; j <= n_ - 1; ++j)
            t.set(i, j, at(i, j));
    return t;
}

std::vector<long> ThetaMatrix::last_column() const {
    std::vector<long> col;
    col.reserve(static_cast<std::size_t>(n_ - 1));
    for (int i = 1; i < n_; ++i)
        col.push_back(at(i, n_));
    return col;
}

std::vector<ThetaMatrix> enumerate_theta_matrices(int n, long max_degree) {
    if (n < 1)
        throw std::invalid_argument("enumerate_theta_matrices: n must be >= 1");
    if (max_degree < 0)
        throw std::invalid_argument("enumerate_theta_matrices: negative degree bound");

    // Row-major list of (i, j) pairs with per-entry degree weight j - i.
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            slots.emplace_back(i, j);

    std::vector<ThetaMatrix> out;
    ThetaMatrix current(n);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long remaining) {
        if (pos == slots.size()) {
            out.push_back(current);
            return;
        }
        const auto [i, j] = slots[pos];
        const long w = j - i;
        for (long t = 0; w * t <= remaining; ++t) {
            current.set(i, j, t);
            rec(pos + 1, remaining - w * t);
        }
        current.set(i, j, 0);
    };
    rec(0, max_degree);
    return out;
}

std::vector<ThetaVector> enumerate_weighted_vectors(const std::vector<long>& weights, long max_total) {
    if (max_total < 0)
        throw std::invalid_argument("enumerate_weighted_vectors: negative bound");
    for (long w : weights)
        if (w <= 0)
            throw std::invalid_argument("enumerate_weighted_vectors: weights must be positive");

    std::vector<ThetaVector> out;
    ThetaVector current(weights.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long remaining) {
        if (pos == weights.size()) {
            out.push_back(current);
            return;
        }
        const long w = weights[pos];
        for (long t = 0; w * t <= remaining; ++t) {
            current[pos] = t;
            rec(pos + 1, remaining - w * t);
        }
        current[pos] = 0;
    };
    rec(0, max_total);
    return out;
}

} // namespace qtoda
