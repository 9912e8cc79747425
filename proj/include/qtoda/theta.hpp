#pragma once

#include "qtoda/cone.hpp"

#include <vector>

namespace qtoda {

// Strictly upper triangular matrix of nonnegative integer multiplicities
// theta_{i,j}, 1 <= i < j <= n, stored row-major. Indexes combinatorial data
// for series coefficients: the matrix encodes the monomial
// prod_{i<j} (x_j / x_i)^{theta_{i,j}}, whose cone degree is
// sum (j - i) * theta_{i,j}.
class ThetaMatrix {
public:
    explicit ThetaMatrix(int n);
    ThetaMatrix(int n, std::vector<long> upper_entries); // row-major (1,2),(1,3),..,(n-1,n)

    int n() const { return n_; }

    // 1-based, requires i < j.
    long at(int i, int j) const;
    void set(int i, int j, long value);

    long degree() const;

    // Exponent vector of prod (x_j/x_i)^{theta_{i,j}} in x_1..x_n.
    std::vector<long> monomial_exponents() const;

    // The leading (n-1) x (n-1) block.
    ThetaMatrix truncated() const;

    // (theta_{1,n}, ..., theta_{n-1,n}).
    std::vector<long> last_column() const;

    const std::vector<long>& entries() const { return entries_; }

    friend bool operator==(const ThetaMatrix& a, const ThetaMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<long> entries_;
};

// Every ThetaMatrix of degree <= max_degree, enumerated by depth-first search
// over entries in row-major order with ascending values. Deterministic.
std::vector<ThetaMatrix> enumerate_theta_matrices(int n, long max_degree);

// Nonnegative integer tuples used by the layered series constructions.
using ThetaVector = std::vector<long>;

// All tuples t (same length as weights, entries >= 0) with
// sum weights[i] * t[i] <= max_total, by depth-first search with ascending
// entries. Deterministic.
std::vector<ThetaVector> enumerate_weighted_vectors(const std::vector<long>& weights, long max_total);

} // namespace qtoda
