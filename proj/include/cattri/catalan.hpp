#pragma once

// The Catalan triangle B(n,k) = (k/n) C(2n, n-k) and the Shapiro row sum.

#include <vector>

#include "cattri/check.hpp"
#include "cattri/integer.hpp"

namespace cattri {

// B(n,k) for 1 <= k <= n. The division by n is exact; an inexact division
// would mean a kernel bug and throws.
inline Int catalan_entry(unsigned long n, long k) {
    if (n == 0) throw std::invalid_argument("catalan_entry: n must be positive");
    if (k < 1 || static_cast<unsigned long>(k) > n)
        throw std::invalid_argument("catalan_entry: k out of range 1..n");
    return divide_exact(Int(k) * binom(2 * static_cast<long>(n),
                                       static_cast<long>(n) - k),
                        Int(n));
}

// B(n,k) extended by the vanishing binomial: 0 for k > n. Used by sums whose
// upper limit exceeds the triangle row (conjectures 7.5-7.9).
inline Int catalan_value(unsigned long n, long k) {
    if (k < 1) throw std::invalid_argument("catalan_value: k must be positive");
    if (static_cast<unsigned long>(k) > n) return 0;
    return catalan_entry(n, k);
}

struct TriangleRow {
    unsigned long n = 0;
    std::vector<Int> entries;  // entries[k-1] = B(n,k), k = 1..n

    const Int& at(unsigned long k) const {
        if (k < 1 || k > n) throw std::invalid_argument("TriangleRow: k out of range");
        return entries[k - 1];
    }
};

inline TriangleRow catalan_row(unsigned long n) {
    TriangleRow row;
    row.n = n;
    row.entries.reserve(n);
    for (unsigned long k = 1; k <= n; ++k) row.entries.push_back(catalan_entry(n, k));
    return row;
}

// Sum_{k=1..n} k C(2n, n-k) = (n/2) C(2n, n).
inline IdentityCheckResult shapiro_row_sum_check(unsigned long n) {
    Int lhs = 0;
    for (unsigned long k = 1; k <= n; ++k)
        lhs += Int(k) * binom(2 * static_cast<long>(n),
                              static_cast<long>(n) - static_cast<long>(k));
    Rat rhs = make_rat(Int(n) * binom(2 * static_cast<long>(n), static_cast<long>(n)),
                       Int(2));
    return make_check("shapiro", {static_cast<long>(n)}, Rat(lhs), rhs);
}

}  // namespace cattri
