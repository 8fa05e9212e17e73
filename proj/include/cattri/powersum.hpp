#pragma once

// Odd and even power sums sum_k C(2n,n-k) k^e, the f(n,k,r) family with its
// recurrence, and the half-integer classification of Theorem-style quotients.

#include <vector>

#include "cattri/check.hpp"
#include "cattri/integer.hpp"

namespace cattri {

// f(n,k,r) = C(2n-2k,n-k) sum_{i=0..k} C(2n,i) C_gen(2k-2n,k-i) (n-i)^{2r+1}.
inline Int f_nk(unsigned long n, unsigned long k, unsigned long r) {
    if (k > n) throw std::invalid_argument("f_nk: requires k <= n");
    const long nl = static_cast<long>(n), kl = static_cast<long>(k);
    Int inner = 0;
    for (long i = 0; i <= kl; ++i) {
        Int term = binom(2 * nl, i) * binom_gen(2 * kl - 2 * nl, kl - i);
        term *= pow_int(Int(nl - i), 2 * r + 1);
        inner += term;
    }
    return binom(2 * nl - 2 * kl, nl - kl) * inner;
}

// Recurrence f(n,k,r) = n^2 f(n,k,r-1) - 2n(2n-1) f(n-1,k-1,r-1); the k = 0
// case has no second branch.
inline IdentityCheckResult f_recurrence_check(unsigned long n, unsigned long k,
                                              unsigned long r) {
    if (r < 1) throw std::invalid_argument("f_recurrence_check: requires r >= 1");
    const long nl = static_cast<long>(n);
    Int rhs = Int(nl) * Int(nl) * f_nk(n, k, r - 1);
    if (k >= 1 && n >= 2) rhs -= Int(2 * nl) * Int(2 * nl - 1) * f_nk(n - 1, k - 1, r - 1);
    return make_check("f-recurrence",
                      {nl, static_cast<long>(k), static_cast<long>(r)},
                      Rat(f_nk(n, k, r)), Rat(rhs));
}

// sum_{k=1..n} C(2n,n-k) k^{2r+1} against divisor n^2 C(2n,n). Also recomputes
// the sum as (1/2) sum_k f(n,k,r); a mismatch there is a kernel bug.
inline DivisibilityVerdict odd_power_sum(unsigned long n, unsigned long r) {
    if (n == 0) throw std::invalid_argument("odd_power_sum: n must be positive");
    const long nl = static_cast<long>(n);
    Int sum = 0;
    for (long k = 1; k <= nl; ++k)
        sum += binom(2 * nl, nl - k) * pow_int(Int(k), 2 * r + 1);

    Int f_total = 0;
    for (unsigned long k = 0; k <= r && k <= n; ++k) f_total += f_nk(n, k, r);
    if (Rat(sum) != make_rat(f_total, Int(2)))
        throw std::logic_error("odd_power_sum: f-family path disagrees with direct sum");

    return make_verdict(sum, Int(nl) * Int(nl) * binom(2 * nl, nl));
}

// The four printed closed forms for k^3, k^5, k^7, k^9.
inline std::vector<IdentityCheckResult> odd_power_closed_forms_check(unsigned long n) {
    const long nl = static_cast<long>(n);
    const Int nn(nl);
    const Rat half_n2c = make_rat(nn * nn * binom(2 * nl, nl), Int(2));
    const Rat factors[4] = {
        Rat(1),
        Rat(2 * nn - 1),
        Rat(6 * nn * nn - 8 * nn + 3),
        Rat(24 * pow_int(nn, 3) - 60 * nn * nn + 54 * nn - 17),
    };
    std::vector<IdentityCheckResult> out;
    for (unsigned long r = 1; r <= 4; ++r) {
        Int sum = 0;
        for (long k = 1; k <= nl; ++k)
            sum += binom(2 * nl, nl - k) * pow_int(Int(k), 2 * r + 1);
        out.push_back(make_check("odd-closed-k" + std::to_string(2 * r + 1), {nl},
                                 Rat(sum), half_n2c * factors[r - 1]));
    }
    return out;
}

// Whether (sum_k f(n,k,r)) / (n^2 C(2n,n)) is an odd integer (r >= 1).
inline bool odd_quotient_parity(unsigned long n, unsigned long r) {
    if (r < 1) throw std::invalid_argument("odd_quotient_parity: requires r >= 1");
    Int f_total = 0;
    for (unsigned long k = 0; k <= r && k <= n; ++k) f_total += f_nk(n, k, r);
    const long nl = static_cast<long>(n);
    Rat q = make_rat(f_total, Int(nl) * Int(nl) * binom(2 * nl, nl));
    return is_integer(q) && q.get_num() % 2 != 0;
}

// sum_{k=1..n} C(2n,n-k) k^{2r}, computed directly and via the expansion
//   sum_{k=0..r-1} 4^{n-k-1} sum_i C(2n,i) C_gen(2k-2n,k-i) (n-i)^{2r-1}.
// The 4-power can be a negative power for small n, so that path is rational.
inline Int even_power_sum(unsigned long n, unsigned long r) {
    if (n == 0 || r == 0)
        throw std::invalid_argument("even_power_sum: requires n >= 1 and r >= 1");
    const long nl = static_cast<long>(n);
    Int direct = 0;
    for (long k = 1; k <= nl; ++k)
        direct += binom(2 * nl, nl - k) * pow_int(Int(k), 2 * r);

    Rat expansion = 0;
    for (long k = 0; k <= static_cast<long>(r) - 1; ++k) {
        Int inner = 0;
        for (long i = 0; i <= k; ++i) {
            Int term = binom(2 * nl, i) * binom_gen(2 * k - 2 * nl, k - i);
            term *= pow_int(Int(nl - i), 2 * r - 1);
            inner += term;
        }
        expansion += pow_rat(Rat(4), nl - k - 1) * Rat(inner);
    }
    if (expansion != Rat(direct))
        throw std::logic_error("even_power_sum: expansion disagrees with direct sum");
    return direct;
}

// f(n,k,r) is divisible by n^{min(2,r+1)} C(2n,n).
inline IdentityCheckResult f_divisibility_check(unsigned long n, unsigned long k,
                                                unsigned long r) {
    const long nl = static_cast<long>(n);
    const Int divisor =
        pow_int(Int(nl), std::min<unsigned long>(2, r + 1)) * binom(2 * nl, nl);
    const Int value = f_nk(n, k, r);
    IdentityCheckResult res;
    res.id = "f-divisibility";
    res.tuple = {nl, static_cast<long>(k), static_cast<long>(r)};
    res.lhs = to_string(value);
    res.rhs = "0 mod " + to_string(divisor);
    res.equal = value % divisor == 0;
    return res;
}

// Pointwise Newton expansion of the even power:
//   l^{2r} = sum_{k=0..r} C(n-l,k) C(n+l,k) 2 k!^2 / (2n-2k)_{2k+1}
//            * sum_i C(2n,i) C_gen(2k-2n,k-i) (n-i)^{2r+1}.
inline IdentityCheckResult ell_even_power_expansion_check(unsigned long n,
                                                          unsigned long r,
                                                          unsigned long l) {
    const long nl = static_cast<long>(n), ll = static_cast<long>(l);
    Rat rhs = 0;
    for (unsigned long k = 0; k <= r; ++k) {
        const long kl = static_cast<long>(k);
        if (kl > nl - ll) break;  // C(n-l,k) = 0 from here on
        Int inner = 0;
        for (long i = 0; i <= kl; ++i)
            inner += binom(2 * nl, i) * binom_gen(2 * kl - 2 * nl, kl - i) *
                     pow_int(Int(nl - i), 2 * r + 1);
        Int num = binom(nl - ll, kl) * binom(nl + ll, kl) * 2 * pow_int(factorial(k), 2);
        rhs += make_rat(num, pochhammer(2 * nl - 2 * kl, 2 * k + 1)) * Rat(inner);
    }
    return make_check("ell-even-expansion",
                      {nl, static_cast<long>(r), ll},
                      Rat(pow_int(Int(ll), 2 * r)), rhs);
}

// Printed closed forms for r = 1..5 (k^2 through k^10); the power of two is
// negative for small n, so both sides live in the rationals.
inline std::vector<IdentityCheckResult> even_power_closed_forms_check(unsigned long n) {
    const long nl = static_cast<long>(n);
    const Int nn(nl);
    struct Form {
        long two_exp_offset;  // exponent is 2n + offset
        Int poly;
    };
    const Form forms[5] = {
        {-2, nn},  // 4^{n-1} n = 2^{2n-2} n
        {-3, nn * (3 * nn - 1)},
        {-4, nn * (15 * nn * nn - 15 * nn + 4)},
        {-5, nn * (105 * pow_int(nn, 3) - 210 * nn * nn + 147 * nn - 34)},
        {-6, nn * (945 * pow_int(nn, 4) - 3150 * pow_int(nn, 3) + 4095 * nn * nn -
                   2370 * nn + 496)},
    };
    std::vector<IdentityCheckResult> out;
    for (unsigned long r = 1; r <= 5; ++r) {
        Rat rhs = pow_rat(Rat(2), 2 * nl + forms[r - 1].two_exp_offset) *
                  Rat(forms[r - 1].poly);
        out.push_back(make_check("even-closed-k" + std::to_string(2 * r), {nl},
                                 Rat(even_power_sum(n, r)), rhs));
    }
    return out;
}

}  // namespace cattri
