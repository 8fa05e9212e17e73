#pragma once

// Theta sums, alpha coefficients, the closed form they assemble into, and the
// B(n,k)-weighted odd-power conversions, all cross-checked against direct
// summation.

#include <array>
#include <vector>

#include "cattri/catalan.hpp"
#include "cattri/check.hpp"
#include "cattri/integer.hpp"
#include "cattri/newton.hpp"

namespace cattri {

struct ThetaParams {
    unsigned long m = 0;  // half-exponent index: the sum carries l^m (l+r)^m
    unsigned long n = 1;  // row, n >= 1
    unsigned long r = 0;  // shift; r >= n yields the empty sum
};

// Sum_{l=1..n-r} l^m (l+r)^m (2l+r) C(2n, n-l) C(2n, n+l+r). The defining
// brute force; every closed form in this module answers to it.
inline Int theta_bruteforce(const ThetaParams& p) {
    const long n = static_cast<long>(p.n), r = static_cast<long>(p.r);
    Int total = 0;
    for (long l = 1; l + r <= n; ++l) {
        Int term = pow_int(Int(l), p.m) * pow_int(Int(l + r), p.m) * Int(2 * l + r);
        term *= binom(2 * n, n - l);
        term *= binom(2 * n, n + l + r);
        total += term;
    }
    return total;
}

// alpha_k(m,n,r): the Newton divided-difference coefficient in hypergeometric
// form. Throws on a vanishing Pochhammer denominator (degenerate nodes).
inline Rat alpha_coeff(unsigned long k, const ThetaParams& p) {
    const long n = static_cast<long>(p.n), r = static_cast<long>(p.r),
               kk = static_cast<long>(k);
    Int den = pochhammer(2 * n + r - 2 * kk, 2 * k + 1);
    if (den == 0)
        throw std::domain_error("alpha_coeff: degenerate node spacing (zero Pochhammer)");
    Int num = 0;
    for (long i = 0; i <= kk; ++i) {
        Int node = Int(n - i) * Int(n - i + r);  // (n-i)^2 + r(n-i)
        Int term = binom(2 * n + r, i) * binom_gen(2 * kk - 2 * n - r, kk - i);
        term *= pow_int(node, p.m);
        term *= Int(2 * n + r - 2 * i);
        num += term;
    }
    return make_rat(num, den);
}

// The closed form: n C(2n,n) C(2n,n-r-1) sum_k C(n-1,k) C(n+r+1,k+1)
// k!(k+1)!/(2n-k) alpha_k. Terms with C(n-1,k) = 0 are skipped before their
// alpha is evaluated, which keeps every surviving Pochhammer nonzero.
inline Rat theta_closed(const ThetaParams& p) {
    const long n = static_cast<long>(p.n), r = static_cast<long>(p.r);
    Rat sum = 0;
    const unsigned long k_top = std::min<unsigned long>(p.m, p.n - 1);
    for (unsigned long k = 0; k <= k_top; ++k) {
        const long kk = static_cast<long>(k);
        Int coeff = binom(n - 1, kk) * binom(n + r + 1, kk + 1) * factorial(k) *
                    factorial(k + 1);
        sum += make_rat(coeff, Int(2 * n - kk)) * alpha_coeff(k, p);
    }
    Rat prefactor(Int(n) * binom(2 * n, n) * binom(2 * n, n - r - 1));
    return prefactor * sum;
}

inline IdentityCheckResult theta_check(const ThetaParams& p) {
    return make_check("theta-closed",
                      {static_cast<long>(p.m), static_cast<long>(p.n),
                       static_cast<long>(p.r)},
                      theta_closed(p), Rat(theta_bruteforce(p)));
}

// Sum_{k=1..n-r} B(n,k) B(n,k+r) (2k+r)^{2m+1}, computed directly and via the
// Theta combination
//   n^{-2} sum_i C(m,i) 4^i r^{2m-2i} Theta_{2i+3}(n,r).
// The two paths must agree on every call; disagreement is a hard error.
inline Int bb_odd_power_sum(unsigned long m, unsigned long n, unsigned long r) {
    const long nl = static_cast<long>(n), rl = static_cast<long>(r);
    Int direct = 0;
    for (long k = 1; k + rl <= nl; ++k) {
        Int term = catalan_entry(n, k) * catalan_entry(n, k + rl);
        term *= pow_int(Int(2 * k + rl), 2 * m + 1);
        direct += term;
    }
    Rat via_theta = 0;
    for (unsigned long i = 0; i <= m; ++i) {
        Int coeff = binom(static_cast<long>(m), static_cast<long>(i)) *
                    pow_int(Int(4), i) * pow_int(Int(rl), 2 * (m - i));
        via_theta += Rat(coeff * theta_bruteforce({i + 1, n, r}));
    }
    via_theta /= Rat(Int(nl) * Int(nl));
    if (via_theta != Rat(direct))
        throw std::logic_error("bb_odd_power_sum: Theta conversion disagrees with direct sum");
    return direct;
}

// The three printed companions of the cube identity, each checked against
// direct summation. The fifth and seventh powers carry a 1/(2n-3) factor and
// are compared as exact rationals.
inline std::vector<IdentityCheckResult> newkr_family_check(unsigned long n,
                                                           unsigned long r) {
    const Int nn(n);
    const Int rr(r);
    const Int base = binom(2 * static_cast<long>(n), static_cast<long>(n)) *
                     binom(2 * static_cast<long>(n) - 2,
                           static_cast<long>(n) - static_cast<long>(r) - 1);
    const Rat two_n_minus_3(2 * static_cast<long>(n) - 3);

    std::vector<IdentityCheckResult> out;
    std::vector<long> tuple{static_cast<long>(n), static_cast<long>(r)};

    Rat cube_rhs = Rat(base) * Rat(4 * nn + rr * rr);
    out.push_back(make_check("newkr-cube", tuple, Rat(bb_odd_power_sum(1, n, r)), cube_rhs));

    Rat fifth_inner = Rat(16 * nn * (3 * nn * nn - 5 * nn - rr * rr + 1)) / two_n_minus_3 +
                      Rat(8 * nn * rr * rr + pow_int(rr, 4));
    out.push_back(make_check("newkr-fifth", tuple, Rat(bb_odd_power_sum(2, n, r)),
                             Rat(base) * fifth_inner));

    Rat seventh_inner =
        Rat(64 * nn * (6 * nn * nn * nn - 12 * nn * nn - 4 * nn * rr * rr + 6 * nn +
                       rr * rr - 1) +
            48 * nn * (3 * nn * nn - 5 * nn - rr * rr + 1) * rr * rr) /
            two_n_minus_3 +
        Rat(12 * nn * pow_int(rr, 4) + pow_int(rr, 6));
    out.push_back(make_check("newkr-seventh", tuple, Rat(bb_odd_power_sum(3, n, r)),
                             Rat(base) * seventh_inner));
    return out;
}

// Ninth-power row sum against the Chen-Chu (13g) closed form,
//   sum_p p^9 B(n,p)^2 / ((n+1) Cat(n) Cat(n-2))
//     = n (30n^5 - 150n^4 + 252n^3 - 185n^2 + 65n - 9) / (2n - 5).
inline IdentityCheckResult cc13g_check(unsigned long n) {
    if (n < 3) throw std::invalid_argument("cc13g_check: requires n >= 3");
    const long nl = static_cast<long>(n);
    Int sum = 0;
    for (long p = 1; p <= nl; ++p)
        sum += pow_int(Int(p), 9) * pow_int(catalan_entry(n, p), 2);
    Rat cat_n = make_rat(binom(2 * nl, nl), Int(nl + 1));
    Rat cat_n2 = make_rat(binom(2 * nl - 4, nl - 2), Int(nl - 1));
    Rat lhs = Rat(sum) / (Rat(nl + 1) * cat_n * cat_n2);
    Int nn(nl);
    Int poly = 30 * pow_int(nn, 5) - 150 * pow_int(nn, 4) + 252 * pow_int(nn, 3) -
               185 * nn * nn + 65 * nn - 9;
    Rat rhs = Rat(nn * poly) / Rat(Int(2 * nl - 5));
    return make_check("cc13g", {nl}, lhs, rhs);
}

// The paper-style "first values" displays for Theta_1..Theta_7, evaluated as
// exact rationals. Display index mi is 0..3.
inline Rat theta_display_value(unsigned mi, unsigned long n, unsigned long r) {
    const Int nn(static_cast<long>(n)), rr(static_cast<long>(r));
    const Int base = binom(2 * static_cast<long>(n), static_cast<long>(n)) *
                     binom(2 * static_cast<long>(n) - 2,
                           static_cast<long>(n) - static_cast<long>(r) - 1);
    const Int n3 = pow_int(nn, 3);
    switch (mi) {
        case 0:
            return Rat(base * n3);
        case 1:
            return Rat(base * n3 * (3 * nn * nn - 5 * nn - rr * rr + 1)) /
                   Rat(2 * nn - 3);
        case 2:
            return Rat(base * n3 *
                       (6 * pow_int(nn, 3) - 12 * nn * nn - 4 * nn * rr * rr + 6 * nn +
                        rr * rr - 1)) /
                   Rat(2 * nn - 3);
        case 3: {
            Int poly = 30 * pow_int(nn, 5) - 150 * pow_int(nn, 4) + 252 * pow_int(nn, 3) -
                       30 * pow_int(nn, 3) * rr * rr + 91 * nn * nn * rr * rr -
                       185 * nn * nn - 53 * nn * rr * rr + 4 * nn * pow_int(rr, 4) +
                       65 * nn - pow_int(rr, 4) + 10 * rr * rr - 9;
            return Rat(base * n3 * poly) / Rat((2 * nn - 3) * (2 * nn - 5));
        }
        default:
            throw std::invalid_argument("theta_display_value: display index is 0..3");
    }
}

// Hypothesis (verified, never assumed): the printed Theta_{2m+1} display
// equals the defining sum's Theta_{2(m+2)+1}, i.e. brute force at m+2.
inline IdentityCheckResult theta_display_check(unsigned mi, unsigned long n,
                                               unsigned long r) {
    return make_check("theta-display",
                      {static_cast<long>(mi), static_cast<long>(n), static_cast<long>(r)},
                      theta_display_value(mi, n, r),
                      Rat(theta_bruteforce({mi + 2, n, r})));
}

// Pointwise expansion l^m (l+r)^m = sum_k C(n-l,k) C(n+l+r,k) k!^2 alpha_k.
inline IdentityCheckResult power_expansion_check(unsigned long m, unsigned long n,
                                                 unsigned long r, unsigned long l) {
    const long nl = static_cast<long>(n), rl = static_cast<long>(r),
               ll = static_cast<long>(l);
    Rat rhs = 0;
    for (unsigned long k = 0; k <= m && static_cast<long>(k) <= nl - ll; ++k) {
        const long kk = static_cast<long>(k);
        Int coeff = binom(nl - ll, kk) * binom(nl + ll + rl, kk) *
                    pow_int(factorial(k), 2);
        rhs += Rat(coeff) * alpha_coeff(k, {m, n, r});
    }
    Rat lhs(pow_int(Int(ll), m) * pow_int(Int(ll + rl), m));
    return make_check("power-expansion",
                      {static_cast<long>(m), nl, rl, ll}, lhs, rhs);
}

// C(n-l,k) C(n+l+r,k) C(2n,n-l) C(2n,n+l+r)
//   = C(2n,k)^2 C(2n-k,n+l) C(2n-k,n-l-r).
inline IdentityCheckResult binomial_product_relation_check(unsigned long n,
                                                           unsigned long k,
                                                           unsigned long l,
                                                           unsigned long r) {
    const long nl = static_cast<long>(n), kl = static_cast<long>(k),
               ll = static_cast<long>(l), rl = static_cast<long>(r);
    Int lhs = binom(nl - ll, kl) * binom(nl + ll + rl, kl) * binom(2 * nl, nl - ll) *
              binom(2 * nl, nl + ll + rl);
    Int rhs = pow_int(binom(2 * nl, kl), 2) * binom(2 * nl - kl, nl + ll) *
              binom(2 * nl - kl, nl - ll - rl);
    return make_check("binom-product", {nl, kl, ll, rl}, Rat(lhs), Rat(rhs));
}

// sum_{l=1..n-r} (2l+r) C(2n-k,n+l) C(2n-k,n-l-r)
//   = (n+1) C(2n-k,n+1) C(2n-k-1,n-r-1).
inline IdentityCheckResult telescoped_sum_check(unsigned long n, unsigned long k,
                                                unsigned long r) {
    const long nl = static_cast<long>(n), kl = static_cast<long>(k),
               rl = static_cast<long>(r);
    Int lhs = 0;
    for (long l = 1; l + rl <= nl; ++l)
        lhs += Int(2 * l + rl) * binom(2 * nl - kl, nl + l) *
               binom(2 * nl - kl, nl - l - rl);
    Int rhs = Int(nl + 1) * binom(2 * nl - kl, nl + 1) *
              binom(2 * nl - kl - 1, nl - rl - 1);
    return make_check("telescope", {nl, kl, rl}, Rat(lhs), Rat(rhs));
}

// Divided differences over the nodes x_i = (n-i)^2 + r(n-i) with values x_i^m
// reproduce alpha up to the (-1)^k from flipping (x - x_i) to (x_i - x).
inline IdentityCheckResult alpha_newton_cross_check(unsigned long m, unsigned long n,
                                                    unsigned long r) {
    std::vector<Rat> nodes, values;
    for (unsigned long i = 0; i <= m; ++i) {
        Int node = Int(static_cast<long>(n) - static_cast<long>(i)) *
                   Int(static_cast<long>(n) - static_cast<long>(i) + static_cast<long>(r));
        nodes.emplace_back(node);
        values.emplace_back(pow_int(node, m));
    }
    NewtonTableau t = newton_coefficients(nodes, values);
    bool all_equal = true;
    std::string lhs_digest, rhs_digest;
    for (unsigned long k = 0; k <= m; ++k) {
        Rat expected = alpha_coeff(k, {m, n, r});
        if (k % 2 == 1) expected = -expected;
        if (!lhs_digest.empty()) {
            lhs_digest += ",";
            rhs_digest += ",";
        }
        lhs_digest += to_string(t.coefficients[k]);
        rhs_digest += to_string(expected);
        if (t.coefficients[k] != expected) all_equal = false;
    }
    return {"alpha-newton",
            {static_cast<long>(m), static_cast<long>(n), static_cast<long>(r)},
            lhs_digest,
            rhs_digest,
            all_equal};
}

}  // namespace cattri
