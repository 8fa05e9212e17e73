#pragma once

// Lucas' theorem, prime-power detection, the gcd coprimality condition on the
// central binomial, and the Theorem-1.4-style verdicts.

#include <optional>
#include <utility>
#include <vector>

#include "cattri/catalan.hpp"
#include "cattri/check.hpp"
#include "cattri/integer.hpp"

namespace cattri {

struct BaseDigits {
    unsigned long p = 2;
    std::vector<unsigned long> digits;  // least significant first; empty for 0

    unsigned long value() const {
        unsigned long v = 0;
        for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
        return v;
    }
};

inline BaseDigits to_base_digits(unsigned long value, unsigned long p) {
    if (p < 2) throw std::invalid_argument("to_base_digits: base must be >= 2");
    BaseDigits out;
    out.p = p;
    while (value != 0) {
        out.digits.push_back(value % p);
        value /= p;
    }
    return out;
}

namespace detail {

// C(a,b) mod p for digits a, b < p. The exact value fits an unsigned long up
// to a = 62; larger digits (large primes) fall back to the bignum kernel.
inline unsigned long digit_binom_mod(unsigned long a, unsigned long b, unsigned long p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    if (a <= 60) {
        unsigned long v = 1;
        for (unsigned long i = 0; i < b; ++i) v = v * (a - i) / (i + 1);  // exact stepwise
        return v % p;
    }
    Int v = binom(static_cast<long>(a), static_cast<long>(b)) % static_cast<long>(p);
    return v.get_ui();
}

}  // namespace detail

// C(a,b) mod p by the digit product of Lucas' theorem.
inline unsigned long lucas_binom_mod_p(unsigned long a, unsigned long b,
                                       unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("lucas_binom_mod_p: p is not prime");
    unsigned long prod = 1;
    while ((a != 0 || b != 0) && prod != 0) {
        prod = prod * detail::digit_binom_mod(a % p, b % p, p) % p;
        a /= p;
        b /= p;
    }
    return prod;
}

// n = p^e decomposition; empty for n = 1 and for n with two prime factors.
inline std::optional<std::pair<unsigned long, unsigned long>> is_prime_power(
    unsigned long n) {
    if (n < 2) return std::nullopt;
    unsigned long m = n;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            unsigned long e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            if (m != 1) return std::nullopt;
            return std::make_pair(d, e);
        }
    }
    return std::make_pair(m, 1ul);  // n itself is prime
}

inline std::vector<unsigned long> prime_divisors(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// gcd(C(2n-1,n), n) = 1, decided by Lucas residues at each prime divisor of n
// and cross-checked against the direct gcd.
inline bool central_coprime_condition(unsigned long n) {
    if (n == 0) throw std::invalid_argument("central_coprime_condition: n must be positive");
    const long nl = static_cast<long>(n);
    const Int central = binom(2 * nl - 1, nl);
    bool via_lucas = true;
    for (unsigned long p : prime_divisors(n)) {
        if (lucas_binom_mod_p(2 * n - 1, n, p) == 0) {
            via_lucas = false;
            break;
        }
    }
    const bool via_gcd = gcd_int(central, Int(nl)) == 1;
    if (via_lucas != via_gcd)
        throw std::logic_error("central_coprime_condition: Lucas route disagrees with gcd");
    return via_gcd;
}

// The paper's stronger printed congruence C(2n-1,n) == 1 (mod n); false e.g.
// at n = 4, where only the gcd condition survives.
inline bool central_congruence_mod_n(unsigned long n) {
    const long nl = static_cast<long>(n);
    return binom(2 * nl - 1, nl) % nl == 1;
}

// The per-prime reading: C(2n-1,n) == 1 (mod p) for every prime p | n.
inline bool central_congruence_mod_prime_divisors(unsigned long n) {
    const long nl = static_cast<long>(n);
    for (unsigned long p : prime_divisors(n))
        if (binom(2 * nl - 1, nl) % static_cast<long>(p) != 1) return false;
    return true;
}

// Sorted n < limit that are not prime powers yet satisfy the gcd condition.
inline std::vector<unsigned long> scan_coprime_non_prime_powers(unsigned long limit) {
    if (limit < 2) throw std::invalid_argument("scan_coprime_non_prime_powers: limit >= 2");
    std::vector<unsigned long> out;
    for (unsigned long n = 2; n < limit; ++n) {
        if (is_prime_power(n)) continue;
        if (central_coprime_condition(n)) out.push_back(n);
    }
    return out;
}

struct Theorem14PreconditionError : std::invalid_argument {
    enum class Kind { parity, condition };
    Kind kind;
    explicit Theorem14PreconditionError(Kind k)
        : std::invalid_argument(k == Kind::parity
                                    ? "theorem14_verdict: requires r != s (mod 2)"
                                    : "theorem14_verdict: central coprimality fails for n"),
          kind(k) {}
};

// sum_{k=1..n} k^r B(n,k)^s against divisor C(2n,n). Preconditions: s >= 1,
// r and s of opposite parity, and the coprimality condition on n.
inline DivisibilityVerdict theorem14_verdict(unsigned long n, unsigned long r,
                                             unsigned long s) {
    if (n == 0 || s == 0)
        throw std::invalid_argument("theorem14_verdict: requires n >= 1 and s >= 1");
    if ((r + s) % 2 == 0)
        throw Theorem14PreconditionError(Theorem14PreconditionError::Kind::parity);
    if (!central_coprime_condition(n))
        throw Theorem14PreconditionError(Theorem14PreconditionError::Kind::condition);
    const long nl = static_cast<long>(n);
    Int sum = 0;
    for (long k = 1; k <= nl; ++k)
        sum += pow_int(Int(k), r) * pow_int(catalan_entry(n, k), s);
    return make_verdict(sum, binom(2 * nl, nl));
}

}  // namespace cattri
