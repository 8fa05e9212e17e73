#pragma once

// Exact integer/rational kernel shared by every other module. All values are
// arbitrary precision (GMP); nothing in this library ever rounds.

#include <gmpxx.h>

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cattri {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat out;
        mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()),
                   static_cast<unsigned long>(e));
        return out;  // base was canonical, so the powers are too
    }
    if (base == 0) throw std::domain_error("pow_rat: 0 to a negative power");
    return 1 / pow_rat(base, -e);
}

// Reduced rational num/den with den > 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }
inline bool is_half_integer(const Rat& q) { return q.get_den() == 2; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q" reduced, or the plain integer when q = 1.
inline std::string to_string(const Rat& v) {
    if (is_integer(v)) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Exact quotient a/b; the division is asserted to leave no remainder.
inline Int divide_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("divide_exact: zero divisor");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("divide_exact: inexact division");
    return q;
}

// Cached factorials 0!..N!, grown on demand. Internally synchronized so
// concurrent readers may extend it; entries are stable once created.
class FactorialTable {
  public:
    Int get(unsigned long i) {
        std::lock_guard<std::mutex> lock(mu_);
        while (table_.size() <= i) {
            table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
        }
        return table_[i];
    }

    unsigned long size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return static_cast<unsigned long>(table_.size());
    }

    static FactorialTable& global() {
        static FactorialTable t;
        return t;
    }

  private:
    mutable std::mutex mu_;
    std::deque<Int> table_{Int(1)};
};

inline Int factorial(unsigned long n) { return FactorialTable::global().get(n); }

// Binomial coefficient with the vanishing convention: 0 unless 0 <= k <= n.
inline Int binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: negative upper argument");
    if (k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

// Generalized binomial: a(a-1)...(a-k+1)/k! for any integer a, 0 for k < 0.
inline Int binom_gen(long a, long k) {
    if (k < 0) return 0;
    Int out, upper(a);
    mpz_bin_ui(out.get_mpz_t(), upper.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

// Rising factorial a(a+1)...(a+n-1); empty product is 1.
inline Int pochhammer(long a, unsigned long n) {
    Int out = 1;
    for (unsigned long i = 0; i < n; ++i) out *= Int(a + static_cast<long>(i));
    return out;
}

// alpha(N): number of ones in the binary expansion.
inline unsigned bit_count(unsigned long n) {
    if (n == 0) throw std::invalid_argument("bit_count: argument must be positive");
    unsigned c = 0;
    for (; n != 0; n >>= 1) c += static_cast<unsigned>(n & 1);
    return c;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Largest e with p^e | n; errors on n = 0.
inline unsigned long p_adic_valuation(const Int& n, unsigned long p) {
    if (n == 0) throw std::invalid_argument("p_adic_valuation: zero argument");
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p is not prime");
    Int rest;
    Int prime(p);
    auto e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    return static_cast<unsigned long>(e);
}

}  // namespace cattri
