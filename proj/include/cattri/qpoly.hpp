#pragma once

// Dense integer-coefficient polynomials in q with exact ring arithmetic.
// Every division this library performs is claimed exact by the mathematics,
// so a nonzero remainder always throws.

#include <string>
#include <vector>

#include "cattri/integer.hpp"

namespace cattri {

struct Poly {
    std::vector<Int> c;  // ascending degree; normalized: no trailing zeros

    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    explicit Poly(const Int& constant) {
        if (constant != 0) c.push_back(constant);
    }

    static Poly monomial(const Int& coeff, std::size_t deg) {
        Poly p;
        if (coeff == 0) return p;
        p.c.assign(deg + 1, Int(0));
        p.c[deg] = coeff;
        return p;
    }

    // 1 - q^i (i >= 1) and 1 + q^i, the divisor shapes this library needs.
    static Poly one_minus_qpow(std::size_t i) {
        Poly p;
        p.c.assign(i + 1, Int(0));
        p.c[0] = 1;
        p.c[i] = -1;
        return p;
    }
    static Poly one_plus_qpow(std::size_t i) {
        Poly p;
        p.c.assign(i + 1, Int(0));
        p.c[0] = 1;
        p.c[i] = 1;
        return p;
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    bool operator==(const Poly& o) const { return c == o.c; }

    Poly operator-() const {
        Poly out = *this;
        for (auto& x : out.c) x = -x;
        return out;
    }

    Poly operator+(const Poly& o) const {
        Poly out;
        out.c.resize(std::max(c.size(), o.c.size()), Int(0));
        for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = coeff(i) + o.coeff(i);
        out.normalize();
        return out;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly out;
        out.c.assign(c.size() + o.c.size() - 1, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
        }
        out.normalize();
        return out;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Multiply by q^j.
    Poly shifted(std::size_t j) const {
        if (is_zero() || j == 0) {
            Poly out = *this;
            if (j > 0 && !out.is_zero()) out.c.insert(out.c.begin(), j, Int(0));
            return out;
        }
        Poly out;
        out.c.assign(c.size() + j, Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) out.c[i + j] = c[i];
        return out;
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rat(c[i]);
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            Int mag = abs(c[i]);
            if (out.empty()) {
                if (c[i] < 0) out += "-";
            } else {
                out += c[i] < 0 ? " - " : " + ";
            }
            const bool unit = mag == 1;
            if (i == 0) {
                out += mag.get_str();
            } else {
                if (!unit) out += mag.get_str() + "*";
                out += i == 1 ? "q" : "q^" + std::to_string(i);
            }
        }
        return out;
    }
};

// Long division requiring a unit leading coefficient on the divisor; throws
// on a nonzero remainder.
inline Poly divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("poly divide_exact: zero divisor");
    if (num.is_zero()) return Poly();
    const Int lead = den.c.back();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("poly divide_exact: divisor leading coefficient must be a unit");
    if (num.degree() < den.degree())
        throw std::logic_error("poly divide_exact: inexact division");
    std::vector<Int> rem = num.c;
    const std::size_t dd = den.c.size() - 1;
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (std::size_t i = rem.size(); i-- > dd + 0;) {
        if (rem[i] == 0) continue;
        const std::size_t qi = i - dd;
        Int t = lead == 1 ? rem[i] : -rem[i];
        quot[qi] = t;
        for (std::size_t j = 0; j < den.c.size(); ++j) rem[qi + j] -= t * den.c[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("poly divide_exact: inexact division");
    return Poly(std::move(quot));
}

// Fast exact division by 1 - q^i, O(deg) via q_j = p_j + q_{j-i}.
inline Poly divide_by_one_minus_qpow(const Poly& num, std::size_t i) {
    if (i == 0) throw std::invalid_argument("divide_by_one_minus_qpow: i must be >= 1");
    if (num.is_zero()) return Poly();
    if (num.c.size() <= i) throw std::logic_error("divide_by_one_minus_qpow: inexact division");
    std::vector<Int> quot(num.c.size() - i, Int(0));
    for (std::size_t j = 0; j < quot.size(); ++j) {
        quot[j] = num.c[j];
        if (j >= i) quot[j] += quot[j - i];
    }
    for (std::size_t j = quot.size(); j < num.c.size(); ++j)
        if (num.c[j] != -quot[j - i])
            throw std::logic_error("divide_by_one_minus_qpow: inexact division");
    return Poly(std::move(quot));
}

}  // namespace cattri
