#pragma once

// Cyclic binomial products, the S-sums of the multi-index half-integer
// theorem with their recurrence, Pfaff-Saalschutz, the lambda-sum closed
// forms, the GJZ alternating identity, and the divisibility corollaries.

#include <functional>
#include <numeric>
#include <vector>

#include "cattri/catalan.hpp"
#include "cattri/check.hpp"
#include "cattri/integer.hpp"

namespace cattri {

// (n_1,...,n_m), all entries >= 1, cyclically closed with n_{m+1} = n_1.
using CompositionIndex = std::vector<unsigned long>;

inline void validate_composition(const CompositionIndex& a) {
    if (a.empty()) throw std::invalid_argument("composition must have m >= 1 entries");
    for (auto e : a)
        if (e == 0) throw std::invalid_argument("composition entries must be positive");
}

inline std::vector<long> composition_tuple(unsigned long r, const CompositionIndex& a) {
    std::vector<long> t{static_cast<long>(r)};
    for (auto e : a) t.push_back(static_cast<long>(e));
    return t;
}

// C(a_1,...,a_l;k) = prod_i C(a_i + a_{i+1}, a_i + k), cyclically.
inline Int cyclic_product(const CompositionIndex& a, long k) {
    validate_composition(a);
    Int prod = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long ai = static_cast<long>(a[i]);
        const long an = static_cast<long>(a[(i + 1) % a.size()]);
        prod *= binom(ai + an, ai + k);
        if (prod == 0) break;
    }
    return prod;
}

// S_{2r+1}(n_1,...,n_m) as an exact rational.
inline Rat s_value(unsigned long r, const CompositionIndex& a) {
    validate_composition(a);
    const long n1 = static_cast<long>(a.front());
    const long nm = static_cast<long>(a.back());
    Int sum = 0;
    for (long k = 1; k <= n1; ++k)
        sum += pow_int(Int(k), 2 * r + 1) * cyclic_product(a, k);
    return make_rat(sum, Int(n1) * binom(n1 + nm, n1));
}

// The divisibility view of the same quantity: sum over divisor n_1 C(n_1+n_m, n_1).
inline DivisibilityVerdict s_sum(unsigned long r, const CompositionIndex& a) {
    validate_composition(a);
    const long n1 = static_cast<long>(a.front());
    const long nm = static_cast<long>(a.back());
    Int sum = 0;
    for (long k = 1; k <= n1; ++k)
        sum += pow_int(Int(k), 2 * r + 1) * cyclic_product(a, k);
    return make_verdict(sum, Int(n1) * binom(n1 + nm, n1));
}

// S_{2r+1}(n_1,...,n_m) = sum_{l=1..n_1} C(n_1-1,l-1) C(n_2+n_3,n_2-l)
//                                        S_{2r+1}(l,n_3,...,n_m).
inline IdentityCheckResult s_recurrence_check(unsigned long r, const CompositionIndex& a) {
    validate_composition(a);
    if (a.size() < 3) throw std::invalid_argument("s_recurrence_check: requires m >= 3");
    const long n1 = static_cast<long>(a[0]);
    const long n2 = static_cast<long>(a[1]);
    const long n3 = static_cast<long>(a[2]);
    Rat rhs = 0;
    for (long l = 1; l <= n1; ++l) {
        CompositionIndex tail;
        tail.push_back(static_cast<unsigned long>(l));
        tail.insert(tail.end(), a.begin() + 2, a.end());
        rhs += Rat(binom(n1 - 1, l - 1) * binom(n2 + n3, n2 - l)) * s_value(r, tail);
    }
    return make_check("s-recurrence", composition_tuple(r, a), s_value(r, a), rhs);
}

// Pfaff-Saalschutz, eq-(16) form, with the 1/n! = 0 convention on the right.
inline IdentityCheckResult pfaff_check(unsigned long n1, unsigned long n2,
                                       unsigned long n3, long k) {
    const long a = static_cast<long>(n1), b = static_cast<long>(n2),
               c = static_cast<long>(n3);
    Int lhs = binom(a + b, a + k) * binom(b + c, b + k) * binom(c + a, c + k);
    Rat rhs = 0;
    for (long s = 0; s <= a - k; ++s) {
        const long args[5] = {s, s + 2 * k, a - k - s, b - k - s, c - k - s};
        bool vanishes = false;
        for (long arg : args)
            if (arg < 0) vanishes = true;
        if (vanishes) continue;
        Int den = 1;
        for (long arg : args) den *= factorial(static_cast<unsigned long>(arg));
        rhs += make_rat(factorial(static_cast<unsigned long>(a + b + c - k - s)), den);
    }
    return make_check("pfaff", {a, b, c, k}, Rat(lhs), rhs);
}

namespace detail {

// Enumerate weakly decreasing chains (lambda_1 >= ... >= lambda_len >= low)
// starting at most `top`, visiting each complete chain.
inline void for_each_chain(unsigned long top, unsigned long low, std::size_t len,
                           std::vector<unsigned long>& chain,
                           const std::function<void(const std::vector<unsigned long>&)>& fn) {
    if (chain.size() == len) {
        fn(chain);
        return;
    }
    for (unsigned long v = top; v + 1 > low; --v) {  // v from top down to low
        chain.push_back(v);
        for_each_chain(v, low, len, chain, fn);
        chain.pop_back();
        if (v == 0) break;
    }
}

}  // namespace detail

// The two iterated-recurrence closed forms: power 1 and power 3 lambda sums.
inline IdentityCheckResult lambda_sum_check(const CompositionIndex& a, int power) {
    validate_composition(a);
    if (a.size() < 3) throw std::invalid_argument("lambda_sum_check: requires m >= 3");
    if (power != 1 && power != 3)
        throw std::invalid_argument("lambda_sum_check: power must be 1 or 3");
    const std::size_t m = a.size();
    const long n1 = static_cast<long>(a.front());
    const long nm = static_cast<long>(a.back());

    Int lhs = 0;
    for (long k = 1; k <= n1; ++k)
        lhs += pow_int(Int(k), static_cast<unsigned long>(power)) * cyclic_product(a, k);

    Int chain_total = 0;
    std::vector<unsigned long> chain;
    detail::for_each_chain(
        a.front(), 1, m - 2, chain, [&](const std::vector<unsigned long>& lam) {
            const long last = static_cast<long>(lam.back());
            Int term = power == 1 ? binom(last + nm - 1, last)
                                  : binom(last + nm - 2, last - 1);
            for (std::size_t i = 1; i <= m - 2; ++i) {
                const long prev = i == 1 ? n1 : static_cast<long>(lam[i - 2]);
                const long cur = static_cast<long>(lam[i - 1]);
                const long ni1 = static_cast<long>(a[i]);      // n_{i+1}
                const long ni2 = static_cast<long>(a[i + 1]);  // n_{i+2}
                term *= binom(prev - 1, cur - 1) * binom(ni1 + ni2, ni1 - cur);
                if (term == 0) break;
            }
            chain_total += term;
        });
    Rat prefactor = power == 1 ? make_rat(Int(n1), Int(2)) : make_rat(Int(n1) * Int(nm), Int(2));
    Rat rhs = prefactor * Rat(binom(n1 + nm, n1)) * Rat(chain_total);
    std::vector<long> tuple{power};
    for (auto e : a) tuple.push_back(static_cast<long>(e));
    return make_check(power == 1 ? "lambda-sum-1" : "lambda-sum-3", tuple, Rat(lhs), rhs);
}

// sum_{k=-n_1..n_1} (-1)^k prod_i C(n_i+n_{i+1}, n_i+k)
//   = C(n_1+n_m, n_1) sum_{lambda >= 0} prod C(l_{i-1}, l_i) C(n_{i+1}+n_{i+2}, n_{i+1}-l_i).
inline IdentityCheckResult gjz_alternating_check(const CompositionIndex& a) {
    validate_composition(a);
    if (a.size() < 3) throw std::invalid_argument("gjz_alternating_check: requires m >= 3");
    const std::size_t m = a.size();
    const long n1 = static_cast<long>(a.front());
    const long nm = static_cast<long>(a.back());

    Int lhs = 0;
    for (long k = -n1; k <= n1; ++k) {
        Int term = cyclic_product(a, k);
        lhs += (k % 2 == 0) ? term : -term;
    }

    Int chain_total = 0;
    std::vector<unsigned long> chain;
    detail::for_each_chain(
        a.front(), 0, m - 2, chain, [&](const std::vector<unsigned long>& lam) {
            Int term = 1;
            for (std::size_t i = 1; i <= m - 2; ++i) {
                const long prev = i == 1 ? n1 : static_cast<long>(lam[i - 2]);
                const long cur = static_cast<long>(lam[i - 1]);
                const long ni1 = static_cast<long>(a[i]);
                const long ni2 = static_cast<long>(a[i + 1]);
                term *= binom(prev, cur) * binom(ni1 + ni2, ni1 - cur);
                if (term == 0) break;
            }
            chain_total += term;
        });
    Int rhs = binom(n1 + nm, n1) * chain_total;
    std::vector<long> tuple;
    for (auto e : a) tuple.push_back(static_cast<long>(e));
    return make_check("gjz-alternating", tuple, Rat(lhs), Rat(rhs));
}

// ---------------------------------------------------------------------------
// Divisibility corollaries: one generic engine, nine named presets plus the
// power-of-two corollary. Multi-divisor statements use the lcm as the single
// declared divisor (divisibility by each factor is equivalent).
// ---------------------------------------------------------------------------

struct CorollaryEvaluation {
    Int sum;                    // prefactor-scaled where the statement has one
    std::vector<Int> divisors;  // each must divide sum
};

struct CorollaryPreset {
    std::string id;
    std::string alias;
    std::string params_doc;
    bool variadic = false;
    std::size_t arity = 0;  // minimum arity when variadic
    std::function<bool(const std::vector<long>&)> precondition;
    std::function<CorollaryEvaluation(const std::vector<long>&)> eval;
};

namespace detail {

inline Int power_sum(long upper, unsigned long k_exp,
                     const std::function<Int(long)>& weight) {
    Int sum = 0;
    for (long k = 1; k <= upper; ++k) sum += pow_int(Int(k), k_exp) * weight(k);
    return sum;
}

inline bool all_positive(const std::vector<long>& v, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (v[i] < 1) return false;
    return true;
}

inline bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace detail

inline const std::vector<CorollaryPreset>& corollary_presets() {
    static const std::vector<CorollaryPreset> presets = [] {
        std::vector<CorollaryPreset> ps;

        ps.push_back({"6.1", "mn-sym", "(m,n,r,a)", false, 4,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 3) && p[3] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long m = p[0], n = p[1], a = p[3];
                          const unsigned long r = static_cast<unsigned long>(p[2]);
                          Int sum = 2 * detail::power_sum(
                                            m, static_cast<unsigned long>(2 * a + 1),
                                            [&](long k) {
                                                return pow_int(binom(m + n, m + k), r) *
                                                       pow_int(binom(m + n, n + k), r);
                                            });
                          Int div = divide_exact(Int(m) * Int(n), gcd_int(Int(m), Int(n))) *
                                    binom(m + n, m);
                          return CorollaryEvaluation{sum, {div}};
                      }});

        ps.push_back({"6.2", "lmn", "(l,m,n,r,a)", false, 5,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 4) && p[4] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long l = p[0], m = p[1], n = p[2], a = p[4];
                          const unsigned long r = static_cast<unsigned long>(p[3]);
                          Int sum = 2 * detail::power_sum(
                                            l, static_cast<unsigned long>(2 * a + 1),
                                            [&](long k) {
                                                return pow_int(binom(l + m, l + k), r) *
                                                       pow_int(binom(m + n, m + k), r) *
                                                       pow_int(binom(n + l, n + k), r);
                                            });
                          auto pair_div = [](long x, long y) {
                              return divide_exact(Int(x) * Int(y), gcd_int(Int(x), Int(y))) *
                                     binom(x + y, x);
                          };
                          return CorollaryEvaluation{
                              sum, {pair_div(l, m), pair_div(m, n), pair_div(n, l)}};
                      }});

        ps.push_back({"6.3", "nn+1", "(r,s,n,a)", false, 4,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 3) && p[3] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long n = p[2], a = p[3];
                          const unsigned long r = static_cast<unsigned long>(p[0]);
                          const unsigned long s = static_cast<unsigned long>(p[1]);
                          Int sum = detail::power_sum(
                              n, static_cast<unsigned long>(2 * a + 1), [&](long k) {
                                  return pow_int(binom(2 * n + 1, n + k + 1), r) *
                                         pow_int(binom(2 * n + 1, n + k), r) *
                                         pow_int(binom(2 * n, n + k), s);
                              });
                          Int div = divide_exact(Int(n) * Int(n + 1), Int(2)) *
                                    binom(2 * n + 1, n);
                          return CorollaryEvaluation{sum, {div}};
                      }});

        // Theorem restatement: 2(n_1-1)! prod (n_i+n_{i+1})!/(2n_i)! * sum,
        // with n_{m+1} = 0 exactly as printed. Params (r, n_1..n_m).
        ps.push_back({"6.4", "rennn", "(r,n1..nm)", true, 2,
                      [](const std::vector<long>& p) {
                          if (p[0] < 0) return false;
                          for (std::size_t i = 1; i < p.size(); ++i)
                              if (p[i] < 1) return false;
                          return true;
                      },
                      [](const std::vector<long>& p) {
                          const unsigned long r = static_cast<unsigned long>(p[0]);
                          std::vector<long> comp(p.begin() + 1, p.end());
                          const long n1 = comp.front();
                          Int sum = detail::power_sum(n1, 2 * r + 1, [&](long k) {
                              Int prod = 1;
                              for (long ni : comp) prod *= binom(2 * ni, ni + k);
                              return prod;
                          });
                          Rat prefactor(2 * factorial(static_cast<unsigned long>(n1 - 1)));
                          for (std::size_t i = 0; i < comp.size(); ++i) {
                              const long ni = comp[i];
                              const long next = i + 1 < comp.size() ? comp[i + 1] : 0;
                              prefactor *= make_rat(
                                  factorial(static_cast<unsigned long>(ni + next)),
                                  factorial(static_cast<unsigned long>(2 * ni)));
                          }
                          return CorollaryEvaluation{sum * prefactor.get_num(),
                                                     {prefactor.get_den()}};
                      }});

        ps.push_back({"6.5", "mn", "(m,n,r,s,a)", false, 5,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 4) && p[4] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long m = p[0], n = p[1], a = p[4];
                          const unsigned long r = static_cast<unsigned long>(p[2]);
                          const unsigned long s = static_cast<unsigned long>(p[3]);
                          Int sum = detail::power_sum(
                              m, static_cast<unsigned long>(2 * a + 1), [&](long k) {
                                  return pow_int(binom(2 * m, m + k), r) *
                                         pow_int(binom(2 * n, n + k), s);
                              });
                          Rat div = make_rat(
                              factorial(static_cast<unsigned long>(2 * m)) *
                                  factorial(static_cast<unsigned long>(2 * n)),
                              2 * factorial(static_cast<unsigned long>(m + n)) *
                                  factorial(static_cast<unsigned long>(m - 1)) *
                                  factorial(static_cast<unsigned long>(n - 1)) *
                                  gcd_int(Int(m), Int(n)));
                          if (!is_integer(div))
                              throw std::logic_error("6.5: declared divisor is not integral");
                          return CorollaryEvaluation{sum, {div.get_num()}};
                      }});

        ps.push_back({"6.6", "n4n", "(n,r,s,a)", false, 4,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 3) && p[3] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long n = p[0], a = p[3];
                          const unsigned long r = static_cast<unsigned long>(p[1]);
                          const unsigned long s = static_cast<unsigned long>(p[2]);
                          Int sum = detail::power_sum(
                              n, static_cast<unsigned long>(2 * a + 1), [&](long k) {
                                  return pow_int(binom(4 * n, 2 * n + k), r) *
                                         pow_int(binom(2 * n, n + k), s);
                              });
                          return CorollaryEvaluation{sum, {Int(n) * binom(4 * n, n)}};
                      }});

        ps.push_back({"6.7", "n6n", "(n,r,s,a)", false, 4,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 3) && p[3] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long n = p[0], a = p[3];
                          const unsigned long r = static_cast<unsigned long>(p[1]);
                          const unsigned long s = static_cast<unsigned long>(p[2]);
                          Int sum = detail::power_sum(
                              n, static_cast<unsigned long>(2 * a + 1), [&](long k) {
                                  return pow_int(binom(6 * n, 3 * n + k), r) *
                                         pow_int(binom(2 * n, n + k), s);
                              });
                          Int div = divide_exact(
                              factorial(static_cast<unsigned long>(6 * n)) *
                                  factorial(static_cast<unsigned long>(2 * n - 1)),
                              factorial(static_cast<unsigned long>(4 * n)) *
                                  factorial(static_cast<unsigned long>(3 * n - 1)) *
                                  factorial(static_cast<unsigned long>(n - 1)));
                          return CorollaryEvaluation{sum, {div}};
                      }});

        ps.push_back({"6.8", "rst-246n", "(r,s,t,n,a)", false, 5,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 4) && p[4] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long n = p[3], a = p[4];
                          const unsigned long r = static_cast<unsigned long>(p[0]);
                          const unsigned long s = static_cast<unsigned long>(p[1]);
                          const unsigned long t = static_cast<unsigned long>(p[2]);
                          Int sum = detail::power_sum(
                              n, static_cast<unsigned long>(2 * a + 1), [&](long k) {
                                  return pow_int(binom(6 * n, 3 * n + k), r) *
                                         pow_int(binom(4 * n, 2 * n + k), s) *
                                         pow_int(binom(2 * n, n + k), t);
                              });
                          return CorollaryEvaluation{
                              sum, {Int(n) * binom(6 * n, n), Int(3 * n) * binom(6 * n, 3 * n)}};
                      }});

        ps.push_back({"6.9", "rst-248n", "(r,s,t,n,a)", false, 5,
                      [](const std::vector<long>& p) {
                          return detail::all_positive(p, 4) && p[4] >= 0;
                      },
                      [](const std::vector<long>& p) {
                          const long n = p[3], a = p[4];
                          const unsigned long r = static_cast<unsigned long>(p[0]);
                          const unsigned long s = static_cast<unsigned long>(p[1]);
                          const unsigned long t = static_cast<unsigned long>(p[2]);
                          Int sum = detail::power_sum(
                              n, static_cast<unsigned long>(2 * a + 1), [&](long k) {
                                  return pow_int(binom(8 * n, 4 * n + k), r) *
                                         pow_int(binom(4 * n, 2 * n + k), s) *
                                         pow_int(binom(2 * n, n + k), t);
                              });
                          return CorollaryEvaluation{sum, {Int(2 * n) * binom(8 * n, 3 * n)}};
                      }});

        // Power-of-two corollary: n = 2^e, r >= 0, s,t >= 1, r+s+t odd.
        ps.push_back({"n2n", "n2n", "(n,r,s,t)", false, 4,
                      [](const std::vector<long>& p) {
                          return detail::is_power_of_two(p[0]) && p[1] >= 0 && p[2] >= 1 &&
                                 p[3] >= 1 && (p[1] + p[2] + p[3]) % 2 == 1;
                      },
                      [](const std::vector<long>& p) {
                          const long n = p[0];
                          const unsigned long r = static_cast<unsigned long>(p[1]);
                          const unsigned long s = static_cast<unsigned long>(p[2]);
                          const unsigned long t = static_cast<unsigned long>(p[3]);
                          Int sum = detail::power_sum(n, r, [&](long k) {
                              return pow_int(catalan_value(2 * static_cast<unsigned long>(n), k), s) *
                                     pow_int(catalan_value(static_cast<unsigned long>(n), k), t);
                          });
                          return CorollaryEvaluation{sum, {binom(4 * n - 1, n - 1)}};
                      }});

        return ps;
    }();
    return presets;
}

inline const CorollaryPreset* find_corollary(const std::string& id) {
    for (const auto& p : corollary_presets())
        if (p.id == id || p.alias == id) return &p;
    return nullptr;
}

inline DivisibilityVerdict corollary_divisibility_report(const std::string& id,
                                                         const std::vector<long>& params) {
    const CorollaryPreset* preset = find_corollary(id);
    if (!preset) throw std::invalid_argument("unknown corollary id: " + id);
    if (preset->variadic ? params.size() < preset->arity : params.size() != preset->arity)
        throw std::invalid_argument("corollary " + id + " expects params " + preset->params_doc);
    if (!preset->precondition(params))
        throw std::invalid_argument("corollary " + id + " precondition failed for params " +
                                    preset->params_doc);
    CorollaryEvaluation ev = preset->eval(params);
    Int divisor = 1;
    for (const Int& d : ev.divisors) divisor = lcm_int(divisor, d);
    return make_verdict(ev.sum, divisor);
}

}  // namespace cattri
