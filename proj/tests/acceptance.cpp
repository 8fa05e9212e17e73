// Acceptance gate: one line per criterion, exact arithmetic throughout,
// nonzero exit if anything fails. Criteria marked with runtime budgets are
// run single-threaded so the printed timing is meaningful.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "cattri/verify.hpp"

using namespace cattri;

namespace {

struct Criterion {
    int number;
    std::string label;
    std::function<bool(std::string&)> run;  // fills a failure detail on false
};

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "Shapiro identity for all n <= 300", [](std::string& why) {
        for (unsigned long n = 1; n <= 300; ++n) {
            auto res = shapiro_row_sum_check(n);
            if (!res.equal) {
                why = "n=" + std::to_string(n) + " lhs=" + res.lhs + " rhs=" + res.rhs;
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({2, "Theta closed form == brute force, m<=6 n<=40 r<=10",
                        [](std::string& why) {
        for (unsigned long m = 0; m <= 6; ++m)
            for (unsigned long n = 1; n <= 40; ++n)
                for (unsigned long r = 0; r <= 10; ++r) {
                    auto res = theta_check({m, n, r});
                    if (!res.equal) {
                        why = "(m,n,r)=(" + std::to_string(m) + "," + std::to_string(n) +
                              "," + std::to_string(r) + ") lhs=" + res.lhs +
                              " rhs=" + res.rhs;
                        return false;
                    }
                }
        return true;
    }});

    criteria.push_back({3, "S_7(3,3,2,3,3) = 10233/2 and S_11(3,3,2,2,2) = 2448",
                        [](std::string& why) {
        Rat s7 = s_value(3, {3, 3, 2, 3, 3});
        Rat s11 = s_value(5, {3, 3, 2, 2, 2});
        if (s7 != make_rat(Int(10233), Int(2))) {
            why = "S_7 = " + to_string(s7);
            return false;
        }
        if (s11 != Rat(2448)) {
            why = "S_11 = " + to_string(s11);
            return false;
        }
        return true;
    }});

    criteria.push_back({4, "Half-integer theorem, closed forms, parity: n<=100 r<=10",
                        [](std::string& why) {
        for (unsigned long n = 1; n <= 100; ++n) {
            for (unsigned long r = 1; r <= 10; ++r) {
                if (odd_power_sum(n, r).classification != Classification::half_integer) {
                    why = "classification at n=" + std::to_string(n) +
                          " r=" + std::to_string(r);
                    return false;
                }
                if (!odd_quotient_parity(n, r)) {
                    why = "parity at n=" + std::to_string(n) + " r=" + std::to_string(r);
                    return false;
                }
            }
            for (const auto& res : odd_power_closed_forms_check(n))
                if (!res.equal) {
                    why = res.id + " at n=" + std::to_string(n);
                    return false;
                }
        }
        return true;
    }});

    criteria.push_back({5, "Multi-index theorem + recurrence: m<=5 entries<=6 r<=5",
                        [](std::string& why) {
        bool ok = true;
        for (unsigned long m = 1; m <= 5 && ok; ++m)
            detail::for_each_composition(m, 6, [&](const CompositionIndex& a) {
                if (!ok) return;
                for (unsigned long r = 0; r <= 5; ++r) {
                    if (s_sum(r, a).classification == Classification::other) {
                        why = "classification at r=" + std::to_string(r) +
                              " composition len " + std::to_string(a.size());
                        ok = false;
                        return;
                    }
                    if (a.size() >= 3 && !s_recurrence_check(r, a).equal) {
                        why = "recurrence at r=" + std::to_string(r);
                        ok = false;
                        return;
                    }
                }
            });
        return ok;
    }});

    criteria.push_back({6, "Cube identity n<=40 r<=n-1; fifth/seventh n<=25",
                        [](std::string& why) {
        for (unsigned long n = 1; n <= 40; ++n)
            for (unsigned long r = 0; r + 1 <= n; ++r) {
                auto family = newkr_family_check(n, r);
                if (!family[0].equal) {
                    why = "cube at n=" + std::to_string(n) + " r=" + std::to_string(r);
                    return false;
                }
                if (n <= 25 && (!family[1].equal || !family[2].equal)) {
                    why = "companion at n=" + std::to_string(n) + " r=" + std::to_string(r);
                    return false;
                }
            }
        return true;
    }});

    criteria.push_back({7, "(13g) ninth-power closed form, 3 <= n <= 30",
                        [](std::string& why) {
        for (unsigned long n = 3; n <= 30; ++n)
            if (!cc13g_check(n).equal) {
                why = "n=" + std::to_string(n);
                return false;
            }
        return true;
    }});

    criteria.push_back({8, "Coprime non-prime-power list below 500 (21 values 39..497)",
                        [](std::string& why) {
        const std::vector<unsigned long> expected{39,  55,  93,  111, 119, 155, 161,
                                                  185, 253, 275, 279, 305, 327, 333,
                                                  351, 363, 377, 403, 407, 413, 497};
        auto got = scan_coprime_non_prime_powers(500);
        if (got != expected || got.size() != 21 || got.front() != 39 || got.back() != 497) {
            why = "list size " + std::to_string(got.size());
            return false;
        }
        return true;
    }});

    criteria.push_back({9, "Prime-power (+39,55) verdicts; n=6 divisibility by 462",
                        [](std::string& why) {
        const std::vector<unsigned long> ns{2,  3,  4,  5,  7,  8,  9,  11, 13,
                                            16, 25, 27, 32, 49, 64, 39, 55};
        for (unsigned long n : ns)
            for (unsigned long r = 0; r <= 4; ++r)
                for (unsigned long s = 1; s <= 4; ++s) {
                    if ((r + s) % 2 == 0) continue;
                    if (theorem14_verdict(n, r, s).classification ==
                        Classification::other) {
                        why = "(n,r,s)=(" + std::to_string(n) + "," + std::to_string(r) +
                              "," + std::to_string(s) + ")";
                        return false;
                    }
                }
        for (unsigned long r = 0; r <= 4; ++r)
            for (unsigned long s = 1; s <= 4; ++s) {
                if ((r + s) % 2 == 0) continue;
                Int sum = 0;
                for (long k = 1; k <= 6; ++k)
                    sum += pow_int(Int(k), r) * pow_int(catalan_entry(6, k), s);
                if (sum % 462 != 0) {
                    why = "n=6 (r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")";
                    return false;
                }
            }
        return true;
    }});

    criteria.push_back({10, "Corollaries 6.1-6.9: integer verdicts on the small grids",
                        [](std::string& why) {
        for (const auto& preset : corollary_presets()) {
            VerifyOptions opt;
            opt.workers = 1;
            Report rep = verify_corollary(preset.id, opt);
            if (rep.status != "pass") {
                why = "corollary " + preset.id + ": " +
                      (rep.failures.empty() ? "?" : rep.failures.front().lhs);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({11, "Even-power closed forms r<=5 and two-path eq, n<=60 r<=6",
                        [](std::string& why) {
        for (unsigned long n = 1; n <= 60; ++n) {
            for (const auto& res : even_power_closed_forms_check(n))
                if (!res.equal) {
                    why = res.id + " at n=" + std::to_string(n);
                    return false;
                }
            for (unsigned long r = 1; r <= 6; ++r) {
                try {
                    even_power_sum(n, r);
                } catch (const std::exception& e) {
                    why = "two-path at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                          ": " + e.what();
                    return false;
                }
            }
        }
        return true;
    }});

    criteria.push_back({12, "Conjecture scans: 7.1 n,r<=30; 7.2 printed sums; weak form n<=40",
                        [](std::string& why) {
        ConjectureReport c71 = scan("7.1", {range_of("n", 1, 30), range_of("r", 1, 30)});
        if (c71.status != "confirmed_in_range") {
            why = "7.1 status " + c71.status;
            return false;
        }
        ConjectureReport c72 = scan("7.2", {{"n", {7, 12, 13, 16}}, {"r", {1}}});
        if (c72.status != "confirmed_in_range") {
            why = "7.2 status " + c72.status;
            return false;
        }
        const std::vector<std::pair<long, std::string>> printed{
            {7, "sum=354331692;residue=1716"},
            {12, "sum=96906387191038334;residue=1352078"},
            {13, "sum=5066711735118128200;residue=0"},
            {16, "sum=786729115199980286001225;residue=300540195"}};
        for (const auto& [n, expect] : printed) {
            auto out = check_conjecture("7.2", {n, 1});
            if (!out.holds || out.lhs != expect) {
                why = "7.2 witness at n=" + std::to_string(n) + ": " + out.lhs;
                return false;
            }
        }
        for (unsigned long n = 1; n <= 40; ++n)
            for (unsigned long r = 1; r <= n; ++r)
                if (!conjecture71_weak_form_holds(n, r)) {
                    why = "weak form at n=" + std::to_string(n) + " r=" + std::to_string(r);
                    return false;
                }
        return true;
    }});

    criteria.push_back({13, "q-module: q-Shapiro and factorization n<=30; q=1; Phi products n<=200",
                        [](std::string& why) {
        for (unsigned long n = 1; n <= 30; ++n) {
            if (!q_shapiro_check(n).equal) {
                why = "q-shapiro at n=" + std::to_string(n);
                return false;
            }
            for (unsigned long k = 1; k <= n; ++k) {
                int sign = 0;
                if (!q_catalan_factorization_check(n, k, &sign).equal) {
                    why = "factorization at (n,k)=(" + std::to_string(n) + "," +
                          std::to_string(k) + ")";
                    return false;
                }
            }
        }
        for (long M = 0; M <= 40; ++M)
            for (long N = 0; N <= M; ++N)
                if (gaussian_binomial(M, N).eval(Int(1)) != binom(M, N)) {
                    why = "gauss q=1 at M=" + std::to_string(M) + " N=" + std::to_string(N);
                    return false;
                }
        for (unsigned long n = 1; n <= 200; ++n) {
            Poly prod(Int(1));
            for (unsigned long d = 1; d <= n; ++d)
                if (n % d == 0) prod *= cyclotomic(d);
            if (!(prod == -Poly::one_minus_qpow(n))) {
                why = "phi product at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({14, "Scan determinism: 1 vs 8 workers, byte-identical JSON",
                        [](std::string& why) {
#ifdef CATTRI_CLI_PATH
        const std::string cli = CATTRI_CLI_PATH;
        const std::string args = " scan 7.1 --n-max 16 --r-max 16 --format json";
        const std::string out1 = "acceptance_scan_w1.json";
        const std::string out8 = "acceptance_scan_w8.json";
        if (std::system((cli + args + " --workers 1 --out " + out1).c_str()) != 0 ||
            std::system((cli + args + " --workers 8 --chunk 7 --out " + out8).c_str()) != 0) {
            why = "cli invocation failed";
            return false;
        }
        json a = json::parse(read_file(out1));
        json b = json::parse(read_file(out8));
        a["elapsed_ms"] = 0;
        b["elapsed_ms"] = 0;
        std::remove(out1.c_str());
        std::remove(out8.c_str());
        if (a.dump() != b.dump()) {
            why = "reports differ beyond elapsed_ms";
            return false;
        }
        return true;
#else
        // library-level fallback
        Report a = report_from_scan(scan("7.1", {range_of("n", 1, 16), range_of("r", 1, 16)}, 1, 64));
        Report b = report_from_scan(scan("7.1", {range_of("n", 1, 16), range_of("r", 1, 16)}, 8, 7));
        a.elapsed_ms = b.elapsed_ms = 0;
        if (to_json(a).dump() != to_json(b).dump()) {
            why = "reports differ";
            return false;
        }
        return true;
#endif
    }});

    int failures = 0;
    for (auto& criterion : criteria) {
        const long started = now_ms();
        std::string why;
        bool ok = false;
        try {
            ok = criterion.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const long elapsed = now_ms() - started;
        std::printf("ACCEPTANCE %2d %s (%ld ms): %s%s%s\n", criterion.number,
                    ok ? "PASS" : "FAIL", elapsed, criterion.label.c_str(),
                    why.empty() ? "" : " -- ", why.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("ACCEPTANCE SUMMARY: %d of %zu criteria failed\n", failures,
                    criteria.size());
        return 1;
    }
    std::printf("ACCEPTANCE SUMMARY: all %zu criteria passed\n", criteria.size());
    return 0;
}
