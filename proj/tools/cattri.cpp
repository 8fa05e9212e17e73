// Command-line front end: verification suites, conjecture scans, value
// tables, and q-Catalan factorizations, with machine-readable reports.
//
// Exit codes: 0 pass/confirmed, 1 verification failure, 2 usage error,
// 3 conjecture counterexample found (falsified).

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "cattri/verify.hpp"

namespace {

using namespace cattri;

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct CommonFlags {
    std::string format = "text";
    std::string out;
    unsigned workers = 1;
    unsigned long seed = 0;  // reserved; scans are exhaustive and unshuffled
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", flags.out, "Write the report to this path");
    cmd->add_option("--workers", flags.workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags.seed, "Reserved (kept for config compatibility)");
}

int emit(Report rep, const CommonFlags& flags, long started_ms) {
    rep.elapsed_ms = now_ms() - started_ms;
    write_report(rep, flags.format, flags.out, std::cout);
    if (rep.status == "falsified") return 3;
    return rep.status == "pass" || rep.status == "confirmed_in_range" ||
                   rep.status == "statement_ambiguous"
               ? 0
               : 1;
}

std::vector<long> parse_comma_list(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Catalan-triangle binomial sum identities"};
    app.require_subcommand(1);

    // ----- verify -----
    auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite,
                           "shapiro | theta | powersum | multiindex | corollary:<id> | "
                           "modular | q | all")
        ->required();
    VerifyOptions vopt;
    verify_cmd->add_option("--n-max", vopt.n_max);
    verify_cmd->add_option("--m-max", vopt.m_max);
    verify_cmd->add_option("--r-max", vopt.r_max);
    verify_cmd->add_option("--s-max", vopt.s_max);
    verify_cmd->add_option("--entry-max", vopt.entry_max);
    verify_cmd->add_option("--base-max", vopt.base_max);
    verify_cmd->add_option("--exp-max", vopt.exp_max);
    CommonFlags vflags;
    add_common(verify_cmd, vflags);

    // ----- scan -----
    auto* scan_cmd = app.add_subcommand("scan", "Scan a conjecture over a parameter grid");
    std::string conjecture_id;
    scan_cmd->add_option("id", conjecture_id, "7.1 .. 7.9")->required();
    std::map<std::string, std::string> value_lists;
    std::map<std::string, long> max_values;
    for (const char* name : {"n", "r", "s", "t", "m"}) {
        value_lists[name] = "";
        max_values[name] = 0;
        scan_cmd->add_option("--" + std::string(name), value_lists[name],
                             std::string("Explicit comma list for parameter ") + name);
        scan_cmd->add_option("--" + std::string(name) + "-max", max_values[name],
                             std::string("Upper bound for parameter ") + name);
    }
    unsigned long chunk = 64;
    scan_cmd->add_option("--chunk", chunk, "Work unit size")->check(CLI::PositiveNumber);
    CommonFlags sflags;
    add_common(scan_cmd, sflags);

    // ----- table -----
    auto* table_cmd = app.add_subcommand("table", "Print exact value tables");
    std::string kind;
    table_cmd->add_option("kind", kind, "catalan-row | theta | s-sum | coprime-list")
        ->required();
    long table_n = 0, table_m = 0, table_r = 0, table_limit = 500;
    std::string table_comp;
    table_cmd->add_option("--n", table_n);
    table_cmd->add_option("--m", table_m);
    table_cmd->add_option("--r", table_r);
    table_cmd->add_option("--comp", table_comp, "Composition, e.g. 3,3,2,3,3");
    table_cmd->add_option("--limit", table_limit);

    // ----- qfactor -----
    auto* qfactor_cmd =
        app.add_subcommand("qfactor", "Cyclotomic factorization of q-Catalan entries");
    long qf_n = 0, qf_k = 0;
    bool qf_expand = false;
    qfactor_cmd->add_option("--n", qf_n)->required();
    qfactor_cmd->add_option("--k", qf_k, "Single k (default: the whole row)");
    qfactor_cmd->add_flag("--expand", qf_expand, "Also print the expanded polynomial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const long started = now_ms();
    try {
        if (*verify_cmd) {
            if (suite == "all") {
                auto reports = verify_all(vopt);
                bool any_fail = false;
                if (vflags.format == "json") {
                    json arr = json::array();
                    for (auto& rep : reports) {
                        rep.elapsed_ms = now_ms() - started;
                        arr.push_back(to_json(rep));
                        any_fail |= rep.status != "pass";
                    }
                    std::string body = arr.dump(2) + "\n";
                    if (vflags.out.empty())
                        std::cout << body;
                    else
                        std::ofstream(vflags.out) << body;
                } else {
                    std::ostringstream combined;
                    for (auto& rep : reports) {
                        rep.elapsed_ms = now_ms() - started;
                        combined << (vflags.format == "csv" ? to_csv(rep) : to_text(rep));
                        any_fail |= rep.status != "pass";
                    }
                    if (vflags.out.empty())
                        std::cout << combined.str();
                    else
                        std::ofstream(vflags.out) << combined.str();
                }
                return any_fail ? 1 : 0;
            }
            vopt.workers = vflags.workers;
            vopt.keep_rows = vflags.format == "csv";
            Report rep;
            if (suite == "shapiro") rep = verify_shapiro(vopt);
            else if (suite == "theta") rep = verify_theta(vopt);
            else if (suite == "powersum") rep = verify_powersum(vopt);
            else if (suite == "multiindex") rep = verify_multiindex(vopt);
            else if (suite == "modular") rep = verify_modular(vopt);
            else if (suite == "q") rep = verify_q(vopt);
            else if (suite.rfind("corollary:", 0) == 0)
                rep = verify_corollary(suite.substr(10), vopt);
            else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return emit(std::move(rep), vflags, started);
        }

        if (*scan_cmd) {
            const ConjectureSpec* spec = find_conjecture(conjecture_id);
            if (!spec) {
                std::cerr << "unknown conjecture id: " << conjecture_id << "\n";
                return 2;
            }
            std::vector<ScanRange> ranges;
            for (std::size_t d = 0; d < spec->params.size(); ++d) {
                const std::string& pname = spec->params[d];
                const ScanRange& dflt = spec->default_ranges[d];
                if (!value_lists[pname].empty()) {
                    ranges.push_back({pname, parse_comma_list(value_lists[pname])});
                } else if (max_values[pname] > 0) {
                    ranges.push_back(
                        range_of(pname, dflt.values.front(), max_values[pname]));
                } else {
                    ranges.push_back(dflt);
                }
            }
            ConjectureReport scan_report =
                scan(conjecture_id, std::move(ranges), sflags.workers, chunk,
                     sflags.format == "csv");
            return emit(report_from_scan(scan_report), sflags, started);
        }

        if (*table_cmd) {
            if (kind == "catalan-row") {
                if (table_n < 1) {
                    std::cerr << "table catalan-row needs --n\n";
                    return 2;
                }
                TriangleRow row = catalan_row(static_cast<unsigned long>(table_n));
                for (std::size_t i = 0; i < row.entries.size(); ++i)
                    std::cout << (i ? " " : "") << to_string(row.entries[i]);
                std::cout << "\n";
            } else if (kind == "theta") {
                if (table_n < 1) {
                    std::cerr << "table theta needs --n (plus --m, --r)\n";
                    return 2;
                }
                ThetaParams p{static_cast<unsigned long>(table_m),
                              static_cast<unsigned long>(table_n),
                              static_cast<unsigned long>(table_r)};
                std::cout << to_string(theta_bruteforce(p)) << "\n";
            } else if (kind == "s-sum") {
                if (table_comp.empty()) {
                    std::cerr << "table s-sum needs --comp (and --r)\n";
                    return 2;
                }
                CompositionIndex comp;
                for (long v : parse_comma_list(table_comp))
                    comp.push_back(static_cast<unsigned long>(v));
                std::cout << to_string(
                                 s_value(static_cast<unsigned long>(table_r), comp))
                          << "\n";
            } else if (kind == "coprime-list") {
                auto list =
                    scan_coprime_non_prime_powers(static_cast<unsigned long>(table_limit));
                for (std::size_t i = 0; i < list.size(); ++i)
                    std::cout << (i ? " " : "") << list[i];
                std::cout << "\n";
            } else {
                std::cerr << "unknown table kind: " << kind << "\n";
                return 2;
            }
            return 0;
        }

        if (*qfactor_cmd) {
            if (qf_n < 1 || qf_k < 0 || qf_k > qf_n) {
                std::cerr << "qfactor needs --n >= 1 and 0 <= --k <= n\n";
                return 2;
            }
            const unsigned long n = static_cast<unsigned long>(qf_n);
            const unsigned long k_lo = qf_k == 0 ? 1 : static_cast<unsigned long>(qf_k);
            const unsigned long k_hi = qf_k == 0 ? n : static_cast<unsigned long>(qf_k);
            for (unsigned long k = k_lo; k <= k_hi; ++k) {
                CyclotomicFactorization fac = q_catalan_factorization(n, k);
                std::cout << "B(" << n << "," << k << ")(q) =";
                if (fac.factors.empty()) std::cout << " 1";
                for (std::size_t i = 0; i < fac.factors.size(); ++i) {
                    const auto& [d, e] = fac.factors[i];
                    std::cout << (i ? " * " : " ") << "Phi_" << d;
                    if (e > 1) std::cout << "^" << e;
                }
                if (qf_expand)
                    std::cout << " = " << q_catalan_entry(n, k).to_string();
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
