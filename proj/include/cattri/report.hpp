#pragma once

// Machine-readable run reports. JSON follows the fixed schema
//   { "command", "params", "checked", "failures": [{id, tuple, lhs, rhs}],
//     "status", "elapsed_ms" }
// plus the additive fields "skipped", "notes" and (for scans) "ambiguities".
// All numbers that could exceed machine range are decimal strings. nlohmann
// objects are key-sorted, so emission is deterministic.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cattri/check.hpp"
#include "cattri/conjectures.hpp"

namespace cattri {

using json = nlohmann::json;

struct ReportRow {
    std::string id;
    std::vector<long> tuple;
    std::string lhs;
    std::string rhs;
    std::string outcome;  // pass | fail | ambiguous | skipped
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;  // insertion order kept
    unsigned long checked = 0;
    unsigned long skipped = 0;
    std::vector<ReportRow> failures;
    std::vector<ReportRow> ambiguities;
    std::vector<ReportRow> rows;  // full audit trail (CSV); may be empty
    std::string status;
    long elapsed_ms = 0;
    std::vector<std::string> notes;

    void record(const IdentityCheckResult& r, bool keep_row = false) {
        ++checked;
        if (!r.equal) failures.push_back({r.id, r.tuple, r.lhs, r.rhs, "fail"});
        if (keep_row)
            rows.push_back({r.id, r.tuple, r.lhs, r.rhs, r.equal ? "pass" : "fail"});
    }

    void record_condition(const std::string& id, std::vector<long> tuple, bool ok,
                          const std::string& lhs, const std::string& rhs,
                          bool keep_row = false) {
        ++checked;
        if (!ok) failures.push_back({id, tuple, lhs, rhs, "fail"});
        if (keep_row) rows.push_back({id, std::move(tuple), lhs, rhs, ok ? "pass" : "fail"});
    }

    void finish() { status = failures.empty() ? "pass" : "fail"; }
};

inline json to_json(const ReportRow& r) {
    return json{{"id", r.id}, {"tuple", r.tuple}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

inline json to_json(const Report& rep) {
    json params = json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back(to_json(f));
    json ambiguities = json::array();
    for (const auto& a : rep.ambiguities) ambiguities.push_back(to_json(a));
    json out{{"command", rep.command}, {"params", params},
             {"checked", rep.checked}, {"skipped", rep.skipped},
             {"failures", failures},   {"status", rep.status},
             {"elapsed_ms", rep.elapsed_ms}, {"notes", rep.notes}};
    if (!rep.ambiguities.empty()) out["ambiguities"] = ambiguities;
    return out;
}

inline Report report_from_json(const json& j) {
    Report rep;
    rep.command = j.at("command").get<std::string>();
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
        rep.params.emplace_back(it.key(), it.value().get<std::string>());
    rep.checked = j.at("checked").get<unsigned long>();
    rep.skipped = j.at("skipped").get<unsigned long>();
    for (const auto& f : j.at("failures"))
        rep.failures.push_back({f.at("id").get<std::string>(),
                                f.at("tuple").get<std::vector<long>>(),
                                f.at("lhs").get<std::string>(),
                                f.at("rhs").get<std::string>(), "fail"});
    if (j.contains("ambiguities"))
        for (const auto& a : j.at("ambiguities"))
            rep.ambiguities.push_back({a.at("id").get<std::string>(),
                                       a.at("tuple").get<std::vector<long>>(),
                                       a.at("lhs").get<std::string>(),
                                       a.at("rhs").get<std::string>(), "ambiguous"});
    rep.status = j.at("status").get<std::string>();
    rep.elapsed_ms = j.at("elapsed_ms").get<long>();
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

inline std::string tuple_string(const std::vector<long>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

// One row per checked tuple, final pass/fail column.
inline std::string to_csv(const Report& rep) {
    std::ostringstream os;
    os << "id,tuple,lhs,rhs,outcome\n";
    auto emit = [&](const ReportRow& r) {
        os << r.id << ",\"" << tuple_string(r.tuple) << "\",\"" << r.lhs << "\",\""
           << r.rhs << "\"," << r.outcome << "\n";
    };
    if (!rep.rows.empty())
        for (const auto& r : rep.rows) emit(r);
    else {
        for (const auto& r : rep.failures) emit(r);
        for (const auto& r : rep.ambiguities) emit(r);
    }
    return os.str();
}

inline std::string to_text(const Report& rep) {
    std::ostringstream os;
    os << rep.command << ": status=" << rep.status << " checked=" << rep.checked;
    if (rep.skipped) os << " skipped=" << rep.skipped;
    os << " failures=" << rep.failures.size();
    if (!rep.ambiguities.empty()) os << " ambiguities=" << rep.ambiguities.size();
    os << " elapsed_ms=" << rep.elapsed_ms << "\n";
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
    for (const auto& f : rep.failures)
        os << "  FAIL " << f.id << " (" << tuple_string(f.tuple) << "): lhs=" << f.lhs
           << " rhs=" << f.rhs << "\n";
    for (const auto& a : rep.ambiguities)
        os << "  AMBIGUOUS " << a.id << " (" << tuple_string(a.tuple) << "): " << a.lhs
           << " vs " << a.rhs << "\n";
    return os.str();
}

inline Report report_from_scan(const ConjectureReport& scan_report) {
    Report rep;
    rep.command = "scan " + scan_report.id;
    for (const auto& r : scan_report.ranges) {
        std::string vals;
        if (!r.values.empty() &&
            r.values.back() - r.values.front() + 1 == static_cast<long>(r.values.size())) {
            vals = std::to_string(r.values.front()) + ".." + std::to_string(r.values.back());
        } else {
            for (std::size_t i = 0; i < r.values.size(); ++i) {
                if (i) vals += ",";
                vals += std::to_string(r.values[i]);
            }
        }
        rep.params.emplace_back(r.name, vals);
    }
    rep.checked = scan_report.checked;
    rep.skipped = scan_report.skipped;
    for (const auto& c : scan_report.counterexamples)
        rep.failures.push_back({scan_report.id, c.tuple, c.lhs, c.rhs, "fail"});
    for (const auto& a : scan_report.ambiguities)
        rep.ambiguities.push_back({scan_report.id, a.tuple, a.lhs, a.rhs, "ambiguous"});
    for (const auto& r : scan_report.rows)
        rep.rows.push_back({scan_report.id, r.tuple, r.lhs, r.rhs, r.outcome});
    rep.status = scan_report.status;
    rep.notes = scan_report.notes;
    return rep;
}

inline void write_report(const Report& rep, const std::string& format,
                         const std::string& path, std::ostream& fallback) {
    std::string body;
    if (format == "json")
        body = to_json(rep).dump(2) + "\n";
    else if (format == "csv")
        body = to_csv(rep);
    else
        body = to_text(rep);
    if (path.empty()) {
        fallback << body;
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output path: " + path);
        out << body;
    }
}

}  // namespace cattri
