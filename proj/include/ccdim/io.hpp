#pragma once

// Code files and search reports.
//
// Code file:
//   # comment lines start with '#'; blank lines are ignored
//   q k n
//   k lines of n integers in [0, q), each an element encoding
//
// Report: one JSON document with keys, in order, "version", "params",
// "summary", "violations", "verdicts".

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "search.hpp"

namespace ccdim {

inline constexpr const char* kVersion = "1.0.0";

/// Parses a code file. Rank-deficient generators are rejected.
inline LinearCode read_code(std::istream& in, const Caps& caps = default_caps()) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::vector<long long>> rows;
    long long q = -1, k = -1, n = -1;
    auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::vector<long long> nums;
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                fail("not an integer: '" + tok + "'");
            }
            if (used != tok.size() || v < 0) fail("not a nonnegative integer: '" + tok + "'");
            nums.push_back(v);
        }
        if (q < 0) {
            if (nums.size() != 3) fail("header must be 'q k n'");
            q = nums[0];
            k = nums[1];
            n = nums[2];
            if (k < 1 || n < 1) fail("k and n must be positive");
            continue;
        }
        if (static_cast<long long>(nums.size()) != n)
            fail("expected " + std::to_string(n) + " entries, got " + std::to_string(nums.size()));
        for (auto v : nums)
            if (v >= q) fail("entry " + std::to_string(v) + " is not below q = " + std::to_string(q));
        rows.push_back(std::move(nums));
    }
    if (q < 0) throw ParseError("missing header line");
    if (static_cast<long long>(rows.size()) != k)
        throw ParseError("expected " + std::to_string(k) + " matrix rows, got " + std::to_string(rows.size()));
    Field f = [&] {
        try {
            return Field::of_order(static_cast<std::uint64_t>(q), caps);
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad field order: ") + e.what());
        }
    }();
    std::vector<std::vector<Elem>> entries;
    for (const auto& r : rows) entries.emplace_back(r.begin(), r.end());
    try {
        return LinearCode::from_generator(Matrix::from_rows(f, entries));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline LinearCode read_code_file(const std::string& path, const Caps& caps = default_caps()) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_code(in, caps);
}

inline void write_code(std::ostream& out, const LinearCode& c, const std::string& comment = {}) {
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string l;
        while (std::getline(lines, l)) out << "# " << l << '\n';
    }
    out << c.q() << ' ' << c.k() << ' ' << c.n() << '\n';
    const Matrix& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << g(i, j);
        out << '\n';
    }
}

using Json = nlohmann::ordered_json;

inline Json gamma_json(const std::optional<std::size_t>& g) { return g ? Json(*g) : Json("inf"); }

inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Json verdict_json(const CodeVerdict& v) {
    Json j;
    j["id"] = v.id;
    j["n"] = v.n;
    j["k"] = v.k;
    j["q"] = v.q;
    j["gamma"] = gamma_json(v.gamma);
    j["d_perp"] = v.d_perp;
    j["kung_slack"] = v.kung_slack;
    j["class"] = std::string(to_string(v.cls));
    j["regime"] = v.unresolved_regime ? "unresolved-regime" : "resolved";
    return j;
}

inline Json report_json(const SearchReport& r) {
    Json j;
    j["version"] = kVersion;
    j["params"] = {{"q", r.params.q}, {"k_max", r.params.k_max}, {"n_max", r.params.n_max}, {"simple", r.params.simple_only}};
    Json summary;
    summary["examined"] = r.examined();
    for (auto c : kAllClasses) summary[std::string(to_string(c))] = r.counts.at(c);
    summary["unresolved_regime"] = r.unresolved;
    j["summary"] = std::move(summary);
    Json viol = Json::array();
    for (const auto& v : r.violations) {
        Json e = verdict_json(v.verdict);
        e["generator"] = matrix_json(v.generator);
        viol.push_back(std::move(e));
    }
    j["violations"] = std::move(viol);
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
    j["verdicts"] = std::move(verdicts);
    if (r.resume) j["resume"] = {{"k", r.resume->k}, {"n", r.resume->n}, {"lead", r.resume->lead}};
    return j;
}

inline CodeVerdict verdict_from_json(const Json& j) {
    CodeVerdict v;
    v.id = j.at("id").get<std::vector<std::size_t>>();
    v.n = j.at("n").get<std::size_t>();
    v.k = j.at("k").get<std::size_t>();
    v.q = j.at("q").get<int>();
    const Json& g = j.at("gamma");
    if (g.is_number()) v.gamma = g.get<std::size_t>();
    v.d_perp = j.at("d_perp").get<std::size_t>();
    v.kung_slack = j.at("kung_slack").get<long>();
    const auto cls = j.at("class").get<std::string>();
    const auto it = std::find_if(kAllClasses.begin(), kAllClasses.end(), [&](auto c) { return to_string(c) == cls; });
    if (it == kAllClasses.end()) throw ParseError("unknown class '" + cls + "'");
    v.cls = *it;
    v.unresolved_regime = j.at("regime").get<std::string>() == "unresolved-regime";
    return v;
}

/// Inverse of report_json (timing is not stored).
inline SearchReport report_from_json(const Json& j, const Caps& caps = default_caps()) {
    try {
        SearchReport r;
        const Json& p = j.at("params");
        r.params = {p.at("q").get<int>(), p.at("k_max").get<std::size_t>(), p.at("n_max").get<std::size_t>(),
                    p.at("simple").get<bool>()};
        const Field f = Field::of_order(static_cast<std::uint64_t>(r.params.q), caps);
        for (auto c : kAllClasses) r.counts[c] = 0;
        for (const auto& v : j.at("verdicts")) {
            r.verdicts.push_back(verdict_from_json(v));
            ++r.counts[r.verdicts.back().cls];
            if (r.verdicts.back().unresolved_regime && r.verdicts.back().cls != ConjectureClass::not_applicable)
                ++r.unresolved;
        }
        for (const auto& v : j.at("violations")) {
            std::vector<std::vector<Elem>> rows;
            for (const auto& row : v.at("generator")) rows.push_back(row.get<std::vector<Elem>>());
            r.violations.push_back({verdict_from_json(v), Matrix::from_rows(f, rows)});
        }
        if (j.contains("resume")) {
            const Json& c = j.at("resume");
            r.resume = SearchCursor{c.at("k").get<std::size_t>(), c.at("n").get<std::size_t>(), c.at("lead").get<std::size_t>()};
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

/// Appends the verdicts of `tail` (a run started at head.resume) to `head`.
inline SearchReport merge_reports(SearchReport head, const SearchReport& tail) {
    for (const auto& v : tail.verdicts) {
        ++head.counts[v.cls];
        if (v.unresolved_regime && v.cls != ConjectureClass::not_applicable) ++head.unresolved;
        head.verdicts.push_back(v);
    }
    head.violations.insert(head.violations.end(), tail.violations.begin(), tail.violations.end());
    head.resume = tail.resume;
    head.seconds += tail.seconds;
    return head;
}

/// Serialized report; byte-stable for a given parameter set.
inline std::string report_text(const SearchReport& r) { return report_json(r).dump(1) + "\n"; }

inline void write_report_csv(std::ostream& out, const SearchReport& r) {
    out << "id,n,k,q,gamma,d_perp,kung_slack,class,regime\n";
    for (const auto& v : r.verdicts) {
        for (std::size_t i = 0; i < v.id.size(); ++i) out << (i ? " " : "") << v.id[i];
        out << ',' << v.n << ',' << v.k << ',' << v.q << ',' << (v.gamma ? std::to_string(*v.gamma) : "inf") << ','
            << v.d_perp << ',' << v.kung_slack << ',' << to_string(v.cls) << ','
            << (v.unresolved_regime ? "unresolved-regime" : "resolved") << '\n';
    }
}

}  // namespace ccdim
