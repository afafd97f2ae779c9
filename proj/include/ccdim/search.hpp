#pragma once

// Exhaustive verification of gamma(C) <= k - d^perp + 3 (Kung) and of the
// sharper k - d^perp + 2 bound over all small codes, with classification of
// the two known exception families.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "code.hpp"
#include "construct.hpp"

namespace ccdim {

enum class ConjectureClass {
    holds_strict,
    exception_dual_hamming,
    exception_binary_parity,
    violation,
    not_applicable,
};

inline constexpr std::array<ConjectureClass, 5> kAllClasses = {
    ConjectureClass::holds_strict, ConjectureClass::exception_dual_hamming, ConjectureClass::exception_binary_parity,
    ConjectureClass::violation, ConjectureClass::not_applicable};

inline std::string_view to_string(ConjectureClass c) {
    switch (c) {
        case ConjectureClass::holds_strict: return "HOLDS_STRICT";
        case ConjectureClass::exception_dual_hamming: return "EXCEPTION_DUAL_HAMMING";
        case ConjectureClass::exception_binary_parity: return "EXCEPTION_BINARY_PARITY";
        case ConjectureClass::violation: return "VIOLATION";
        case ConjectureClass::not_applicable: return "NOT_APPLICABLE";
    }
    return "?";
}

struct CodeVerdict {
    std::vector<std::size_t> id;  // canonical point indices of the columns (search codes only)
    std::size_t n = 0;
    std::size_t k = 0;
    int q = 0;
    std::optional<std::size_t> gamma;  // nullopt = infinity
    std::size_t d_perp = 0;
    long kung_slack = 0;  // (k - d_perp + 3) - gamma; 0 when not applicable
    ConjectureClass cls = ConjectureClass::not_applicable;
    bool unresolved_regime = false;  // q = 2^m >= 4 and d_perp > 4

    friend bool operator==(const CodeVerdict&, const CodeVerdict&) = default;
};

inline bool is_power_of_two(int q) { return q > 0 && (q & (q - 1)) == 0; }

/// Columns are pairwise non-proportional and there are (q^k-1)/(q-1) of them.
inline bool is_dual_hamming(const LinearCode& c) {
    if (c.n() != projective_point_count(static_cast<std::uint64_t>(c.q()), c.k())) return false;
    if (c.has_zero_column()) return false;
    std::vector<Vec> cols;
    for (auto col : c.generator().columns()) cols.push_back(normalize_point(c.field(), std::move(col)));
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

inline CodeVerdict classify(const LinearCode& c, const Caps& caps = default_caps()) {
    CodeVerdict v;
    v.n = c.n();
    v.k = c.k();
    v.q = c.q();
    v.gamma = covering_dimension_subcode(c, caps).value;
    v.d_perp = dual_distance(c, caps);
    v.unresolved_regime = v.q >= 4 && is_power_of_two(v.q) && v.d_perp > 4;
    if (v.d_perp < 3 || !v.gamma) {
        v.cls = ConjectureClass::not_applicable;
        return v;
    }
    const long gamma = static_cast<long>(*v.gamma);
    const long kung = static_cast<long>(v.k) - static_cast<long>(v.d_perp) + 3;
    v.kung_slack = kung - gamma;
    if (v.kung_slack < 0)
        throw CrossCheckFailure("Kung's bound fails: gamma = " + std::to_string(gamma) + " > " + std::to_string(kung));

    const bool dual_hamming = is_dual_hamming(c);
    const bool binary_parity = v.q == 2 && v.k + 1 == v.n && v.d_perp == v.n && v.n % 2 == 1;
    if (dual_hamming || binary_parity) {
        v.cls = dual_hamming ? ConjectureClass::exception_dual_hamming : ConjectureClass::exception_binary_parity;
        if (gamma != kung)
            throw CrossCheckFailure(std::string(to_string(v.cls)) + " code with gamma " + std::to_string(gamma) +
                                    " != k - d_perp + 3");
        return v;
    }
    v.cls = gamma <= kung - 1 ? ConjectureClass::holds_strict : ConjectureClass::violation;
    return v;
}

struct SearchParams {
    int q = 2;
    std::size_t k_max = 3;
    std::size_t n_max = 7;
    bool simple_only = true;  // distinct points (d^perp >= 3); otherwise multisets
};

/// Position in the task sequence (k ascending, n ascending, leading point ascending).
struct SearchCursor {
    std::size_t k = 1;
    std::size_t n = 1;
    std::size_t lead = 0;
    friend auto operator<=>(const SearchCursor&, const SearchCursor&) = default;
};

struct Violation {
    CodeVerdict verdict;
    Matrix generator;
};

struct SearchReport {
    SearchParams params;
    std::vector<CodeVerdict> verdicts;                 // sorted by (k, n, id)
    std::map<ConjectureClass, std::uint64_t> counts;   // every class present, possibly 0
    std::uint64_t unresolved = 0;                      // applicable codes in the open regime
    std::vector<Violation> violations;
    std::optional<SearchCursor> resume;                // set when interrupted
    double seconds = 0;                                // wall time, not serialized

    std::uint64_t examined() const { return verdicts.size(); }
};

namespace detail {

// Advances c (sorted indices into [0, pool)) to the next combination with the
// same first element; repetition allowed when `multiset`. Returns false at the end.
inline bool next_tail(std::vector<std::size_t>& c, std::size_t pool, bool multiset) {
    const std::size_t n = c.size();
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t limit = multiset ? pool - 1 : pool - (n - i);
        if (c[i] < limit) {
            ++c[i];
            for (std::size_t j = i + 1; j < n; ++j) c[j] = multiset ? c[j - 1] : c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline double combinations(std::size_t pool, std::size_t n, bool multiset) {
    const double top = multiset ? static_cast<double>(pool + n - 1) : static_cast<double>(pool);
    double out = 1;
    for (std::size_t i = 0; i < n; ++i) out = out * (top - static_cast<double>(i)) / static_cast<double>(i + 1);
    return out;
}

}  // namespace detail

/// Calls fn(id, code) for every full-rank code whose columns are an n-subset
/// (or n-multiset) of PG(k-1,q) with leading point `lead`, in lexicographic order.
template <class Fn>
void enumerate_codes_with_lead(const Field& f, const std::vector<Vec>& points, std::size_t k, std::size_t n,
                               std::size_t lead, bool simple_only, Fn&& fn) {
    const std::size_t pool = points.size();
    if (n == 0 || lead >= pool) return;
    if (simple_only && lead + n > pool) return;
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = simple_only ? lead + i : lead;
    do {
        EchelonBasis span(f, k);
        for (auto idx : c)
            if (span.insert(points[idx]) && span.rank() == k) break;
        if (span.rank() < k) continue;
        std::vector<Vec> cols;
        cols.reserve(n);
        for (auto idx : c) cols.push_back(points[idx]);
        fn(static_cast<const std::vector<std::size_t>&>(c), LinearCode::from_generator(Matrix::from_columns(f, k, cols)));
    } while (detail::next_tail(c, pool, !simple_only));
}

/// Every code of length n, dimension k from PG(k-1,q) points.
template <class Fn>
void enumerate_codes(const Field& f, std::size_t k, std::size_t n, bool simple_only, Fn&& fn,
                     const Caps& caps = default_caps()) {
    const auto points = projective_points(f, k, caps);
    const double total = detail::combinations(points.size(), n, !simple_only);
    if (total > static_cast<double>(caps.code_subsets)) throw CapExceeded("code enumeration exceeds cap");
    for (std::size_t lead = 0; lead < points.size(); ++lead) enumerate_codes_with_lead(f, points, k, n, lead, simple_only, fn);
}

/// Classifies every enumerated code for k <= k_max, k <= n <= n_max.
/// Work is split by leading point; results are merged in task order, so the
/// report does not depend on `workers`. When `stop` becomes true, workers
/// finish their current task and the report covers the completed prefix of
/// tasks, with `resume` pointing at the first task not included.
inline SearchReport run_search(const SearchParams& params, unsigned workers, const std::atomic<bool>* stop = nullptr,
                               std::optional<SearchCursor> start = std::nullopt, const Caps& caps = default_caps()) {
    const auto t0 = std::chrono::steady_clock::now();
    const Field f = Field::of_order(static_cast<std::uint64_t>(params.q), caps);

    struct Task {
        SearchCursor at;
        const std::vector<Vec>* points;
    };
    std::vector<std::vector<Vec>> point_lists(params.k_max + 1);
    std::vector<Task> tasks;
    for (std::size_t k = 1; k <= params.k_max; ++k) {
        point_lists[k] = projective_points(f, k, caps);
        const auto& pts = point_lists[k];
        for (std::size_t n = k; n <= params.n_max; ++n) {
            if (detail::combinations(pts.size(), n, !params.simple_only) > static_cast<double>(caps.code_subsets))
                throw CapExceeded("code enumeration for k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                                  " exceeds cap");
            for (std::size_t lead = 0; lead < pts.size(); ++lead) {
                SearchCursor at{k, n, lead};
                if (start && at < *start) continue;
                tasks.push_back({at, &pts});
            }
        }
    }

    std::vector<std::vector<CodeVerdict>> results(tasks.size());
    std::vector<std::vector<Violation>> found(tasks.size());
    std::vector<char> done(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load()) {
            if (stop && stop->load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            try {
                enumerate_codes_with_lead(f, *t.points, t.at.k, t.at.n, t.at.lead, params.simple_only,
                                          [&](const std::vector<std::size_t>& id, const LinearCode& c) {
                                              CodeVerdict v = classify(c, caps);
                                              v.id = id;
                                              if (v.cls == ConjectureClass::violation) found[i].push_back({v, c.generator()});
                                              results[i].push_back(std::move(v));
                                          });
                done[i] = 1;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    const unsigned count = std::max(1u, workers);
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    SearchReport report;
    report.params = params;
    for (auto c : kAllClasses) report.counts[c] = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!done[i]) {
            report.resume = tasks[i].at;
            break;
        }
        for (auto& v : results[i]) {
            ++report.counts[v.cls];
            if (v.unresolved_regime && v.cls != ConjectureClass::not_applicable) ++report.unresolved;
            report.verdicts.push_back(std::move(v));
        }
        for (auto& v : found[i]) report.violations.push_back(std::move(v));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ccdim
