#pragma once

// Registry of reproducible checks, one per published numeric claim, shared by
// `ccdim verify-paper` and the acceptance test binary. Randomized suites draw
// from a seeded mt19937_64, so a given seed always checks the same codes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "code.hpp"
#include "construct.hpp"
#include "formulas.hpp"
#include "io.hpp"
#include "matroid.hpp"
#include "search.hpp"

namespace ccdim {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct ClaimContext {
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 4;  // parallel side of the determinism check
    Caps caps = default_caps();
};

struct ClaimOutcome {
    bool pass = false;
    std::string detail;
};

struct Claim {
    std::string id;
    std::string title;
    double budget_seconds = 600;
    std::function<ClaimOutcome(const ClaimContext&)> run;
};

struct ClaimRecord {
    std::string id;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

namespace claims {

// Collects the first few failures; a claim passes when none were recorded.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    std::uint64_t checks() const { return checks_; }
    ClaimOutcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << checks_ << " checks";
        if (!summary.empty()) s << ", " << summary;
        if (failures_) s << ", " << failures_ << " failed: " << first_;
        return {failures_ == 0, s.str()};
    }

private:
    std::uint64_t checks_ = 0;
    std::uint64_t failures_ = 0;
    std::string first_;
};

template <class T>
std::string str(const T& v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

inline std::string gamma_str(const std::optional<std::size_t>& g) { return g ? std::to_string(*g) : "inf"; }

/// Random full-rank k x n generator over GF(q) with nonzero columns, except
/// that with probability `zero_column_rate` one column is forced to zero.
inline LinearCode random_code(std::mt19937_64& rng, int q, std::size_t n, std::size_t k,
                              double zero_column_rate = 0, const Caps& caps = default_caps()) {
    const Field f = Field::of_order(static_cast<std::uint64_t>(q), caps);
    std::uniform_int_distribution<int> entry(0, q - 1);
    std::bernoulli_distribution zero(zero_column_rate);
    const bool want_zero = zero_column_rate > 0 && zero(rng) && n > k;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t zero_col = want_zero ? pick(rng) : n;
    while (true) {
        Matrix g(f, k, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == zero_col) continue;
            bool nonzero = false;
            while (!nonzero)
                for (std::size_t i = 0; i < k; ++i) nonzero |= (g(i, j) = static_cast<Elem>(entry(rng))) != 0;
        }
        if (rank(g) == k) return LinearCode::from_generator(g);
    }
}

/// Random codes with q cycling through `qs`, n uniform in [1, n_max] and
/// k uniform in [1, min(k_max, n)].
inline std::vector<LinearCode> random_suite(std::uint64_t seed, std::size_t count, const std::vector<int>& qs,
                                            std::size_t n_max, std::size_t k_max, double zero_column_rate,
                                            const Caps& caps) {
    std::mt19937_64 rng(seed);
    std::vector<LinearCode> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int q = qs[i % qs.size()];
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, n_max)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(k_max, n))(rng);
        out.push_back(random_code(rng, q, n, k, zero_column_rate, caps));
    }
    return out;
}

inline std::vector<LinearCode> oracle_suite(const ClaimContext& ctx) {
    return random_suite(ctx.seed, 500, {2, 3, 4, 5}, 10, 5, 0.1, ctx.caps);
}

inline LinearCode worked_example_code() {
    const Field f = Field::of_order(3);
    return LinearCode::from_generator(Matrix::from_rows(f, {{1, 0, 0, 0, 0, 1, 2, 2, 2, 1, 0},
                                                            {0, 1, 0, 0, 0, 0, 1, 2, 2, 2, 1},
                                                            {0, 0, 1, 0, 0, 2, 1, 2, 0, 1, 2},
                                                            {0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                                                            {0, 0, 0, 0, 1, 2, 2, 2, 1, 0, 1}}));
}

inline ClaimOutcome worked_example(const ClaimContext& ctx) {
    Tally t;
    const LinearCode c = worked_example_code();
    const std::vector<std::uint64_t> expected = {0, 330, 825, 110, 1};
    std::string got;
    for (std::size_t r = 1; r <= 5; ++r) {
        const auto a = support_weight_distribution(c, r, ctx.caps).at(11);
        got += (r > 1 ? "," : "") + std::to_string(a);
        t.check(a == expected[r - 1], "A_11^(" + std::to_string(r) + ") = " + std::to_string(a));
    }
    const auto g1 = covering_dimension_subcode(c, ctx.caps).value;
    const auto g2 = covering_dimension_avoidance(c, ctx.caps).value;
    const auto dp = dual_distance(c, ctx.caps);
    t.check(g1 == std::optional<std::size_t>(2), "gamma (subcodes) = " + gamma_str(g1));
    t.check(g2 == std::optional<std::size_t>(2), "gamma (avoidance) = " + gamma_str(g2));
    t.check(dp == 5, "d_perp = " + std::to_string(dp));
    return t.outcome("A_11 = (" + got + "), gamma = " + gamma_str(g1) + ", d_perp = " + std::to_string(dp));
}

inline ClaimOutcome gamma_oracles(const ClaimContext& ctx) {
    Tally t;
    std::size_t loops = 0;
    for (const auto& c : oracle_suite(ctx)) {
        const auto a = covering_dimension_subcode(c, ctx.caps).value;
        const auto b = covering_dimension_avoidance(c, ctx.caps).value;
        const auto e = critical_exponent(MatroidView::of_code(c), ctx.caps);
        loops += !a.has_value();
        const std::string where = "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "]_" +
                                  std::to_string(c.q()) + ": " + gamma_str(a) + "/" + gamma_str(b) + "/" +
                                  gamma_str(e);
        t.check(a == b && b == e, where);
    }
    return t.outcome("500 codes, " + std::to_string(loops) + " with a zero column");
}

inline ClaimOutcome critical_theorem(const ClaimContext& ctx) {
    Tally t;
    const auto suite = random_suite(ctx.seed ^ 0x5bd1e995u, 50, {2, 3, 4, 5}, 8, 4, 0.1, ctx.caps);
    for (const auto& c : suite) {
        std::vector<std::vector<std::uint64_t>> counts;
        for (std::size_t m = 1; m <= 3; ++m) counts.push_back(tuple_union_counts(c, m, ctx.caps));
        const std::size_t masks = std::size_t{1} << c.n();
        for (std::size_t x = 0; x < masks; ++x) {
            const CoordSet xs = mask_to_set(x);
            const Matrix g = shortened_generator(c, detail::complement(c.n(), xs));
            const CharPoly p = characteristic_polynomial(MatroidView(c.field(), g.rows(), g.columns()), ctx.caps);
            for (std::size_t m = 1; m <= 3; ++m) {
                const BigInt value = p.eval(big_pow(static_cast<std::uint64_t>(c.q()), m));
                t.check(BigInt(counts[m - 1][x]) == value,
                        "X mask " + std::to_string(x) + ", m = " + std::to_string(m) + ": " +
                            std::to_string(counts[m - 1][x]) + " tuples vs p = " + str(value));
            }
        }
    }
    return t.outcome("50 codes, every X, m = 1..3");
}

inline ClaimOutcome mds(const ClaimContext& ctx) {
    Tally t;
    std::size_t codes = 0, vanishing = 0;
    for (int q : {3, 4, 5, 7}) {
        const Field f = Field::of_order(static_cast<std::uint64_t>(q), ctx.caps);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t n = k; n <= static_cast<std::size_t>(q) + 1; ++n) {
                ++codes;
                const LinearCode c = reed_solomon(f, n, k, ctx.caps);
                const auto enumerated = weight_distribution(c, ctx.caps);
                const auto formula = mds_weight_distribution(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), q);
                const std::string where = "RS[" + std::to_string(n) + "," + std::to_string(k) + "]_" + std::to_string(q);
                bool same = formula.size() == enumerated.size();
                for (std::size_t i = 0; same && i < formula.size(); ++i) same = formula[i] == enumerated[i];
                t.check(same, where + " weight distribution");
                if (n >= 2) {
                    std::vector<BigInt> a(enumerated.begin(), enumerated.end());
                    t.check(mds_chain_identity(a, static_cast<std::int64_t>(k), q), where + " chain identity");
                }
                const auto gamma = covering_dimension_subcode(c, ctx.caps).value;
                t.check((enumerated[n] > 0) == (gamma == std::optional<std::size_t>(1)), where + " gamma = 1 iff A_n > 0");
                if (enumerated[n] == 0) {
                    ++vanishing;
                    t.check(k % 2 == 0, where + " has A_n = 0 with odd k");
                    t.check(gamma == std::optional<std::size_t>(2), where + " has A_n = 0 and gamma " + gamma_str(gamma));
                    const BigInt predicted = BigInt(k % 2 ? -1 : 1) * BigInt(n) *
                                             binomial(static_cast<std::int64_t>(n) - 2, static_cast<std::int64_t>(k) - 1);
                    t.check(n >= 2 && BigInt(enumerated[n - 1]) == predicted, where + " A_{n-1}");
                }
            }
        }
    }
    return t.outcome(std::to_string(codes) + " RS codes, " + std::to_string(vanishing) + " with A_n = 0");
}

inline ClaimOutcome dual_hamming_claim(const ClaimContext& ctx) {
    Tally t;
    const std::vector<std::pair<int, std::size_t>> cases = {{2, 3}, {2, 4}, {3, 2}, {3, 3}};
    for (auto [q, k] : cases) {
        const Field f = Field::of_order(static_cast<std::uint64_t>(q), ctx.caps);
        const LinearCode c = dual_hamming(f, k, ctx.caps);
        const std::string where = "q=" + std::to_string(q) + " k=" + std::to_string(k);
        for (std::size_t r = 1; r <= k; ++r) {
            const auto table = support_weight_distribution(c, r, ctx.caps);
            const auto e = dual_hamming_swd(q, static_cast<std::int64_t>(k), static_cast<std::int64_t>(r));
            bool ok = true;
            for (std::size_t i = 0; i < table.counts.size(); ++i)
                ok = ok && BigInt(table.counts[i]) == (BigInt(i) == e.weight ? e.count : BigInt(0));
            t.check(ok, where + " r=" + std::to_string(r));
        }
        const auto g1 = covering_dimension_subcode(c, ctx.caps).value;
        const auto g2 = covering_dimension_avoidance(c, ctx.caps).value;
        t.check(g1 == std::optional<std::size_t>(k) && g2 == g1, where + " gamma = " + gamma_str(g1));
    }
    return t.outcome("4 parameter pairs");
}

inline ClaimOutcome support_weights(const ClaimContext& ctx) {
    Tally t;
    std::vector<LinearCode> suite = oracle_suite(ctx);
    suite.push_back(worked_example_code());
    for (int q : {3, 4, 5}) {
        const Field f = Field::of_order(static_cast<std::uint64_t>(q), ctx.caps);
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t n = k; n <= static_cast<std::size_t>(q) + 1; ++n) suite.push_back(reed_solomon(f, n, k, ctx.caps));
    }
    suite.push_back(dual_hamming(Field::of_order(2), 3, ctx.caps));
    suite.push_back(dual_hamming(Field::of_order(3), 3, ctx.caps));

    std::size_t compared = 0;
    for (const auto& c : suite) {
        const auto n = static_cast<std::int64_t>(c.n()), k = static_cast<std::int64_t>(c.k());
        const auto dp = static_cast<std::int64_t>(dual_distance(c, ctx.caps));
        for (std::int64_t r = std::max<std::int64_t>(1, k + 2 - dp); r <= k; ++r) {
            ++compared;
            const auto a = support_weight_distribution(c, static_cast<std::size_t>(r), ctx.caps).at(c.n());
            const BigInt formula = klove_An(n, k, c.q(), r);
            t.check(BigInt(a) == formula, "[" + std::to_string(n) + "," + std::to_string(k) + "]_" +
                                              std::to_string(c.q()) + " r=" + std::to_string(r) + ": " +
                                              std::to_string(a) + " vs " + str(formula));
        }
    }
    std::size_t positivity = 0;
    for (std::int64_t k = 3; k <= 8; ++k)
        for (std::int64_t q : {2, 3, 4, 5})
            for (std::int64_t n = k; n <= 20; ++n) {
                ++positivity;
                const auto d = d4_positivity(n, k, q);
                const std::string where = "n=" + str(n) + " k=" + str(k) + " q=" + str(q);
                t.check(d.consistent(), where + " decomposition");
                t.check(d.positive() && d.constant > 0, where + " positivity");
                for (std::int64_t delta = 3; delta <= k; ++delta)
                    t.check(recursion_identity(n, k, q, delta).holds(), where + " recursion delta=" + str(delta));
            }
    return t.outcome(std::to_string(compared) + " (code, r) pairs, " + std::to_string(positivity) + " positivity cases");
}

inline std::vector<SearchParams> conjecture_params() { return {{2, 4, 8, true}, {3, 3, 8, true}}; }

inline ClaimOutcome conjecture(const ClaimContext& ctx) {
    Tally t;
    std::uint64_t examined = 0, exceptions = 0, violations = 0;
    for (const auto& p : conjecture_params()) {
        const SearchReport r = run_search(p, 1, nullptr, std::nullopt, ctx.caps);
        examined += r.examined();
        violations += r.violations.size();
        t.check(r.violations.empty(), "q=" + std::to_string(p.q) + ": " + std::to_string(r.violations.size()) + " violations");
        for (const auto& v : r.verdicts) {
            if (v.cls == ConjectureClass::not_applicable) continue;
            t.check(v.kung_slack >= 0, "Kung's bound fails");
            if (v.cls == ConjectureClass::exception_dual_hamming || v.cls == ConjectureClass::exception_binary_parity) {
                ++exceptions;
                t.check(v.kung_slack == 0, "exception with gamma below k - d_perp + 3");
            }
        }
    }
    return t.outcome(std::to_string(examined) + " codes, " + std::to_string(exceptions) + " exceptions, " +
                     std::to_string(violations) + " violations");
}

inline ClaimOutcome characterisations(const ClaimContext& ctx) {
    Tally t;
    std::uint64_t stratum = 0;
    for (const auto& p : conjecture_params()) {
        const SearchReport r = run_search(p, 1, nullptr, std::nullopt, ctx.caps);
        for (const auto& v : r.verdicts) {
            if (v.d_perp != 3) continue;
            ++stratum;
            // distinct points, so n = |PG(k-1,q)| means the full point set
            const bool full = v.n == projective_point_count(static_cast<std::uint64_t>(v.q), v.k);
            t.check((v.gamma == std::optional<std::size_t>(v.k)) == full,
                    "d_perp = 3 code with gamma " + gamma_str(v.gamma) + ", n = " + std::to_string(v.n));
        }
    }
    for (std::size_t n = 2; n <= 11; ++n) {
        const auto g = covering_dimension_subcode(binary_parity_dual(n), ctx.caps).value;
        t.check((g == std::optional<std::size_t>(2)) == (n % 2 == 1), "[" + std::to_string(n) + "," +
                                                                          std::to_string(n - 1) + "]_2 gamma " + gamma_str(g));
    }
    return t.outcome(std::to_string(stratum) + " codes with d_perp = 3, parity codes n = 2..11");
}

inline ClaimOutcome construction(const ClaimContext& ctx) {
    Tally t;
    std::size_t cases = 0, minimal_checked = 0;
    for (int q : {2, 3}) {
        const Field f = Field::of_order(static_cast<std::uint64_t>(q), ctx.caps);
        for (std::size_t k = 2; k <= 5; ++k) {
            for (std::size_t m = 1; m <= std::min<std::size_t>(3, k - 1); ++m) {
                if (!BlockSpec::feasible(static_cast<std::uint64_t>(q), k, m)) continue;
                ++cases;
                const std::string where = "q=" + std::to_string(q) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
                const BlockSpec spec = BlockSpec::with_defaults(f, k, m);
                const PointSet pts = block_points(spec);
                const std::size_t r = k - m;
                const auto block = is_r_block(pts, r, ctx.caps);
                t.check(block.is_block, where + " not a block");
                const auto expect = static_cast<std::size_t>(power(q, static_cast<std::int64_t>(k - m)));
                for (auto j : spec.t)
                    t.check(points_meeting(pts, j).size() == expect, where + " |M_" + std::to_string(j) + "|");
                const bool predicted_minimal = BigInt(m) <= power(q, static_cast<std::int64_t>(k - m) - 1);
                const bool negative_case = q == 2 && k == 3 && m == 2;
                if (predicted_minimal || negative_case) {
                    ++minimal_checked;
                    const auto mb = is_minimal_block(pts, r, ctx.caps);
                    if (predicted_minimal) t.check(mb.minimal, where + " not minimal");
                    if (negative_case) t.check(!mb.minimal, where + " reported minimal");
                }
                if (m == 2 && predicted_minimal) {
                    const LinearCode c = code_from_points(pts);
                    const auto g = covering_dimension_subcode(c, ctx.caps).value;
                    const auto dp = dual_distance(c, ctx.caps);
                    t.check(dp == 3, where + " d_perp = " + std::to_string(dp));
                    t.check(g == std::optional<std::size_t>(k - 1) && *g + dp == k + 2,
                            where + " gamma = " + gamma_str(g));
                }
            }
        }
    }
    return t.outcome(std::to_string(cases) + " feasible (q,k,m), " + std::to_string(minimal_checked) + " minimality checks");
}

inline ClaimOutcome determinism(const ClaimContext& ctx) {
    Tally t;
    for (const auto& p : conjecture_params()) {
        const std::string one = report_text(run_search(p, 1, nullptr, std::nullopt, ctx.caps));
        const std::string many = report_text(run_search(p, std::max(2u, ctx.workers), nullptr, std::nullopt, ctx.caps));
        t.check(one == many, "q=" + std::to_string(p.q) + " reports differ");
    }
    return t.outcome("1 vs " + std::to_string(std::max(2u, ctx.workers)) + " workers");
}

}  // namespace claims

/// Claims in acceptance order.
inline std::vector<Claim> all_claims() {
    return {
        {"worked-example", "[11,5] ternary example: A_11^(r), gamma, d_perp", 5, claims::worked_example},
        {"gamma-oracles", "gamma by subcodes = by avoidance = critical exponent", 180, claims::gamma_oracles},
        {"critical-theorem", "m-tuple support counts = p(M_{C/(E-X)}; q^m)", 300, claims::critical_theorem},
        {"mds", "MDS weight distribution, chain identity, A_n = 0 case", 600, claims::mds},
        {"dual-hamming", "dual Hamming support weights and gamma = k", 600, claims::dual_hamming_claim},
        {"support-weights", "A_n^(r) closed form, d_perp = 4 positivity, recursion", 600, claims::support_weights},
        {"conjecture", "exhaustive gamma <= k - d_perp + 2 outside the exceptions", 600, claims::conjecture},
        {"characterisations", "d_perp = 3 and binary [n,n-1] characterisations", 600, claims::characterisations},
        {"construction", "block construction: block, counts, minimality, gamma", 600, claims::construction},
        {"determinism", "search reports identical across worker counts", 600, claims::determinism},
    };
}

/// Runs one claim, turning library errors into failures and enforcing the time budget.
inline ClaimRecord run_claim(const Claim& c, const ClaimContext& ctx) {
    ClaimRecord rec{c.id, false, 0, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const ClaimOutcome o = c.run(ctx);
        rec.pass = o.pass;
        rec.detail = o.detail;
    } catch (const std::exception& e) {
        rec.detail = std::string("error: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (rec.seconds > c.budget_seconds) {
        rec.pass = false;
        rec.detail += "; exceeded " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    return rec;
}

inline void print_record(std::ostream& out, const ClaimRecord& r) {
    out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(18) << r.id << std::right << std::fixed
        << std::setprecision(2) << std::setw(8) << r.seconds << " s  " << r.detail << '\n';
    out.unsetf(std::ios::floatfield);
    out.flush();
}

/// Runs the claims whose id is in `only` (all when empty); true when all pass.
inline bool run_claims(std::ostream& out, const ClaimContext& ctx, const std::vector<std::string>& only = {}) {
    bool ok = true;
    for (const auto& c : all_claims()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const ClaimRecord r = run_claim(c, ctx);
        print_record(out, r);
        ok = ok && r.pass;
    }
    return ok;
}

}  // namespace ccdim
