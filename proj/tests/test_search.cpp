#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>

#include "support.hpp"

using namespace ccdim;

namespace {

std::size_t count_codes(std::uint64_t q, std::size_t k, std::size_t n, bool simple = true) {
    std::size_t count = 0;
    enumerate_codes(Field::of_order(q), k, n, simple, [&](const std::vector<std::size_t>&, const LinearCode& c) {
        EXPECT_EQ(c.k(), k);
        EXPECT_EQ(c.n(), n);
        ++count;
    });
    return count;
}

}  // namespace

TEST(Enumerate, KnownCounts) {
    EXPECT_EQ(count_codes(2, 3, 4), 35u);
    EXPECT_EQ(count_codes(2, 3, 7), 1u);
    EXPECT_EQ(count_codes(2, 2, 3), 1u);
    EXPECT_EQ(count_codes(2, 3, 3), 28u);  // 35 triples minus 7 lines
    EXPECT_EQ(count_codes(2, 3, 8), 0u);
    // multisets: 2-multisets of the 3 points of PG(1,2) spanning GF(2)^2
    EXPECT_EQ(count_codes(2, 2, 2, false), 3u);
}

TEST(Enumerate, SimpleCodesHaveDualDistanceAtLeastThree) {
    enumerate_codes(Field::of_order(3), 3, 6, true, [](const std::vector<std::size_t>& id, const LinearCode& c) {
        EXPECT_TRUE(std::is_sorted(id.begin(), id.end()));
        EXPECT_GE(dual_distance(c), 3u);
    });
}

TEST(Enumerate, CapIsEnforced) {
    Caps caps;
    caps.code_subsets = 10;
    EXPECT_THROW(enumerate_codes(Field::of_order(2), 3, 4, true, [](auto&&, auto&&) {}, caps), CapExceeded);
}

TEST(Classify, Examples) {
    const auto simplex = classify(dual_hamming(Field::of_order(2), 3));
    EXPECT_EQ(simplex.cls, ConjectureClass::exception_dual_hamming);
    EXPECT_EQ(simplex.gamma, std::optional<std::size_t>(3));
    EXPECT_EQ(simplex.kung_slack, 0);

    const auto parity = classify(binary_parity_dual(5));
    EXPECT_EQ(parity.cls, ConjectureClass::exception_binary_parity);
    EXPECT_EQ(parity.gamma, std::optional<std::size_t>(2));
    EXPECT_EQ(parity.d_perp, 5u);

    const auto example = classify(claims::worked_example_code());
    EXPECT_EQ(example.cls, ConjectureClass::holds_strict);
    EXPECT_EQ(*example.gamma, example.k - example.d_perp + 2);
    EXPECT_EQ(example.kung_slack, 1);

    const auto even = classify(binary_parity_dual(4));
    EXPECT_EQ(even.cls, ConjectureClass::holds_strict);

    const Field f = Field::of_order(2);
    const auto loop = classify(LinearCode::from_generator(Matrix::from_rows(f, {{1, 0, 1, 1}, {0, 0, 1, 1}})));
    EXPECT_EQ(loop.cls, ConjectureClass::not_applicable);
    const auto repeated = classify(LinearCode::from_generator(Matrix::from_rows(f, {{1, 1, 0}, {0, 0, 1}})));
    EXPECT_EQ(repeated.cls, ConjectureClass::not_applicable);
    EXPECT_EQ(repeated.d_perp, 2u);
}

TEST(Classify, DualHammingDetection) {
    EXPECT_TRUE(is_dual_hamming(dual_hamming(Field::of_order(3), 2)));
    EXPECT_FALSE(is_dual_hamming(binary_parity_dual(4)));
    // the [4,2] ternary RS code is the tetracode: all four points of PG(1,3)
    EXPECT_TRUE(is_dual_hamming(reed_solomon(Field::of_order(3), 4, 2)));
}

TEST(Search, BinaryAndTernaryHaveNoViolations) {
    for (const SearchParams p : {SearchParams{2, 4, 8, true}, SearchParams{3, 3, 8, true}}) {
        const auto r = run_search(p, 2);
        EXPECT_TRUE(r.violations.empty());
        std::uint64_t total = 0;
        for (auto c : kAllClasses) total += r.counts.at(c);
        EXPECT_EQ(total, r.examined());
        EXPECT_FALSE(r.resume.has_value());
        for (const auto& v : r.verdicts) {
            if (v.cls == ConjectureClass::not_applicable) continue;
            EXPECT_GE(v.kung_slack, 0);
            const long bound = static_cast<long>(v.k) - static_cast<long>(v.d_perp) + 2;
            // binary codes with 3 < d_perp < k + 1, odd q with d_perp > 3
            if ((p.q == 2 && v.d_perp > 3 && v.d_perp < v.k + 1) || (p.q % 2 == 1 && v.d_perp > 3)) {
                EXPECT_LE(static_cast<long>(*v.gamma), bound);
            }
            if (static_cast<std::size_t>(v.q) >= v.n) {
                EXPECT_EQ(v.gamma, std::optional<std::size_t>(1));
            }
        }
    }
}

TEST(Search, QuaternaryLowDualDistanceSlice) {
    const auto r = run_search({4, 3, 8, true}, 2);
    for (const auto& v : r.violations) EXPECT_GT(v.verdict.d_perp, 4u);
    for (const auto& v : r.verdicts)
        if (v.unresolved_regime) {
            EXPECT_GT(v.d_perp, 4u);
        }
}

TEST(Search, ReportIndependentOfWorkers) {
    const SearchParams p{3, 3, 7, true};
    EXPECT_EQ(report_text(run_search(p, 1)), report_text(run_search(p, 3)));
}

TEST(Search, StopAndResumeCoverEverything) {
    const SearchParams p{2, 4, 7, true};
    const auto full = run_search(p, 1);
    std::atomic<bool> stop{true};
    const auto none = run_search(p, 1, &stop);
    ASSERT_TRUE(none.resume.has_value());
    EXPECT_TRUE(none.verdicts.empty());
    const SearchCursor mid{3, 5, 2};
    const auto tail = run_search(p, 2, nullptr, mid);
    std::size_t before = 0;
    for (const auto& v : full.verdicts)
        if (v.k < mid.k || (v.k == mid.k && (v.n < mid.n || (v.n == mid.n && v.id[0] < mid.lead)))) ++before;
    EXPECT_EQ(before + tail.examined(), full.examined());
    EXPECT_TRUE(std::equal(tail.verdicts.begin(), tail.verdicts.end(), full.verdicts.begin() + static_cast<std::ptrdiff_t>(before)));
}
