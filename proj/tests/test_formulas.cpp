#include <gtest/gtest.h>

#include "support.hpp"

using namespace ccdim;

TEST(Formulas, Binomials) {
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
    EXPECT_EQ(gaussian_binomial(3, 1, 3), 13);
    EXPECT_EQ(gaussian_binomial(5, 0, 7), 1);
    EXPECT_EQ(gaussian_binomial(2, 3, 2), 0);
    EXPECT_EQ(power(BigInt(3), 40), BigInt("12157665459056928801"));
}

TEST(Formulas, GaussianPascal) {
    for (std::int64_t q : {2, 3, 4, 5, 7})
        for (std::int64_t k = 1; k <= 12; ++k)
            for (std::int64_t r = 1; r < k; ++r)
                EXPECT_EQ(gaussian_binomial(k, r, q),
                          gaussian_binomial(k - 1, r - 1, q) + power(BigInt(q), r) * gaussian_binomial(k - 1, r, q));
}

TEST(Formulas, MdsWeightDistribution) {
    // [4,2] extended RS over GF(3): the tetracode
    EXPECT_EQ(mds_weight_distribution(4, 2, 3), (std::vector<BigInt>{1, 0, 0, 8, 0}));
    // [7,3] over GF(8)
    const auto a = mds_weight_distribution(7, 3, 8);
    BigInt total = 0;
    for (const auto& x : a) total += x;
    EXPECT_EQ(total, 512);
    EXPECT_EQ(a[5], 147);  // C(7,5) (q-1)
}

TEST(Formulas, MdsMatchesEnumeration) {
    for (std::uint64_t q : {3, 4, 5, 7, 8}) {
        const Field f = Field::of_order(q);
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t n = k; n <= q + 1; ++n) {
                const auto w = weight_distribution(reed_solomon(f, n, k));
                const auto a = mds_weight_distribution(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                                                       static_cast<std::int64_t>(q));
                ASSERT_EQ(w.size(), a.size());
                for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(BigInt(w[i]), a[i]);
                if (n >= 2) {
                    EXPECT_TRUE(mds_chain_identity(a, static_cast<std::int64_t>(k), static_cast<std::int64_t>(q)));
                }
            }
    }
}

TEST(Formulas, DualHammingEntry) {
    const auto e = dual_hamming_swd(2, 3, 2);
    EXPECT_EQ(e.weight, 6);
    EXPECT_EQ(e.count, 7);
    EXPECT_THROW(dual_hamming_swd(2, 3, 4), DomainError);
}

TEST(Formulas, KloveFullDimension) {
    // r = k: the whole code, which has full support iff no zero column
    for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(klove_An(n, std::min<std::int64_t>(n, 3), 3, std::min<std::int64_t>(n, 3)), 1);
    // worked example: k = 5, r = 2..5
    EXPECT_EQ(klove_An(11, 5, 3, 5), 1);
    EXPECT_EQ(klove_An(11, 5, 3, 4), 110);
    EXPECT_EQ(klove_An(11, 5, 3, 3), 825);
    EXPECT_EQ(klove_An(11, 5, 3, 2), 330);
}

TEST(Formulas, D4Positivity) {
    for (std::int64_t k = 3; k <= 8; ++k)
        for (std::int64_t q : {2, 3, 4, 5})
            for (std::int64_t n = k; n <= 20; ++n) {
                const auto d = d4_positivity(n, k, q);
                EXPECT_TRUE(d.consistent());
                EXPECT_TRUE(d.positive());
                EXPECT_GE(d.square, 0);
            }
    EXPECT_THROW(d4_positivity(5, 2, 2), DomainError);
}

TEST(Formulas, RecursionIdentity) {
    for (std::int64_t q : {2, 3, 4})
        for (std::int64_t k = 3; k <= 7; ++k)
            for (std::int64_t delta = 3; delta <= k; ++delta)
                for (std::int64_t n = k; n <= 14; ++n) EXPECT_TRUE(recursion_identity(n, k, q, delta).holds());
    EXPECT_THROW(recursion_identity(5, 3, 2, 2), DomainError);
    EXPECT_THROW(recursion_identity(5, 3, 2, 4), DomainError);
}
