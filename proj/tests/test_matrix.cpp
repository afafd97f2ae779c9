#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace ccdim;

TEST(Matrix, RrefOfKnownMatrix) {
    const Field f = Field::of_order(3);
    const Matrix m = Matrix::from_rows(f, {{0, 2, 1}, {1, 1, 0}, {1, 0, 1}});
    const auto r = rref(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.reduced.select_rows(0, 2), Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 2}}));
}

TEST(Matrix, RankPlusNullityIsColumnCount) {
    std::mt19937_64 rng(1);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const Field f = Field::of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            const Matrix m = test::random_matrix(rng, f, rows, cols);
            const Matrix k = kernel_basis(m);
            EXPECT_EQ(rank(m) + k.rows(), cols);
            if (k.rows()) {
                EXPECT_TRUE((m * k.transpose()).is_zero());
            }
            EXPECT_EQ(rank(k), k.rows());
        }
    }
}

TEST(Matrix, RrefIsCanonicalForRowSpace) {
    std::mt19937_64 rng(2);
    const Field f = Field::of_order(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = test::random_matrix(rng, f, 3, 6);
        // random invertible change of basis
        Matrix p = test::random_matrix(rng, f, 3, 3);
        while (rank(p) < 3) p = test::random_matrix(rng, f, 3, 3);
        EXPECT_EQ(row_space_basis(a), row_space_basis(p * a));
    }
}

TEST(Matrix, TransposeAndProduct) {
    const Field f = Field::of_order(2);
    const Matrix a = Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a * Matrix::identity(f, 3), a);
    EXPECT_EQ(a * a.transpose(), Matrix::from_rows(f, {{0, 1}, {1, 0}}));
}

TEST(EchelonBasis, TracksSpan) {
    const Field f = Field::of_order(3);
    EchelonBasis b(f, 3);
    EXPECT_TRUE(b.insert(std::vector<Elem>{1, 2, 0}));
    EXPECT_FALSE(b.insert(std::vector<Elem>{2, 1, 0}));
    EXPECT_TRUE(b.insert(std::vector<Elem>{0, 0, 1}));
    EXPECT_EQ(b.rank(), 2u);
    EXPECT_TRUE(b.contains(std::vector<Elem>{1, 2, 2}));
    EXPECT_FALSE(b.contains(std::vector<Elem>{0, 1, 0}));
}

// Adding a multiple of the last vector to the others keeps them independent.
TEST(Independence, ShiftedSetStaysIndependent) {
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const Field f = Field::of_order(q);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t m = 2 + rng() % 5;
            const std::size_t t = 2 + rng() % (m - 1);
            Matrix u = test::random_matrix(rng, f, t, m);
            while (rank(u) < t) u = test::random_matrix(rng, f, t, m);
            for (auto alpha : f.elements()) {
                Matrix d(f, t - 1, m);
                for (std::size_t i = 0; i + 1 < t; ++i)
                    for (std::size_t j = 0; j < m; ++j) d(i, j) = f.axpy(u(i, j), alpha, u(t - 1, j));
                EXPECT_EQ(rank(d), t - 1);
            }
        }
    }
}

// D_alpha = D_beta iff alpha = beta, and distinct ones meet inside D_0.
TEST(Independence, ShiftedSubspacesMeetInsideD0) {
    std::mt19937_64 rng(4);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const Field f = Field::of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = 2 + rng() % 5;
            const std::size_t t = 2 + rng() % (m - 1);
            Matrix u = test::random_matrix(rng, f, t, m);
            while (rank(u) < t) u = test::random_matrix(rng, f, t, m);
            auto shifted = [&](Elem alpha) {
                Matrix d(f, t - 1, m);
                for (std::size_t i = 0; i + 1 < t; ++i)
                    for (std::size_t j = 0; j < m; ++j) d(i, j) = f.axpy(u(i, j), alpha, u(t - 1, j));
                return row_space_basis(d);
            };
            const Matrix d0 = row_space_basis(u.select_rows(0, t - 1));
            for (auto a : f.elements())
                for (auto b : f.elements()) {
                    const Matrix da = shifted(a), db = shifted(b);
                    EXPECT_EQ(da == db, a == b);
                    if (a == b) continue;
                    const Matrix meet = test::intersection(da, db);
                    EXPECT_EQ(rank(meet.rows() ? d0.stack(meet) : d0), d0.rows());
                }
        }
    }
}

TEST(Subspaces, CountMatchesEnumeration) {
    for (std::uint64_t q : {2, 3, 4}) {
        const Field f = Field::of_order(q);
        for (std::size_t k = 0; k <= 5; ++k)
            for (std::size_t r = 0; r <= k; ++r) {
                std::uint64_t seen = 0;
                std::set<std::vector<Elem>> distinct;
                for_each_subspace(f, k, r, [&](const Matrix& b) {
                    ++seen;
                    std::vector<Elem> flat;
                    for (std::size_t i = 0; i < b.rows(); ++i) flat.insert(flat.end(), b.row(i).begin(), b.row(i).end());
                    distinct.insert(flat);
                    EXPECT_EQ(rref(b).reduced, b);
                    EXPECT_EQ(rank(b), r);
                    return true;
                });
                EXPECT_EQ(seen, subspace_count(q, k, r));
                EXPECT_EQ(distinct.size(), seen);
                EXPECT_EQ(BigInt(seen), gaussian_binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(r),
                                                          static_cast<std::int64_t>(q)));
            }
    }
}

TEST(Subspaces, StopsEarlyAndRespectsCap) {
    const Field f = Field::of_order(2);
    int calls = 0;
    EXPECT_FALSE(for_each_subspace(f, 4, 2, [&](const Matrix&) { return ++calls < 3; }));
    EXPECT_EQ(calls, 3);
    Caps caps;
    caps.subspaces = 10;
    EXPECT_THROW(for_each_subspace(f, 4, 2, [](const Matrix&) { return true; }, caps), CapExceeded);
}

TEST(Subspaces, FirstInStreamOrder) {
    const Field f = Field::of_order(3);
    std::vector<Matrix> seen;
    for_each_subspace(f, 2, 1, [&](const Matrix& b) {
        seen.push_back(b);
        return true;
    });
    ASSERT_EQ(seen.size(), 4u);
    EXPECT_EQ(seen[0], Matrix::from_rows(f, {{1, 0}}));
    EXPECT_EQ(seen[1], Matrix::from_rows(f, {{1, 1}}));
    EXPECT_EQ(seen[2], Matrix::from_rows(f, {{1, 2}}));
    EXPECT_EQ(seen[3], Matrix::from_rows(f, {{0, 1}}));
}
