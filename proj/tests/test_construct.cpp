#include <gtest/gtest.h>

#include "support.hpp"

using namespace ccdim;

TEST(Points, ProjectiveSpace) {
    const Field f = Field::of_order(3);
    const auto pts = projective_points(f, 3);
    EXPECT_EQ(pts.size(), 13u);
    EXPECT_EQ(projective_point_count(3, 3), 13u);
    EXPECT_EQ(pts.front(), (Vec{0, 0, 1}));
    EXPECT_EQ(pts.back(), (Vec{1, 2, 2}));
    for (const auto& p : pts) EXPECT_TRUE(is_normalized(p));
    EXPECT_EQ(normalize_point(f, {0, 2, 1}), (Vec{0, 1, 2}));
    EXPECT_THROW(normalize_point(f, {0, 0, 0}), DomainError);
}

TEST(Points, PointSetNormalizesAndRejectsDuplicates) {
    const Field f = Field::of_order(3);
    const PointSet p(f, 2, {{2, 2}, {0, 1}});
    EXPECT_EQ(p.points(), (std::vector<Vec>{{0, 1}, {1, 1}}));
    EXPECT_TRUE(p.contains({2, 2}));
    EXPECT_FALSE(p.contains({1, 0}));
    EXPECT_THROW(PointSet(f, 2, {{1, 1}, {2, 2}}), DomainError);
    EXPECT_THROW(PointSet(f, 2, {{1, 1, 0}}), DomainError);
}

TEST(Families, DualHammingIsSimplex) {
    const auto c = dual_hamming(Field::of_order(2), 3);
    EXPECT_EQ(c.n(), 7u);
    EXPECT_EQ(c.k(), 3u);
    EXPECT_EQ(c.generator(), Matrix::from_rows(Field::of_order(2), {{0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}}));
    EXPECT_EQ(covering_dimension_subcode(c).value, std::optional<std::size_t>(3));
}

TEST(Families, ReedSolomon) {
    const Field f = Field::of_order(3);
    const auto c = reed_solomon(f, 4, 2);
    EXPECT_EQ(c.generator(), Matrix::from_rows(f, {{1, 1, 1, 0}, {0, 1, 2, 1}}));
    EXPECT_EQ(min_weight(c), 3u);
    EXPECT_THROW(reed_solomon(f, 5, 2), DomainError);
    EXPECT_THROW(reed_solomon(f, 3, 4), DomainError);
    // every RS code up to GF(8) is MDS (the constructor checks it)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8})
        for (std::size_t n = 1; n <= q + 1; ++n)
            for (std::size_t k = 1; k <= std::min<std::size_t>(n, 5); ++k) EXPECT_NO_THROW(reed_solomon(Field::of_order(q), n, k));
}

TEST(Families, ParityDual) {
    const auto c = binary_parity_dual(4);
    EXPECT_EQ(c.n(), 4u);
    EXPECT_EQ(c.k(), 3u);
    EXPECT_EQ(dual_distance(c), 4u);
    EXPECT_THROW(binary_parity_dual(1), DomainError);
}

TEST(Block, Feasibility) {
    EXPECT_TRUE(BlockSpec::feasible(2, 3, 2));
    EXPECT_FALSE(BlockSpec::feasible(2, 3, 3));
    EXPECT_FALSE(BlockSpec::feasible(2, 4, 3));
    EXPECT_TRUE(BlockSpec::feasible(2, 5, 3));
    EXPECT_FALSE(BlockSpec::feasible(2, 3, 0));
    EXPECT_THROW(BlockSpec::with_defaults(Field::of_order(2), 3, 3), DomainError);
}

TEST(Block, DefaultsAvoidT) {
    const auto s = BlockSpec::with_defaults(Field::of_order(2), 4, 2);
    EXPECT_EQ(s.t, (CoordSet{2, 3}));
    ASSERT_EQ(s.v.size(), 1u);
    EXPECT_EQ(s.v[0], (Vec{0, 1, 0, 0}));
}

TEST(Block, ValidateRejectsBadSpecs) {
    const Field f = Field::of_order(2);
    auto s = BlockSpec::with_defaults(f, 4, 2);
    s.v[0] = {0, 1, 1, 0};
    EXPECT_THROW(s.validate(), DomainError);
    s = BlockSpec::with_defaults(f, 4, 2);
    s.t = {1, 1};
    EXPECT_THROW(s.validate(), DomainError);
}

TEST(Block, ConstructionPropertiesAcrossRange) {
    for (std::uint64_t q : {2, 3}) {
        const Field f = Field::of_order(q);
        for (std::size_t k = 2; k <= 4; ++k)
            for (std::size_t m = 1; m <= std::min<std::size_t>(3, k - 1); ++m) {
                if (!BlockSpec::feasible(q, k, m)) continue;
                const auto spec = BlockSpec::with_defaults(f, k, m);
                const auto pts = block_points(spec);
                EXPECT_TRUE(is_r_block(pts, k - m).is_block) << q << " " << k << " " << m;
                for (auto j : spec.t)
                    EXPECT_EQ(BigInt(points_meeting(pts, j).size()), power(BigInt(q), static_cast<std::int64_t>(k - m)));
                const auto mb = is_minimal_block(pts, k - m);
                if (BigInt(m) <= power(BigInt(q), static_cast<std::int64_t>(k - m) - 1)) {
                    EXPECT_TRUE(mb.minimal);
                    EXPECT_EQ(covering_dimension_subcode(code_from_points(pts)).value,
                              std::optional<std::size_t>(k - m + 1));
                }
            }
    }
}

// Two points on a coordinate of T span a line meeting M in a third point.
TEST(Block, LinesThroughMjMeetM) {
    for (std::uint64_t q : {2, 3}) {
        const Field f = Field::of_order(q);
        const auto spec = BlockSpec::with_defaults(f, 4, 2);
        const auto pts = block_points(spec);
        for (auto j : spec.t) {
            const auto mj = points_meeting(pts, j);
            for (std::size_t a = 0; a < mj.size(); ++a)
                for (std::size_t b = a + 1; b < mj.size(); ++b) {
                    bool found = false;
                    for (auto alpha : f.elements())
                        for (auto beta : f.elements()) {
                            if (!alpha && !beta) continue;
                            Vec v(4);
                            for (std::size_t i = 0; i < 4; ++i) v[i] = f.add(f.mul(alpha, mj[a][i]), f.mul(beta, mj[b][i]));
                            if (weight(v) && pts.contains(v)) found = true;
                        }
                    EXPECT_TRUE(found);
                }
        }
    }
}

TEST(Block, SmallestNegativeCaseIsNotMinimal) {
    const auto pts = block_points(BlockSpec::with_defaults(Field::of_order(2), 3, 2));
    const auto v = is_minimal_block(pts, 1);
    EXPECT_TRUE(v.is_block);
    EXPECT_FALSE(v.minimal);
    EXPECT_TRUE(v.untangented_point().has_value());
}

TEST(Block, NonBlockHasCounterexample) {
    const Field f = Field::of_order(2);
    const PointSet p(f, 3, {{1, 0, 0}, {0, 1, 0}});
    const auto v = is_r_block(p, 1);
    EXPECT_FALSE(v.is_block);
    ASSERT_TRUE(v.counterexample);
    EXPECT_EQ(v.counterexample->rows(), 2u);
    EchelonBasis u(f, 3);
    for (std::size_t i = 0; i < 2; ++i) u.insert(v.counterexample->row(i));
    for (const auto& x : p.points()) EXPECT_FALSE(u.contains(x));
}

TEST(Block, ProjectivePlaneTangentialBridge) {
    // every 1-dim subspace is a point, and is its own tangent
    const Field f = Field::of_order(2);
    const PointSet all(f, 3, projective_points(f, 3));
    const auto v = is_minimal_block(all, 2);
    EXPECT_TRUE(v.is_block);
    EXPECT_TRUE(v.minimal);
    EXPECT_EQ(covering_dimension_subcode(code_from_points(all)).value, std::optional<std::size_t>(3));
}
