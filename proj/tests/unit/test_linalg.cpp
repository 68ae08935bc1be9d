#include "orbistack/orbistack.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace orbistack;

TEST(CheckedArithmetic, OverflowThrows) {
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(checked_add(big, 1), ArithmeticOverflow);
    EXPECT_THROW(checked_mul(big / 2 + 1, 2), ArithmeticOverflow);
    EXPECT_THROW(checked_neg(std::numeric_limits<std::int64_t>::min()), ArithmeticOverflow);
    EXPECT_EQ(checked_sub(-5, 7), -12);
    EXPECT_EQ(lcm64(4, 6), 12);
    EXPECT_EQ(floor_div(-7, 2), -4);
}

TEST(CheckedArithmetic, WideningFallsBackToBignums) {
    const auto r = with_widening([]<typename T>() {
        T x = from_int64<T>(std::int64_t{1} << 40);
        return widen(x * x);
    });
    EXPECT_EQ(r, BigInt(1) << 80);
}

TEST(Linalg, RankAndKernel) {
    const linalg::IntRows rows{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(linalg::rank(rows, 3), 2u);
    const auto ker = linalg::kernel_basis(rows, 3);
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_EQ(ker[0], (linalg::IntVector{1, 1, -1}));
    for (const auto &r : rows)
        EXPECT_EQ(linalg::dot(r, ker[0]), 0);
    EXPECT_EQ(linalg::rank({{0, 0}}, 2), 0u);
    EXPECT_EQ(linalg::rank({{1, 3}, {2, 6}}, 2), 1u);
    EXPECT_EQ(linalg::rank({{1, 3}, {2, 5}}, 2), 2u);
}

TEST(Linalg, RankSurvivesHugeEntries) {
    const std::int64_t h = std::int64_t{1} << 62;
    EXPECT_EQ(linalg::rank({{h, 3, 1}, {3, h, 1}, {1, 1, h}}, 3), 3u);
    EXPECT_EQ(linalg::rank({{h, h, 1}, {1, 1, 0}, {h + 1, h + 1, 1}}, 3), 2u);
}

TEST(Linalg, SmithInvariantsAndIndex) {
    const auto inv = linalg::smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
    ASSERT_EQ(inv.size(), 3u);
    EXPECT_EQ(inv[0], 2);
    EXPECT_EQ(inv[1], 6);
    EXPECT_EQ(inv[2], 12);
    // span of (2,0),(0,3) has index 6 in Z^2
    const auto li = linalg::lattice_index({{2, 0}, {0, 3}}, 2);
    EXPECT_EQ(li.rank, 2u);
    EXPECT_EQ(li.index, 6);
    // (1,1),(2,2) spans its own saturation
    EXPECT_EQ(linalg::lattice_index({{1, 1}, {2, 2}}, 2).index, 1);
    EXPECT_EQ(linalg::lattice_index({{2, 2}}, 2).index, 2);
}

TEST(Linalg, LatticeBasisKeepsTheLattice) {
    const linalg::IntRows rows{{4, 6}, {6, 9}, {2, 5}};
    const auto basis = linalg::lattice_basis(rows, 2);
    EXPECT_EQ(linalg::lattice_index(basis, 2).index, linalg::lattice_index(rows, 2).index);
    EXPECT_EQ(basis.size(), 2u);
}
