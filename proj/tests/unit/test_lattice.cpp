#include "oracles.hpp"
#include "orbistack/orbistack.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbistack;

namespace {
const std::vector<std::int64_t> one{1};
const std::vector<std::int64_t> zero{0};
} // namespace

TEST(GradedSections, OneThreePieces) {
    const auto W = IntMatrix::row_vector({1, 3});
    EXPECT_EQ(graded_sections(W, one, 3).basis, (std::vector<ExponentVector>{{3, 0}, {0, 1}}));
    EXPECT_EQ(graded_sections(W, one, 0).basis, (std::vector<ExponentVector>{{0, 0}}));
    EXPECT_EQ(graded_sections(W, one, 6).basis,
              (std::vector<ExponentVector>{{6, 0}, {3, 1}, {0, 2}}));
    EXPECT_EQ(graded_sections(W, one, 6).degree, 6);
}

TEST(GradedSections, InfinitePiecesAreErrors) {
    const std::vector<std::int64_t> chi{1};
    EXPECT_THROW(graded_sections(IntMatrix::row_vector({1, 0}), chi, 1), InfiniteSolutionSet);
    EXPECT_THROW(graded_sections(IntMatrix::row_vector({1, -1}), chi, 1), InfiniteSolutionSet);
    EXPECT_THROW(graded_sections(IntMatrix::row_vector({1, -1}), zero, 0), InfiniteSolutionSet);
    // unbounded directions but no solution at all: empty, not an error
    EXPECT_TRUE(graded_sections(IntMatrix::row_vector({0}), chi, 1).basis.empty());
    EXPECT_TRUE(graded_sections(IntMatrix::row_vector({2, -2}), chi, 1).basis.empty());
    // bounded and empty
    EXPECT_TRUE(graded_sections(IntMatrix::row_vector({1, 1}), std::vector<std::int64_t>{-1}, 1)
                    .basis.empty());
}

TEST(GradedSections, RejectsBadArguments) {
    const auto W = IntMatrix::row_vector({1, 3});
    EXPECT_THROW(graded_sections(W, one, -1), InvalidArgument);
    EXPECT_THROW(graded_sections(W, std::vector<std::int64_t>{1, 1}, 1), InvalidArgument);
}

TEST(GradedSections, MatchesDiagonalGeneratingFunction) {
    // two-row gradings with positive first row, so every piece is finite
    const std::vector<std::pair<IntMatrix, std::vector<std::int64_t>>> cases{
        {IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}), {2, 2}},
        {IntMatrix::from_rows({{1, 2, 1, 3}, {1, -1, 0, 2}}), {2, 1}},
        {IntMatrix::from_rows({{2, 1, 1}, {1, 0, -1}}), {2, 0}}};
    for (const auto &[W, chi] : cases) {
        const auto ref = oracle::diagonal_counts(W, chi, 6, 24);
        for (std::int64_t m = 0; m <= 6; ++m) {
            const auto got = graded_sections(W, chi, m).basis;
            EXPECT_EQ(static_cast<std::int64_t>(got.size()), ref[static_cast<std::size_t>(m)]);
            EXPECT_EQ(got, oracle::box_solutions(W, chi, m, 24));
        }
    }
}

TEST(GradedSections, CanonicalOrderWithoutDuplicates) {
    const auto W = IntMatrix::row_vector({1, 2, 2, 3});
    for (std::int64_t m = 0; m <= 10; ++m) {
        const auto b = graded_sections(W, one, m).basis;
        for (std::size_t i = 1; i < b.size(); ++i)
            EXPECT_TRUE(grlex_before(b[i - 1], b[i]));
        for (const auto &e : b)
            EXPECT_EQ(W.apply(e), std::vector<std::int64_t>{m});
    }
}

TEST(HilbertBasis, Examples) {
    const auto one_three = hilbert_basis(IntMatrix::row_vector({1, 3}), one);
    EXPECT_EQ(one_three.generators,
              (std::vector<SemigroupGenerator>{{{1, 0}, 1}, {{0, 1}, 3}}));
    EXPECT_FALSE(one_three.not_pointed);
    EXPECT_EQ(one_three.max_degree(), 3);

    const auto p11 = hilbert_basis(IntMatrix::row_vector({1, 1}), one);
    EXPECT_EQ(p11.generators,
              (std::vector<SemigroupGenerator>{{{1, 0}, 1}, {{0, 1}, 1}}));

    const auto inv = hilbert_basis(IntMatrix::row_vector({1, -1}), zero);
    EXPECT_TRUE(inv.not_pointed);
    // the unit section in degree 1 is a generator as well
    EXPECT_EQ(inv.generators,
              (std::vector<SemigroupGenerator>{{{1, 1}, 0}, {{0, 0}, 1}}));
}

TEST(HilbertBasis, MatchesSaturationOnRandomGradings) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(1, 3), w(1, 5), c(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(len(rng)));
        for (auto &x : a)
            x = w(rng);
        const std::vector<std::int64_t> chi{c(rng)};
        const auto W = IntMatrix::row_vector(a);
        const auto basis = hilbert_basis(W, chi);
        // generators have degree <= max weight and entries <= chi
        const auto ref = oracle::saturation_generators(W, chi, 6, 5);
        EXPECT_EQ(basis.generators, ref);
    }
}

TEST(HilbertBasis, CompleteAndMinimal) {
    const std::vector<std::pair<IntMatrix, std::vector<std::int64_t>>> cases{
        {IntMatrix::row_vector({2, 3, 5}), {3}},
        {IntMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}), {2, 2}},
        {IntMatrix::row_vector({1, 3}), {1}}};
    for (const auto &[W, chi] : cases) {
        const auto basis = hilbert_basis(W, chi);
        const auto bound = default_certification_bound(basis);
        const auto cert = certify_hilbert_basis(W, chi, basis, bound);
        EXPECT_TRUE(cert.checked);
        EXPECT_TRUE(cert.complete);
        EXPECT_EQ(cert.degree_bound, bound);
        for (std::size_t drop = 0; drop < basis.generators.size(); ++drop) {
            auto smaller = basis;
            const auto removed = smaller.generators[drop];
            smaller.generators.erase(smaller.generators.begin() + static_cast<long>(drop));
            const auto c = certify_hilbert_basis(W, chi, smaller, bound);
            EXPECT_FALSE(c.complete);
            ASSERT_TRUE(c.failing_degree.has_value());
            EXPECT_EQ(*c.failing_degree, removed.degree);
        }
    }
}

TEST(HilbertBasis, Deterministic) {
    const auto W = IntMatrix::from_rows({{1, 2, 3, 1}, {0, 1, -1, 2}});
    const std::vector<std::int64_t> chi{3, 1};
    EXPECT_EQ(hilbert_basis(W, chi).generators, hilbert_basis(W, chi).generators);
}

TEST(ConePosition, Examples) {
    auto p = cone_position(one, {{1}, {3}});
    EXPECT_EQ(p.location, ConeLocation::RelativeInterior);
    EXPECT_TRUE(p.full_dim);
    p = cone_position(zero, {{1}, {-1}});
    EXPECT_EQ(p.location, ConeLocation::RelativeInterior);
    EXPECT_TRUE(p.full_dim);
    p = cone_position(one, {});
    EXPECT_EQ(p.location, ConeLocation::Outside);
    EXPECT_FALSE(p.full_dim);
    p = cone_position(zero, {{1}, {3}});
    EXPECT_EQ(p.location, ConeLocation::Boundary);
}

TEST(ConePosition, RationalCharacters) {
    const std::vector<Rational> half{Rational(1, 2), Rational(1, 3)};
    EXPECT_EQ(cone_position(half, {{1, 0}, {0, 1}}).location, ConeLocation::RelativeInterior);
    const std::vector<Rational> edge{Rational(1, 2), Rational(0)};
    EXPECT_EQ(cone_position(edge, {{1, 0}, {0, 1}}).location, ConeLocation::Boundary);
    const std::vector<Rational> out{Rational(-1, 2), Rational(1)};
    EXPECT_EQ(cone_position(out, {{1, 0}, {0, 1}}).location, ConeLocation::Outside);
    // lower-dimensional cone: relative interior of a ray
    const std::vector<Rational> ray{Rational(2), Rational(2)};
    const auto p = cone_position(ray, {{1, 1}});
    EXPECT_EQ(p.location, ConeLocation::RelativeInterior);
    EXPECT_FALSE(p.full_dim);
}

TEST(LatticeSpans, Examples) {
    EXPECT_TRUE(lattice_spans({{1}, {3}}, 1));
    EXPECT_FALSE(lattice_spans({}, 1));
    EXPECT_FALSE(lattice_spans({{1, 0}}, 2));
    EXPECT_TRUE(lattice_spans({{1, 1}, {1, -1}}, 2));
    EXPECT_TRUE(lattice_spans({}, 0));
}

TEST(ConeDual, FacetsOfTheQuadrant) {
    const auto d = cone_dual({{1, 0}, {0, 1}, {1, 1}}, 2);
    EXPECT_EQ(d.dim, 2u);
    EXPECT_TRUE(d.orthogonal.empty());
    auto f = d.facets;
    std::sort(f.begin(), f.end());
    EXPECT_EQ(f, (std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}}));
    const auto line = cone_dual({{1, 2}, {-1, -2}}, 2);
    EXPECT_EQ(line.dim, 1u);
    EXPECT_TRUE(line.facets.empty());
    EXPECT_EQ(line.orthogonal, (std::vector<std::vector<std::int64_t>>{{2, -1}}));
}
