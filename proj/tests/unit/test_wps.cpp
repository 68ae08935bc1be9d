#include "oracles.hpp"
#include "orbistack/orbistack.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace orbistack;

namespace {

std::vector<std::vector<std::int64_t>> small_weight_systems() {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t len = 1; len <= 3; ++len) {
        std::vector<std::int64_t> a(len, 1);
        while (true) {
            out.push_back(a);
            std::size_t i = 0;
            while (i < len && a[i] == 4)
                a[i++] = 1;
            if (i == len)
                break;
            ++a[i];
        }
    }
    return out;
}

} // namespace

TEST(WeightSystem, Validation) {
    EXPECT_THROW(WeightSystem({}), InvalidArgument);
    EXPECT_THROW(WeightSystem({1, 0}), InvalidArgument);
    EXPECT_THROW(WeightSystem({-1, 3}), InvalidArgument);
    EXPECT_EQ(WeightSystem({1, 3}).size(), 2u);
}

TEST(SectionBasis, Examples) {
    EXPECT_EQ(section_basis(WeightSystem({1, 3}), 4).basis,
              (std::vector<ExponentVector>{{4, 0}, {1, 1}}));
    EXPECT_TRUE(section_basis(WeightSystem({1, 3}), -1).basis.empty());
    EXPECT_EQ(section_basis(WeightSystem({1, 1}), 2).basis,
              (std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}}));
}

TEST(HilbertSeries, Examples) {
    EXPECT_EQ(hilbert_series(WeightSystem({1, 3}), 6),
              (std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3}));
    EXPECT_EQ(hilbert_series(WeightSystem({1, 1}), 3), (std::vector<std::int64_t>{1, 2, 3, 4}));
    EXPECT_EQ(hilbert_series(WeightSystem({2}), 4), (std::vector<std::int64_t>{1, 0, 1, 0, 1}));
    EXPECT_THROW(hilbert_series(WeightSystem({2}), -1), InvalidArgument);
}

TEST(HilbertSeries, AgreesWithSectionBasisAndOracle) {
    for (const auto &a : small_weight_systems()) {
        const WeightSystem ws(a);
        const auto hs = hilbert_series(ws, 18);
        EXPECT_EQ(hs, oracle::series_coefficients(a, 18));
        for (std::int64_t d = 0; d <= 18; ++d) {
            const auto b = section_basis(ws, d).basis;
            EXPECT_EQ(static_cast<std::int64_t>(b.size()), hs[static_cast<std::size_t>(d)]);
            EXPECT_EQ(b, oracle::weighted_monomials(a, d));
        }
    }
}

TEST(SectionBasis, MultiplicativeClosure) {
    for (const auto &a : {std::vector<std::int64_t>{1, 3}, {2, 3, 4}, {1, 1, 2}}) {
        const WeightSystem ws(a);
        for (std::int64_t d1 = 0; d1 <= 7; ++d1)
            for (std::int64_t d2 = 0; d2 <= 7; ++d2) {
                const auto prod = section_basis(ws, d1 + d2).basis;
                const std::set<ExponentVector> target(prod.begin(), prod.end());
                for (const auto &u : section_basis(ws, d1).basis)
                    for (const auto &v : section_basis(ws, d2).basis) {
                        ExponentVector w(u.size());
                        for (std::size_t i = 0; i < u.size(); ++i)
                            w[i] = u[i] + v[i];
                        EXPECT_TRUE(target.count(w));
                    }
            }
    }
}

TEST(Strata, Examples) {
    const auto s = strata(WeightSystem({1, 3}));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].support, Support::of({0}));
    EXPECT_EQ(s[0].stabilizer_order, 1);
    EXPECT_EQ(s[1].support, Support::of({1}));
    EXPECT_EQ(s[1].stabilizer_order, 3);
    EXPECT_EQ(s[2].support, Support::of({0, 1}));
    EXPECT_EQ(s[2].stabilizer_order, 1);

    for (const auto &st : strata(WeightSystem({2, 2})))
        EXPECT_EQ(st.stabilizer_order, 2);
    const auto single = strata(WeightSystem({6}));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].stabilizer_order, 6);
    EXPECT_EQ(strata(WeightSystem({1, 2, 3, 4})).size(), 15u);
}

TEST(DescentModulus, Examples) {
    EXPECT_EQ(descent_modulus(WeightSystem({1, 3})), 3);
    EXPECT_EQ(descent_modulus(WeightSystem({1, 1})), 1);
    EXPECT_EQ(descent_modulus(WeightSystem({2, 3})), 6);
    EXPECT_EQ(descent_modulus(WeightSystem({4, 6, 10})), 60);
}

TEST(Ampleness, Examples) {
    const WeightSystem one_three({1, 3});
    EXPECT_TRUE(is_faithful(one_three, LineBundle{1}).faithful);
    const auto f = is_faithful(one_three, LineBundle{3});
    EXPECT_FALSE(f.faithful);
    ASSERT_TRUE(f.witness.has_value());
    EXPECT_EQ(f.witness->support, Support::of({1}));
    EXPECT_EQ(f.witness->stabilizer_order, 3);
    EXPECT_FALSE(is_faithful(WeightSystem({2, 2}), LineBundle{2}).faithful);

    EXPECT_TRUE(is_det_ample(one_three, LineBundle{1}));
    EXPECT_FALSE(is_det_ample(one_three, LineBundle{-1}));
    EXPECT_FALSE(is_det_ample(WeightSystem({2, 2}), LineBundle{2}));
    EXPECT_TRUE(is_h_ample(one_three, LineBundle{1}));
    EXPECT_FALSE(is_h_ample(one_three, LineBundle{-1}));
    EXPECT_FALSE(is_h_ample(WeightSystem({2, 2}), LineBundle{2}));
}

TEST(Ampleness, Properties) {
    for (const auto &a : small_weight_systems()) {
        const WeightSystem ws(a);
        const auto L = descent_modulus(ws);
        const bool trivial = std::all_of(a.begin(), a.end(), [](auto x) { return x == 1; });
        for (std::int64_t d = -6; d <= 12; ++d) {
            const LineBundle lb{d};
            EXPECT_EQ(is_h_ample(ws, lb), is_det_ample(ws, lb));
            // singletons are the binding strata: compare with all strata
            bool all_strata = true;
            for (const auto &st : strata(ws))
                all_strata &= gcd64(d, st.stabilizer_order) == 1;
            EXPECT_EQ(is_faithful(ws, lb).faithful, all_strata);
            if (d != 0 && d % L == 0 && !trivial)
                EXPECT_FALSE(is_faithful(ws, lb).faithful);
        }
        for (std::int64_t m = 1; m <= 3; ++m)
            EXPECT_EQ(is_det_ample(ws, LineBundle{L * m}), trivial);
    }
}
