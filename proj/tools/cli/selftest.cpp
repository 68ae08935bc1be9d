#include "commands.hpp"
#include "oracles.hpp"

#include <functional>

namespace orbistack::cli {

namespace {

SelftestCheck check(const std::string &name, const std::function<std::string()> &body) {
    SelftestCheck c{name, false, {}};
    try {
        c.detail = body();
        c.passed = c.detail.empty();
    } catch (const std::exception &e) {
        c.detail = e.what();
    }
    return c;
}

std::string one_three_reproduction() {
    const auto d = find_embedding_data(WeightSystem({1, 3}), 1);
    const std::vector<ExponentVector> v1{{3, 0}, {0, 1}};
    const std::vector<TaggedSection> v2{{{4, 0}, 4}, {{1, 1}, 4}, {{5, 0}, 5}, {{2, 1}, 5},
                                        {{6, 0}, 6}, {{3, 1}, 6}, {{0, 2}, 6}};
    const std::vector<std::int64_t> weights{3, 3, 4, 4, 5, 5, 6, 6, 6};
    if (d.m0 != 3 || d.N != 3)
        return "m0/N differ";
    if (d.v1 != v1 || d.v2 != v2)
        return "V1/V2 differ";
    if (d.target_weights != weights)
        return "target weights differ";
    return {};
}

std::string one_three_verify_and_recover() {
    const auto d = find_embedding_data(WeightSystem({1, 3}), 1);
    if (!verify_immersion(d).passed)
        return "verify_immersion failed";
    if (!recover_data(d).passed)
        return "recover_data failed";
    return {};
}

std::string one_three_mutation() {
    auto d = find_embedding_data(WeightSystem({1, 3}), 1);
    d.v2.pop_back(); // y^2
    d.coordinates.pop_back();
    d.target_weights.pop_back();
    try {
        verify_immersion(d).ensure();
    } catch (const ChartGenerationFailed &) {
        return {};
    }
    return "dropping y^2 was not detected";
}

std::string series_oracle() {
    const std::vector<std::vector<std::int64_t>> systems{
        {1, 3}, {1, 1}, {2}, {2, 3}, {1, 2, 3}, {2, 2, 5}, {3, 4, 5, 6}};
    for (const auto &a : systems) {
        const auto ref = oracle::series_coefficients(a, 24);
        if (hilbert_series(WeightSystem(a), 24) != ref)
            return "hilbert_series";
        for (std::int64_t d = 0; d <= 24; ++d)
            if (static_cast<std::int64_t>(section_basis(WeightSystem(a), d).basis.size()) !=
                ref[static_cast<std::size_t>(d)])
                return "section_basis count";
    }
    return {};
}

std::string canonical_order() {
    for (const auto &a : std::vector<std::vector<std::int64_t>>{{1, 3}, {1, 2, 2}, {2, 3, 1}})
        for (std::int64_t d = 0; d <= 12; ++d)
            if (section_basis(WeightSystem(a), d).basis != oracle::weighted_monomials(a, d))
                return "section_basis order differs from the enumeration";
    const auto first = find_embedding_data(WeightSystem({1, 2, 3}), 1);
    if (!(first == find_embedding_data(WeightSystem({1, 2, 3}), 1)))
        return "find_embedding_data not deterministic";
    return {};
}

std::string git_oracle() {
    // k = 1, up to 3 coordinates, entries in [-2, 2]
    for (std::int64_t chi = -2; chi <= 2; ++chi)
        for (int n = 0; n <= 3; ++n) {
            std::vector<std::int64_t> w(static_cast<std::size_t>(n), -2);
            while (true) {
                std::vector<std::vector<std::int64_t>> cols;
                for (auto v : w)
                    cols.push_back({v});
                const std::vector<std::int64_t> c{chi};
                if (is_stable_columns(cols, c).stable != oracle::lambda_stable(cols, c))
                    return "cone test disagrees with the one-parameter-subgroup oracle";
                std::size_t i = 0;
                while (i < w.size() && w[i] == 2)
                    w[i++] = -2;
                if (i == w.size())
                    break;
                ++w[i];
            }
        }
    const CharacterAction act(IntMatrix::from_rows({{1, 3}}), {1});
    if (stable_locus(act).minimal_supports() != std::vector<Support>{Support::of({0}), Support::of({1})})
        return "stable locus of (1,3), chi = 1";
    return {};
}

std::string hilbert_oracle() {
    const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> cases{
        {{1, 3}, 1}, {{2, 3}, 1}, {{1, 2, 3}, 2}, {{2, 2, 3}, 1}};
    for (const auto &[a, d] : cases) {
        const auto W = IntMatrix::row_vector(a);
        const std::vector<std::int64_t> chi{d};
        const auto basis = hilbert_basis(W, chi);
        const auto ref = oracle::saturation_generators(W, chi, 3 * basis.max_degree(),
                                                       3 * basis.max_degree());
        if (basis.generators != ref)
            return "hilbert_basis differs from saturation";
    }
    return {};
}

std::string specialization() {
    for (const auto &a : std::vector<std::vector<std::int64_t>>{{1, 3}, {2, 2, 5}, {1, 1, 1, 4}}) {
        const auto locus = stable_locus(CharacterAction(IntMatrix::row_vector(a), {1}));
        std::vector<Support> singles;
        for (std::size_t i = 0; i < a.size(); ++i)
            singles.push_back(Support::of({i}));
        if (locus.minimal_supports() != singles)
            return "minimal stable supports are not the singletons";
    }
    return {};
}

} // namespace

std::vector<SelftestCheck> selftest() {
    return {check("P(1,3) embedding data", one_three_reproduction),
            check("P(1,3) immersion and recovery", one_three_verify_and_recover),
            check("P(1,3) missing y^2 is detected", one_three_mutation),
            check("section counts match the generating function", series_oracle),
            check("canonical ordering and determinism", canonical_order),
            check("cone stability matches one-parameter subgroups", git_oracle),
            check("Hilbert bases match semigroup saturation", hilbert_oracle),
            check("weighted projective stacks as GIT quotients", specialization)};
}

} // namespace orbistack::cli
