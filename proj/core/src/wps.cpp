#include "orbistack/wps.hpp"

#include <algorithm>
#include <bit>

namespace orbistack {

Support Support::of(std::initializer_list<std::size_t> indices) {
    return of(std::vector<std::size_t>(indices));
}

Support Support::of(const std::vector<std::size_t> &indices) {
    std::uint64_t b = 0;
    for (auto i : indices) {
        if (i >= max_size)
            throw InvalidArgument("support index too large");
        b |= 1ULL << i;
    }
    return Support(b);
}

Support Support::full(std::size_t n) {
    if (n > max_size)
        throw InvalidArgument("at most 62 coordinates are supported");
    return Support(n == 0 ? 0 : (~0ULL >> (64 - n)));
}

std::size_t Support::size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> Support::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

bool support_before(Support a, Support b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    const auto ia = a.indices();
    const auto ib = b.indices();
    return ia < ib;
}

Support support_of(std::span<const std::int64_t> e) {
    if (e.size() > Support::max_size)
        throw InvalidArgument("at most 62 coordinates are supported");
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            b |= 1ULL << i;
    return Support(b);
}

WeightSystem::WeightSystem(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty())
        throw InvalidArgument("a weight system needs at least one weight");
    if (weights_.size() > Support::max_size)
        throw InvalidArgument("at most 62 weights are supported");
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] < 1)
            throw InvalidArgument("weight a_" + std::to_string(i) +
                                  " must be positive");
}

GradedSolutionSet section_basis(const WeightSystem &a, std::int64_t d) {
    if (d < 0)
        return GradedSolutionSet{d, {}};
    const std::int64_t one = 1;
    return graded_sections(a.matrix(), std::span(&one, 1), d);
}

std::vector<std::int64_t> hilbert_series(const WeightSystem &a,
                                         std::int64_t max_degree) {
    if (max_degree < 0)
        throw InvalidArgument("hilbert_series needs a nonnegative degree");
    const auto len = static_cast<std::size_t>(max_degree) + 1;
    std::vector<std::int64_t> coeff(len, 0);
    coeff[0] = 1;
    // multiply by 1/(1 - q^w) = 1 + q^w + q^{2w} + ...
    for (auto w : a.weights()) {
        const auto step = static_cast<std::size_t>(w);
        for (std::size_t d = step; d < len; ++d)
            coeff[d] = checked_add(coeff[d], coeff[d - step]);
    }
    return coeff;
}

std::vector<Stratum> strata(const WeightSystem &a) {
    std::vector<Stratum> out;
    const std::uint64_t limit = Support::full(a.size()).bits();
    for (std::uint64_t b = 1; b <= limit; ++b) {
        Stratum s;
        s.support = Support(b);
        std::int64_t g = 0;
        for (auto i : s.support.indices())
            g = gcd64(g, a[i]);
        s.stabilizer_order = g;
        out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const Stratum &x, const Stratum &y) {
        return support_before(x.support, y.support);
    });
    return out;
}

std::int64_t descent_modulus(const WeightSystem &a) {
    std::int64_t l = 1;
    for (auto w : a.weights())
        l = lcm64(l, w);
    return l;
}

FaithfulnessCheck is_faithful(const WeightSystem &a, LineBundle L) {
    FaithfulnessCheck out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (gcd64(L.degree, a[i]) != 1) {
            out.faithful = false;
            out.witness = Stratum{Support::of({i}), a[i]};
            return out;
        }
    }
    return out;
}

bool is_det_ample(const WeightSystem &a, LineBundle L) {
    return L.degree > 0 && is_faithful(a, L).faithful;
}

bool is_h_ample(const WeightSystem &a, LineBundle L) { return is_det_ample(a, L); }

} // namespace orbistack
