#include "orbistack/git.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbistack {

CharacterAction::CharacterAction(IntMatrix weights, std::vector<std::int64_t> chi)
    : weights_(std::move(weights)), chi_(std::move(chi)) {
    if (chi_.size() != weights_.rows())
        throw InvalidArgument("character has length " + std::to_string(chi_.size()) +
                              " but the weight matrix has " +
                              std::to_string(weights_.rows()) + " rows");
    if (weights_.cols() > Support::max_size)
        throw InvalidArgument("at most 62 coordinates are supported");
}

CharacterAction CharacterAction::scaled(std::int64_t N) const {
    auto c = chi_;
    for (auto &v : c)
        v = checked_mul(v, N);
    return CharacterAction(weights_, std::move(c));
}

bool is_polynomial(const IntMatrix &W) {
    for (std::size_t r = 0; r < W.rows(); ++r)
        for (std::size_t c = 0; c < W.cols(); ++c)
            if (W(r, c) < 0)
                return false;
    return true;
}

std::int64_t representation_degree(const IntMatrix &W) {
    if (!is_polynomial(W))
        throw NotPolynomial("representation degree is undefined: some weight is negative");
    std::int64_t best = 0;
    for (std::size_t c = 0; c < W.cols(); ++c) {
        std::int64_t s = 0;
        for (std::size_t r = 0; r < W.rows(); ++r)
            s = checked_add(s, W(r, c));
        best = std::max(best, s);
    }
    return best;
}

std::string to_string(StabilityReason r) {
    switch (r) {
    case StabilityReason::None:
        return "None";
    case StabilityReason::StabilizerInfinite:
        return "StabilizerInfinite";
    case StabilityReason::ChiOutsideCone:
        return "ChiOutsideCone";
    case StabilityReason::ChiOnBoundary:
        return "ChiOnBoundary";
    }
    return "?";
}

StabilityCertificate is_stable_support(const CharacterAction &act, Support S) {
    std::vector<std::vector<std::int64_t>> cols;
    for (auto i : S.indices()) {
        if (i >= act.dimension())
            throw InvalidArgument("support index out of range");
        cols.push_back(act.weights().column(i));
    }
    return is_stable_columns(cols, act.chi());
}

namespace {

StabilityCertificate unstable_by_rank(const ConeDual &dual,
                                      const std::vector<std::int64_t> &chi) {
    StabilityCertificate cert;
    cert.reason = StabilityReason::StabilizerInfinite;
    // flip so that λ·χ <= 0, preferring a kernel vector that separates χ
    const auto oriented = [&](std::vector<std::int64_t> lambda) {
        if (linalg::dot(lambda, chi) > 0)
            for (auto &v : lambda)
                v = checked_neg(v);
        return lambda;
    };
    for (const auto &mu : dual.orthogonal)
        if (linalg::dot(mu, chi) != 0) {
            cert.witness = oriented(mu);
            return cert;
        }
    cert.witness = oriented(dual.orthogonal.front());
    return cert;
}

} // namespace

StabilityCertificate
is_stable_columns(const std::vector<std::vector<std::int64_t>> &cols,
                  std::span<const std::int64_t> chi_span) {
    const std::size_t k = chi_span.size();
    const std::vector<std::int64_t> chi(chi_span.begin(), chi_span.end());
    for (const auto &c : cols)
        if (c.size() != k)
            throw InvalidArgument("weight vectors must have the length of chi");
    StabilityCertificate cert;
    if (k == 0) {
        cert.stable = true;
        return cert;
    }
    // facets are only needed for full-dimensional cones
    const auto dual = detail::cone_dual(cols, k, false);
    if (dual.dim < k)
        return unstable_by_rank(dual, chi);

    // full-dimensional cone: U^⊥ = 0, only facets matter
    const std::vector<std::int64_t> *boundary = nullptr;
    for (const auto &lambda : dual.facets) {
        const auto v = linalg::dot(lambda, chi);
        if (v < 0) {
            cert.reason = StabilityReason::ChiOutsideCone;
            cert.witness = lambda;
            return cert;
        }
        if (v == 0 && boundary == nullptr)
            boundary = &lambda;
    }
    if (boundary != nullptr) {
        cert.reason = StabilityReason::ChiOnBoundary;
        cert.witness = *boundary;
        return cert;
    }
    cert.stable = true;
    return cert;
}

StableLocus::StableLocus(std::size_t n, std::vector<Support> minimal)
    : n_(n), minimal_(std::move(minimal)) {
    std::sort(minimal_.begin(), minimal_.end(), support_before);
}

bool StableLocus::contains(Support S) const {
    return std::any_of(minimal_.begin(), minimal_.end(),
                       [&](Support m) { return m.subset_of(S); });
}

StableLocus stable_locus(const CharacterAction &act) {
    const std::size_t n = act.dimension();
    if (n > max_sweep_dimension)
        throw InvalidArgument("stable_locus sweeps all supports; n is limited to " +
                              std::to_string(max_sweep_dimension));
    const std::uint64_t count = 1ULL << n;
    std::vector<bool> stable(count);
    for (std::uint64_t b = 0; b < count; ++b)
        stable[b] = is_stable_support(act, Support(b)).stable;

    std::vector<Support> minimal;
    for (std::uint64_t b = 0; b < count; ++b) {
        if (!stable[b])
            continue;
        bool is_min = true;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t bit = 1ULL << i;
            if (b & bit) {
                if (stable[b & ~bit])
                    is_min = false;
            } else if (!stable[b | bit]) {
                throw std::logic_error("stable supports are not upward closed");
            }
        }
        if (is_min)
            minimal.emplace_back(b);
    }
    return StableLocus(n, std::move(minimal));
}

ProjPresentation proj_presentation(const CharacterAction &act,
                                   std::optional<std::int64_t> degree_bound) {
    ProjPresentation out;
    out.basis = hilbert_basis(act.weights(), act.chi());
    const auto locus = stable_locus(act);
    for (const auto &g : out.basis.generators) {
        ChartReport chart;
        chart.generator = g;
        // supersets of a stable support are stable, so checking supp(f)
        // covers every point of D(f)
        chart.chart_stable = g.degree > 0 && locus.contains(support_of(g.exponents));
        out.charts.push_back(std::move(chart));
    }
    const auto bound = degree_bound.value_or(default_certification_bound(out.basis));
    out.certificate = certify_hilbert_basis(act.weights(), act.chi(), out.basis, bound);
    return out;
}

bool stability_power_invariance(const CharacterAction &act, std::int64_t N) {
    if (N <= 0)
        throw InvalidArgument("power must be positive");
    return stable_locus(act) == stable_locus(act.scaled(N));
}

} // namespace orbistack
