#pragma once

#include "orbistack/git.hpp"
#include "orbistack/lattice.hpp"
#include "orbistack/wps.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbistack {

/// A section of E^{e_degree} = O(e_degree · d′).
struct TaggedSection {
    ExponentVector exponents;
    std::int64_t e_degree = 0;
    friend bool operator==(const TaggedSection &, const TaggedSection &) = default;
};

/// Data (m0, N, V1, V2) for the line bundle E = O(d′) on P(a), together with
/// the monomial map into the weighted projective stack P(target_weights).
///
/// V1 spans H^0(O(N d′)) and is the weight-N block of the target; V2 holds
/// H^0(O((m+N) d′)) for m = 1..m0 with weight m+N. `coordinates` is V1
/// followed by V2, each block in canonical monomial order.
struct EmbeddingData {
    WeightSystem source{{1}};
    std::int64_t d_prime = 1;
    std::int64_t m0 = 1;
    std::int64_t N = 1;
    std::vector<ExponentVector> v1;
    std::vector<TaggedSection> v2;
    std::vector<std::int64_t> target_weights;
    std::vector<ExponentVector> coordinates;

    friend bool operator==(const EmbeddingData &, const EmbeddingData &) = default;
};

struct EmbeddingOptions {
    /// Largest N tried before giving up with VeryAmpleCertificationFailed.
    std::int64_t max_n = 64;
};

/// How N was chosen.
struct NCertificate {
    std::int64_t descent_modulus = 1;
    /// Smallest N with descent_modulus | N·d′.
    std::int64_t first_admissible_n = 1;
    /// N had to be raised past first_admissible_n.
    bool escalated = false;
    /// j for which "every point of j·P is a sum of j points of P" was checked.
    std::vector<std::int64_t> normality_degrees;
    /// Rejected candidates with the failed test, e.g. "N=2: descent".
    std::vector<std::string> rejected;
    std::vector<std::string> assumptions;
};

struct EmbeddingResult {
    EmbeddingData data;
    NCertificate certificate;
};

EmbeddingResult find_embedding(const WeightSystem &a, std::int64_t d_prime,
                               const EmbeddingOptions &options = {});

inline EmbeddingData find_embedding_data(const WeightSystem &a,
                                         std::int64_t d_prime,
                                         const EmbeddingOptions &options = {}) {
    return find_embedding(a, d_prime, options).data;
}

/// m0: largest degree among minimal generators of {(e, m) : a·e = m d′}.
std::int64_t section_ring_generation_degree(const WeightSystem &a,
                                            std::int64_t d_prime);

/// True iff π_*O(k) is generated by global sections on every standard chart
/// D_+(x_i) of the coarse space.
bool pushforward_globally_generated(const WeightSystem &a, std::int64_t k);

/// True iff every lattice point of degree j·deg is a sum of j lattice points
/// of degree deg, for j = 2..max_j.
bool section_polytope_normal(const WeightSystem &a, std::int64_t deg,
                             std::int64_t max_j);

struct ChartCheck {
    ExponentVector chart; // the section s ∈ V1 defining D(s)
    bool passed = true;
    /// First section monomial (of E-degree m + weight of s) not reached.
    std::optional<ExponentVector> witness;
    std::int64_t failing_degree = 0; // m, when failed
};

struct StratumCheck {
    Support support;
    std::size_t rank = 0;
    BigInt index = 1; // 0 when the rank is deficient
    bool passed = true;
};

struct ImmersionReport {
    bool passed = true;
    std::int64_t degree_bound = 0;
    std::vector<ChartCheck> charts;
    std::vector<StratumCheck> strata;

    /// Throws ChartGenerationFailed or StabilizerNotPreserved for the first
    /// failing check.
    void ensure() const;
};

/// Default chart-generation bound: twice the largest E-degree in V2.
std::int64_t default_chart_bound(const EmbeddingData &data);

/// Throws InvalidEmbeddingData when the fields are mutually inconsistent
/// (lengths, coordinate list, tags, weighted degrees).
void validate(const EmbeddingData &data);

ImmersionReport verify_immersion(const EmbeddingData &data,
                                 std::optional<std::int64_t> degree_bound = {});

struct RecoveredData {
    std::int64_t d_prime = 0;
    std::int64_t N = 0;
    std::int64_t m0 = 0;
    std::vector<ExponentVector> v1;
    std::vector<TaggedSection> v2;
};

struct RecoveryReport {
    RecoveredData recovered;
    bool passed = true;
    std::optional<std::string> mismatch; // field name
    void ensure() const;
};

/// Reads (d′, N, m0, V1, V2) back off the monomial map (source weights,
/// target weights, coordinates) and compares with the stored fields.
RecoveryReport recover_data(const EmbeddingData &data);

struct MorphismReport {
    bool well_defined = true;
    bool polynomial_target = true;
    std::vector<Support> base_locus;
    bool lands_in_stable = true;
};

/// The morphism P(a) -> [A^r / G_m] defined by sections s_j of E^{α_j}.
MorphismReport morphism_from_sections(const WeightSystem &a, std::int64_t d_prime,
                                      const std::vector<TaggedSection> &sections);

} // namespace orbistack
