#pragma once

#include "orbistack/lattice.hpp"
#include "orbistack/wps.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbistack {

/// Diagonal action of G_m^k on A^n (column i of W is the weight of x_i)
/// together with the character χ used for stability.
class CharacterAction {
  public:
    CharacterAction(IntMatrix weights, std::vector<std::int64_t> chi);

    const IntMatrix &weights() const { return weights_; }
    const std::vector<std::int64_t> &chi() const { return chi_; }
    std::size_t rank() const { return weights_.rows(); }
    std::size_t dimension() const { return weights_.cols(); }

    /// Same action, character N·χ.
    CharacterAction scaled(std::int64_t N) const;

  private:
    IntMatrix weights_;
    std::vector<std::int64_t> chi_;
};

/// Polynomial iff every weight is nonnegative.
bool is_polynomial(const IntMatrix &W);

/// Largest column sum; throws NotPolynomial when some weight is negative.
std::int64_t representation_degree(const IntMatrix &W);

enum class StabilityReason { None, StabilizerInfinite, ChiOutsideCone, ChiOnBoundary };

std::string to_string(StabilityReason r);

struct StabilityCertificate {
    bool stable = false;
    StabilityReason reason = StabilityReason::None;
    /// Destabilizing one-parameter subgroup: λ·w_i >= 0 on the support and
    /// λ·χ <= 0 (strict for ChiOutsideCone, zero for ChiOnBoundary; for
    /// StabilizerInfinite λ kills every weight). Absent when stable or k = 0.
    std::optional<std::vector<std::int64_t>> witness;
};

/// A point with support S is χ-stable iff {w_i : i ∈ S} spans Q^k and χ lies
/// in the relative interior of Cone(w_i : i ∈ S).
StabilityCertificate is_stable_support(const CharacterAction &act, Support S);

/// Same test for an explicit list of weight vectors (the columns of W
/// indexed by the support).
StabilityCertificate
is_stable_columns(const std::vector<std::vector<std::int64_t>> &columns,
                  std::span<const std::int64_t> chi);

/// The open set X^{s,χ}, stored by its minimal stable supports.
class StableLocus {
  public:
    StableLocus(std::size_t n, std::vector<Support> minimal);

    std::size_t dimension() const { return n_; }
    const std::vector<Support> &minimal_supports() const { return minimal_; }
    bool contains(Support S) const;

    friend bool operator==(const StableLocus &, const StableLocus &) = default;

  private:
    std::size_t n_ = 0;
    std::vector<Support> minimal_;
};

/// Largest n accepted by the exhaustive support sweep.
inline constexpr std::size_t max_sweep_dimension = 24;

/// Evaluates every support and throws std::logic_error if the stable
/// supports fail to be upward closed.
StableLocus stable_locus(const CharacterAction &act);

struct ChartReport {
    SemigroupGenerator generator;
    /// D(f) ⊆ X^{s,χ}, i.e. D_+(f) lies in the coarse space of the stable
    /// quotient. Always false for degree-0 generators.
    bool chart_stable = false;
};

struct ProjPresentation {
    SemigroupBasis basis;
    std::vector<ChartReport> charts;
    HilbertCertificate certificate;
};

/// Generators (with degrees) of S = ⊕_{m>=0} A_{χ^m} = A[u]^G, and for each
/// generator f of positive degree whether its chart is stable.
ProjPresentation proj_presentation(const CharacterAction &act,
                                   std::optional<std::int64_t> degree_bound = {});

/// stable_locus(act) == stable_locus(act with N·χ).
bool stability_power_invariance(const CharacterAction &act, std::int64_t N);

} // namespace orbistack
