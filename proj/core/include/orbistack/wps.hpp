#pragma once

#include "orbistack/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orbistack {

/// A set of coordinate indices, stored as a bitmask (index i <-> bit i).
class Support {
  public:
    static constexpr std::size_t max_size = 62;

    constexpr Support() = default;
    constexpr explicit Support(std::uint64_t bits) : bits_(bits) {}
    static Support of(std::initializer_list<std::size_t> indices);
    static Support of(const std::vector<std::size_t> &indices);
    static Support full(std::size_t n);

    constexpr std::uint64_t bits() const { return bits_; }
    bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    bool empty() const { return bits_ == 0; }
    std::size_t size() const;
    bool subset_of(Support other) const { return (bits_ & ~other.bits_) == 0; }
    Support with(std::size_t i) const { return Support(bits_ | (1ULL << i)); }
    std::vector<std::size_t> indices() const;

    friend bool operator==(Support, Support) = default;

  private:
    std::uint64_t bits_ = 0;
};

/// Order used for every list of supports: by size, then lexicographically
/// on the sorted index lists.
bool support_before(Support a, Support b);

/// Indices with a nonzero exponent.
Support support_of(std::span<const std::int64_t> e);

/// Weights (a_0, ..., a_n) of the weighted projective stack P(a); all >= 1.
class WeightSystem {
  public:
    explicit WeightSystem(std::vector<std::int64_t> weights);

    const std::vector<std::int64_t> &weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    std::int64_t operator[](std::size_t i) const { return weights_[i]; }

    /// The 1 x (n+1) matrix of weights.
    IntMatrix matrix() const { return IntMatrix::row_vector(weights_); }

    friend bool operator==(const WeightSystem &, const WeightSystem &) = default;

  private:
    std::vector<std::int64_t> weights_;
};

/// O(d); Pic of a weighted projective stack is Z.
struct LineBundle {
    std::int64_t degree = 0;
};

struct Stratum {
    Support support;
    std::int64_t stabilizer_order = 1; // gcd of the weights in the support
};

/// Monomial basis of H^0(P(a), O(d)); empty for d < 0.
GradedSolutionSet section_basis(const WeightSystem &a, std::int64_t d);

/// dim H^0(O(d)) for d = 0..max_degree, from the power series of
/// prod_i 1/(1 - q^{a_i}). Does not enumerate monomials.
std::vector<std::int64_t> hilbert_series(const WeightSystem &a,
                                         std::int64_t max_degree);

std::vector<Stratum> strata(const WeightSystem &a);

/// lcm(a_i): O(m) descends to the coarse space iff descent_modulus | m.
std::int64_t descent_modulus(const WeightSystem &a);

struct FaithfulnessCheck {
    bool faithful = true;
    std::optional<Stratum> witness; // first offending singleton stratum
};

/// µ_{g_S} acts on the fibre of O(d) with weight d, so O(d) is faithful iff
/// gcd(d, a_i) = 1 for every i. Singletons suffice since g_S divides each a_i.
FaithfulnessCheck is_faithful(const WeightSystem &a, LineBundle L);

bool is_det_ample(const WeightSystem &a, LineBundle L);

/// For line bundles on a cyclotomic stack H-ampleness coincides with
/// det-ampleness, so this agrees with is_det_ample. It is not a test of
/// H-ampleness for higher-rank bundles or non-cyclotomic stacks.
bool is_h_ample(const WeightSystem &a, LineBundle L);

} // namespace orbistack
