#pragma once

#include "orbistack/arith.hpp"
#include "orbistack/linalg.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbistack {

/// Exponent tuple of a monomial x^e; all entries are nonnegative.
using ExponentVector = std::vector<std::int64_t>;

/// Dense k x n integer matrix. Column i is the character through which the
/// torus acts on coordinate x_i. k = 0 (trivial group) is allowed.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Rows given explicitly; `cols` is needed when there are no rows.
    IntMatrix(std::vector<std::vector<std::int64_t>> rows, std::size_t cols);
    static IntMatrix from_rows(std::vector<std::vector<std::int64_t>> rows);
    static IntMatrix row_vector(std::vector<std::int64_t> row);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::int64_t &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }

    std::vector<std::int64_t> column(std::size_t c) const;
    std::vector<std::vector<std::int64_t>> columns() const;
    std::vector<std::vector<std::int64_t>> row_list() const;

    /// Appends `col` as a new last column.
    IntMatrix with_column(std::span<const std::int64_t> col) const;

    /// W * e, with overflow checks.
    std::vector<std::int64_t> apply(std::span<const std::int64_t> e) const;

    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

std::int64_t total_degree(std::span<const std::int64_t> e);
std::int64_t weighted_degree(std::span<const std::int64_t> weights,
                             std::span<const std::int64_t> e);

/// Canonical monomial order: larger total degree first, ties broken
/// lexicographically with the larger exponent of x_0 first. Returns true
/// when `a` is listed before `b`.
bool grlex_before(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b);
void sort_grlex(std::vector<ExponentVector> &v);

/// The degree-m piece A_{χ^m}: all e >= 0 with W e = m χ.
struct GradedSolutionSet {
    std::int64_t degree = 0;
    std::vector<ExponentVector> basis; // canonical order, no duplicates
};

struct SemigroupGenerator {
    ExponentVector exponents;
    std::int64_t degree = 0;
    friend bool operator==(const SemigroupGenerator &,
                           const SemigroupGenerator &) = default;
};

/// Minimal generators of {(e, m) : W e = m χ, e >= 0, m >= 0}, ordered by m
/// and then canonically on e.
struct SemigroupBasis {
    std::vector<SemigroupGenerator> generators;
    /// True when the degree-0 part contains nonzero elements (there are
    /// nonconstant invariants); those generators appear with degree 0.
    bool not_pointed = false;

    std::int64_t max_degree() const;
};

GradedSolutionSet graded_sections(const IntMatrix &W,
                                  std::span<const std::int64_t> chi,
                                  std::int64_t m);

SemigroupBasis hilbert_basis(const IntMatrix &W,
                             std::span<const std::int64_t> chi);

/// Minimal nonzero solutions of A x = 0 over the nonnegative integers
/// (Contejean-Devie completion), in canonical order.
std::vector<ExponentVector> minimal_nonnegative_solutions(const IntMatrix &A);

struct HilbertCertificate {
    bool checked = false; // false when the semigroup is not pointed
    bool complete = true;
    std::int64_t degree_bound = 0;
    /// First degree where the generated sums differ from graded_sections.
    std::optional<std::int64_t> failing_degree;
};

/// Checks that for every m <= bound the m-fold products of `basis` reach
/// exactly graded_sections(W, χ, m).
HilbertCertificate certify_hilbert_basis(const IntMatrix &W,
                                         std::span<const std::int64_t> chi,
                                         const SemigroupBasis &basis,
                                         std::int64_t degree_bound);

inline std::int64_t default_certification_bound(const SemigroupBasis &b) {
    return 4 * std::max<std::int64_t>(1, b.max_degree());
}

enum class ConeLocation { Outside, Boundary, RelativeInterior };

std::string to_string(ConeLocation loc);

struct ConePosition {
    ConeLocation location = ConeLocation::Outside;
    bool full_dim = false;
};

/// Exact position of `chi` relative to Cone(columns) in Q^k.
ConePosition cone_position(std::span<const Rational> chi,
                           const std::vector<std::vector<std::int64_t>> &columns);
ConePosition cone_position(std::span<const std::int64_t> chi,
                           const std::vector<std::vector<std::int64_t>> &columns);

/// Facet description of a finitely generated cone C = Cone(w_i) in Q^k.
struct ConeDual {
    std::size_t ambient = 0;
    std::size_t dim = 0; // dimension of the linear span U of the generators
    /// Primitive integer basis of U^⊥.
    std::vector<std::vector<std::int64_t>> orthogonal;
    /// Primitive facet normals of C inside U: λ ∈ U with λ·w_i >= 0 for all
    /// i and vanishing on a codimension-one face. Empty when C = U.
    std::vector<std::vector<std::int64_t>> facets;
};

ConeDual cone_dual(const std::vector<std::vector<std::int64_t>> &columns,
                   std::size_t k);

namespace detail {
/// cone_dual that may skip the facet enumeration when the cone is not
/// full-dimensional (callers that only need the rank and U^⊥).
ConeDual cone_dual(const std::vector<std::vector<std::int64_t>> &columns,
                   std::size_t k, bool facets_when_degenerate);
} // namespace detail

/// True iff the columns span Q^k.
bool lattice_spans(const std::vector<std::vector<std::int64_t>> &columns,
                   std::size_t k);

} // namespace orbistack
