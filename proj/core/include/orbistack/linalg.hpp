#pragma once

#include "orbistack/arith.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orbistack::linalg {

using IntVector = std::vector<std::int64_t>;
using IntRows = std::vector<IntVector>;

// All routines are exact. They run in checked int64 and transparently redo
// the computation with GMP integers when an intermediate overflows; only
// results that themselves do not fit in int64 raise ArithmeticOverflow.

/// Rank over Q of the matrix whose rows are `rows` (each of length `cols`).
std::size_t rank(const IntRows &rows, std::size_t cols);

/// Primitive integer vectors forming a Q-basis of {x : r.x = 0 for r in rows}.
/// Each vector's first nonzero entry is positive.
IntRows kernel_basis(const IntRows &rows, std::size_t cols);

/// Divide by the gcd of the entries and make the first nonzero entry
/// positive. The zero vector is returned unchanged.
IntVector primitive(IntVector v);

std::int64_t dot(const IntVector &a, const IntVector &b);

/// Nonzero invariant factors (d1 | d2 | ...) of the Smith normal form of the
/// matrix with the given rows.
std::vector<BigInt> smith_invariants(const IntRows &rows, std::size_t cols);

struct LatticeIndex {
    std::size_t rank = 0;
    /// Index of the Z-span of the rows inside its saturation (Q-span ∩ Z^cols).
    BigInt index = 1;
};

LatticeIndex lattice_index(const IntRows &rows, std::size_t cols);

} // namespace orbistack::linalg

namespace orbistack::linalg {

/// Row echelon basis of the Z-span of `rows` (unimodular reduction).
IntRows lattice_basis(const IntRows &rows, std::size_t cols);

} // namespace orbistack::linalg
