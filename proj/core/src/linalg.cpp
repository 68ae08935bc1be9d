#include "orbistack/linalg.hpp"

#include <algorithm>
#include <utility>

namespace orbistack::linalg {
namespace {

template <typename T> using Matrix = std::vector<std::vector<T>>;

template <typename T> Matrix<T> convert(const IntRows &rows, std::size_t cols) {
    Matrix<T> m;
    m.reserve(rows.size());
    for (const auto &r : rows) {
        if (r.size() != cols)
            throw InvalidArgument("row length does not match column count");
        std::vector<T> row(cols);
        for (std::size_t j = 0; j < cols; ++j)
            row[j] = from_int64<T>(r[j]);
        m.push_back(std::move(row));
    }
    return m;
}

template <typename T> void reduce_row(std::vector<T> &row) {
    T g = 0;
    for (const auto &v : row)
        g = gcd_value(g, v);
    if (g == T(0) || g == T(1))
        return;
    for (auto &v : row)
        v = v / g;
}

// Fraction-free reduced row echelon form: every pivot column is zero outside
// its pivot row. Rows are kept primitive. Returns the pivot columns.
template <typename T>
std::vector<std::size_t> reduced_echelon(Matrix<T> &m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == T(0))
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == T(0))
                continue;
            const T g = gcd_value(m[r][c], m[i][c]);
            const T a = m[r][c] / g;
            const T b = m[i][c] / g;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = m[i][j] * a - m[r][j] * b;
            reduce_row(m[i]);
        }
        reduce_row(m[r]);
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

template <typename T> IntVector narrow_primitive(std::vector<T> v) {
    reduce_row(v);
    for (const auto &x : v) {
        if (x == T(0))
            continue;
        if (sign(x) < 0)
            for (auto &y : v)
                y = -y;
        break;
    }
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = narrow(v[i]);
    return out;
}

template <typename T> IntRows kernel_impl(const IntRows &rows, std::size_t cols) {
    Matrix<T> m = convert<T>(rows, cols);
    const auto pivots = reduced_echelon(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    IntRows basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        // x_f = L, x_{c_i} = -L * m[i][f] / m[i][c_i]
        T lcm = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (m[i][f] == T(0))
                continue;
            const T p = abs_value(m[i][pivots[i]]);
            lcm = lcm / gcd_value(lcm, p) * p;
        }
        std::vector<T> x(cols, T(0));
        x[f] = lcm;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -(lcm / m[i][pivots[i]]) * m[i][f];
        basis.push_back(narrow_primitive(std::move(x)));
    }
    return basis;
}

// Unimodular row reduction to a row echelon basis of the same Z-lattice.
template <typename T> Matrix<T> lattice_echelon(Matrix<T> m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            while (m[i][c] != T(0)) {
                // Euclid on column c between rows r and i
                if (m[r][c] == T(0) ||
                    abs_value(m[i][c]) < abs_value(m[r][c])) {
                    std::swap(m[r], m[i]);
                    continue;
                }
                const T q = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j)
                    m[i][j] = m[i][j] - q * m[r][j];
            }
        }
        if (m[r][c] != T(0))
            ++r;
    }
    m.resize(r);
    return m;
}

template <typename T>
std::vector<BigInt> smith_impl(const IntRows &rows, std::size_t cols) {
    // Insert rows one at a time so the working matrix stays small.
    Matrix<T> basis;
    for (const auto &row : rows) {
        basis.push_back(convert<T>(IntRows{row}, cols).front());
        basis = lattice_echelon(std::move(basis), cols);
    }
    Matrix<T> a = std::move(basis);
    const std::size_t nr = a.size();
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < nr; ++t) {
        // bring a nonzero entry of the trailing block to (t, t) and clear
        // its row and column; repeat until it divides the whole block
        for (;;) {
            std::size_t bi = nr, bj = cols;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != T(0) &&
                        (bi == nr || abs_value(a[i][j]) < abs_value(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == nr)
                break;
            std::swap(a[t], a[bi]);
            for (auto &row : a)
                std::swap(row[t], row[bj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                const T q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] = a[i][j] - q * a[t][j];
                if (a[i][t] != T(0))
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const T q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < nr; ++i)
                    a[i][j] = a[i][j] - q * a[i][t];
                if (a[t][j] != T(0))
                    clean = false;
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != T(0)) {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            a[t][jj] = a[t][jj] + a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (t < nr && t < cols && a[t][t] != T(0))
            diag.push_back(abs(widen(a[t][t])));
    }
    return diag;
}

} // namespace

std::int64_t dot(const IntVector &a, const IntVector &b) {
    if (a.size() != b.size())
        throw InvalidArgument("dot product of vectors of different length");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

IntVector primitive(IntVector v) {
    std::vector<CheckedInt> w(v.begin(), v.end());
    return narrow_primitive(std::move(w));
}

std::size_t rank(const IntRows &rows, std::size_t cols) {
    if (cols <= 2) {
        // nonzero entry / nonzero 2x2 minor, exact in 128 bits
        const IntVector *first = nullptr;
        for (const auto &r : rows) {
            if (r.size() != cols)
                throw InvalidArgument("row length does not match column count");
            if (first == nullptr) {
                if (std::any_of(r.begin(), r.end(), [](auto v) { return v != 0; }))
                    first = &r;
                continue;
            }
            if (cols == 2 && static_cast<__int128>((*first)[0]) * r[1] !=
                                 static_cast<__int128>((*first)[1]) * r[0])
                return 2;
        }
        return first == nullptr ? 0 : 1;
    }
    return with_widening([&]<typename T>() {
        Matrix<T> m = convert<T>(rows, cols);
        return reduced_echelon(m, cols).size();
    });
}

IntRows kernel_basis(const IntRows &rows, std::size_t cols) {
    return with_widening([&]<typename T>() { return kernel_impl<T>(rows, cols); });
}

std::vector<BigInt> smith_invariants(const IntRows &rows, std::size_t cols) {
    return with_widening(
        [&]<typename T>() { return smith_impl<T>(rows, cols); });
}

IntRows lattice_basis(const IntRows &rows, std::size_t cols) {
    return with_widening([&]<typename T>() {
        auto m = lattice_echelon(convert<T>(rows, cols), cols);
        IntRows out;
        for (auto &r : m) {
            IntVector v(cols);
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = narrow(r[j]);
            out.push_back(std::move(v));
        }
        return out;
    });
}

LatticeIndex lattice_index(const IntRows &rows, std::size_t cols) {
    LatticeIndex out;
    const auto inv = smith_invariants(rows, cols);
    out.rank = inv.size();
    for (const auto &d : inv)
        out.index *= d;
    return out;
}

} // namespace orbistack::linalg
