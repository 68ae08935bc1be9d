#include "orbistack/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

namespace orbistack {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::vector<std::vector<std::int64_t>> rows,
                     std::size_t cols)
    : rows_(rows.size()), cols_(cols) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols)
            throw InvalidArgument("matrix rows have inconsistent lengths");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<std::int64_t>> rows) {
    if (rows.empty())
        throw InvalidArgument("from_rows needs at least one row");
    const std::size_t c = rows.front().size();
    return IntMatrix(std::move(rows), c);
}

IntMatrix IntMatrix::row_vector(std::vector<std::int64_t> row) {
    const std::size_t c = row.size();
    return IntMatrix({std::move(row)}, c);
}

std::vector<std::int64_t> IntMatrix::column(std::size_t c) const {
    std::vector<std::int64_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

std::vector<std::vector<std::int64_t>> IntMatrix::columns() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

std::vector<std::vector<std::int64_t>> IntMatrix::row_list() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    return out;
}

IntMatrix IntMatrix::with_column(std::span<const std::int64_t> col) const {
    if (col.size() != rows_)
        throw InvalidArgument("appended column has wrong length");
    IntMatrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        out(r, cols_) = col[r];
    }
    return out;
}

std::vector<std::int64_t>
IntMatrix::apply(std::span<const std::int64_t> e) const {
    if (e.size() != cols_)
        throw InvalidArgument("vector length does not match matrix columns");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (e[c] != 0)
                out[r] = checked_add(out[r], checked_mul((*this)(r, c), e[c]));
    return out;
}

// ---------------------------------------------------------------- ordering

std::int64_t total_degree(std::span<const std::int64_t> e) {
    std::int64_t s = 0;
    for (auto v : e)
        s = checked_add(s, v);
    return s;
}

std::int64_t weighted_degree(std::span<const std::int64_t> weights,
                             std::span<const std::int64_t> e) {
    if (weights.size() != e.size())
        throw InvalidArgument("weights and exponents differ in length");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        s = checked_add(s, checked_mul(weights[i], e[i]));
    return s;
}

bool grlex_before(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b) {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void sort_grlex(std::vector<ExponentVector> &v) {
    std::stable_sort(v.begin(), v.end(),
                     [](const ExponentVector &a, const ExponentVector &b) {
                         return grlex_before(a, b);
                     });
}

std::int64_t SemigroupBasis::max_degree() const {
    std::int64_t m = 0;
    for (const auto &g : generators)
        m = std::max(m, g.degree);
    return m;
}

// ---------------------------------------------------------------- cones

std::string to_string(ConeLocation loc) {
    switch (loc) {
    case ConeLocation::Outside:
        return "Outside";
    case ConeLocation::Boundary:
        return "Boundary";
    case ConeLocation::RelativeInterior:
        return "RelativeInterior";
    }
    return "?";
}

namespace {

void check_columns(const std::vector<std::vector<std::int64_t>> &columns,
                   std::size_t k) {
    for (const auto &c : columns)
        if (c.size() != k)
            throw InvalidArgument("cone generator has wrong dimension");
}

// Calls f on every size-r subset of {0..n-1} (as an index list).
void for_each_subset(std::size_t n, std::size_t r,
                     const std::function<void(const std::vector<std::size_t> &)> &f) {
    if (r > n)
        return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i)
        idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Normal line of k - 1 vectors in Q^k, or nothing when they are dependent.
// Uses the cross product for k <= 3 and a kernel computation otherwise.
std::optional<std::vector<std::int64_t>>
hyperplane_normal(const std::vector<std::vector<std::int64_t>> &rows, std::size_t k) {
    if (k <= 3 && rows.size() + 1 == k) try {
        std::vector<std::int64_t> n(k);
        if (k == 1) {
            n[0] = 1;
        } else if (k == 2) {
            n = {checked_neg(rows[0][1]), rows[0][0]};
        } else {
            const auto &u = rows[0], &v = rows[1];
            n = {checked_sub(checked_mul(u[1], v[2]), checked_mul(u[2], v[1])),
                 checked_sub(checked_mul(u[2], v[0]), checked_mul(u[0], v[2])),
                 checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]))};
        }
        if (std::all_of(n.begin(), n.end(), [](auto x) { return x == 0; }))
            return std::nullopt;
        return linalg::primitive(n);
    } catch (const ArithmeticOverflow &) {
        // entries too large for the closed form; the kernel path widens
    }
    auto ker = linalg::kernel_basis(rows, k);
    if (ker.size() != 1)
        return std::nullopt;
    return std::move(ker.front());
}

} // namespace

ConeDual cone_dual(const std::vector<std::vector<std::int64_t>> &columns,
                   std::size_t k) {
    return detail::cone_dual(columns, k, true);
}

ConeDual detail::cone_dual(const std::vector<std::vector<std::int64_t>> &columns,
                           std::size_t k, bool facets_when_degenerate) {
    check_columns(columns, k);
    ConeDual out;
    out.ambient = k;
    // distinct nonzero directions
    std::vector<std::vector<std::int64_t>> dirs;
    for (const auto &c : columns) {
        if (std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; }))
            continue;
        // keep the sign: only positive rescaling preserves the cone
        auto p = c;
        std::int64_t g = 0;
        for (auto v : p)
            g = gcd64(g, v);
        for (auto &v : p)
            v /= g;
        if (std::find(dirs.begin(), dirs.end(), p) == dirs.end())
            dirs.push_back(std::move(p));
    }
    out.dim = dirs.empty() ? 0 : linalg::rank(dirs, k);
    if (dirs.empty()) {
        for (std::size_t i = 0; i < k; ++i) {
            out.orthogonal.emplace_back(k, 0);
            out.orthogonal.back()[i] = 1;
        }
    } else if (out.dim < k) {
        out.orthogonal = linalg::kernel_basis(dirs, k);
    }
    if (out.dim == 0 || (out.dim < k && !facets_when_degenerate))
        return out;

    std::set<std::vector<std::int64_t>> seen;
    for_each_subset(dirs.size(), out.dim - 1,
                    [&](const std::vector<std::size_t> &t) {
                        auto rows = out.orthogonal;
                        for (auto i : t)
                            rows.push_back(dirs[i]);
                        auto normal = hyperplane_normal(rows, k);
                        if (!normal)
                            return;
                        auto lambda = std::move(*normal);
                        bool pos = false, neg = false;
                        for (const auto &w : dirs) {
                            const auto v = linalg::dot(lambda, w);
                            pos |= v > 0;
                            neg |= v < 0;
                        }
                        if (pos && neg)
                            return;
                        if (neg)
                            for (auto &v : lambda)
                                v = checked_neg(v);
                        if (seen.insert(lambda).second)
                            out.facets.push_back(std::move(lambda));
                    });
    return out;
}

namespace {

ConePosition classify(const ConeDual &dual,
                      const std::function<int(const std::vector<std::int64_t> &)> &sign_of) {
    ConePosition pos;
    pos.full_dim = dual.dim == dual.ambient;
    for (const auto &mu : dual.orthogonal)
        if (sign_of(mu) != 0) {
            pos.location = ConeLocation::Outside;
            return pos;
        }
    bool boundary = false;
    for (const auto &lambda : dual.facets) {
        const int s = sign_of(lambda);
        if (s < 0) {
            pos.location = ConeLocation::Outside;
            return pos;
        }
        boundary |= s == 0;
    }
    pos.location = boundary ? ConeLocation::Boundary : ConeLocation::RelativeInterior;
    return pos;
}

} // namespace

ConePosition cone_position(std::span<const Rational> chi,
                           const std::vector<std::vector<std::int64_t>> &columns) {
    const auto dual = cone_dual(columns, chi.size());
    return classify(dual, [&](const std::vector<std::int64_t> &lambda) {
        Rational s = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            s += Rational(to_big(lambda[i])) * chi[i];
        return sgn(s);
    });
}

ConePosition cone_position(std::span<const std::int64_t> chi,
                           const std::vector<std::vector<std::int64_t>> &columns) {
    std::vector<Rational> q;
    q.reserve(chi.size());
    for (auto v : chi)
        q.emplace_back(to_big(v));
    return cone_position(std::span<const Rational>(q), columns);
}

bool lattice_spans(const std::vector<std::vector<std::int64_t>> &columns,
                   std::size_t k) {
    check_columns(columns, k);
    if (k == 0)
        return true;
    if (columns.empty())
        return false;
    return linalg::rank(columns, k) == k;
}

// ---------------------------------------------------------------- Diophantine

std::vector<ExponentVector> minimal_nonnegative_solutions(const IntMatrix &A) {
    const std::size_t p = A.cols();
    const std::size_t k = A.rows();
    const auto cols = A.columns();

    struct Candidate {
        ExponentVector x;
        std::vector<std::int64_t> image;
    };
    std::vector<ExponentVector> found;
    std::vector<Candidate> layer;
    for (std::size_t j = 0; j < p; ++j) {
        ExponentVector x(p, 0);
        x[j] = 1;
        layer.push_back({std::move(x), cols[j]});
    }
    const auto dominates = [&](const ExponentVector &y) {
        for (const auto &b : found) {
            bool ge = true;
            for (std::size_t i = 0; i < p && ge; ++i)
                ge = y[i] >= b[i];
            if (ge)
                return true;
        }
        return false;
    };
    const auto is_zero = [](const std::vector<std::int64_t> &v) {
        return std::all_of(v.begin(), v.end(), [](auto t) { return t == 0; });
    };

    while (!layer.empty()) {
        for (const auto &c : layer)
            if (is_zero(c.image))
                found.push_back(c.x);
        std::map<ExponentVector, std::vector<std::int64_t>> next;
        for (const auto &c : layer) {
            if (is_zero(c.image))
                continue;
            for (std::size_t j = 0; j < p; ++j) {
                std::int64_t ip = 0;
                for (std::size_t r = 0; r < k; ++r)
                    ip = checked_add(ip, checked_mul(c.image[r], cols[j][r]));
                if (ip >= 0)
                    continue;
                ExponentVector y = c.x;
                y[j] = checked_add(y[j], 1);
                if (next.count(y) || dominates(y))
                    continue;
                std::vector<std::int64_t> img(k);
                for (std::size_t r = 0; r < k; ++r)
                    img[r] = checked_add(c.image[r], cols[j][r]);
                next.emplace(std::move(y), std::move(img));
            }
        }
        layer.clear();
        for (auto &[x, img] : next)
            layer.push_back({x, img});
    }
    sort_grlex(found);
    return found;
}

// ---------------------------------------------------------------- sections

namespace {

void check_character(const IntMatrix &W, std::span<const std::int64_t> chi) {
    if (chi.size() != W.rows())
        throw InvalidArgument("character length " + std::to_string(chi.size()) +
                              " does not match " + std::to_string(W.rows()) +
                              " weight rows");
}

} // namespace

GradedSolutionSet graded_sections(const IntMatrix &W,
                                  std::span<const std::int64_t> chi,
                                  std::int64_t m) {
    check_character(W, chi);
    if (m < 0)
        throw InvalidArgument("graded_sections needs m >= 0");
    const std::size_t n = W.cols();
    const std::size_t k = W.rows();
    GradedSolutionSet out;
    out.degree = m;

    std::vector<std::int64_t> target(k);
    for (std::size_t r = 0; r < k; ++r)
        target[r] = checked_mul(m, chi[r]);
    const bool target_zero =
        std::all_of(target.begin(), target.end(), [](auto v) { return v == 0; });

    if (n == 0) {
        if (target_zero)
            out.basis.push_back({});
        return out;
    }

    const auto cols = W.columns();
    const auto dual = cone_dual(cols, k);
    std::vector<std::int64_t> c(k, 0);
    for (const auto &f : dual.facets)
        for (std::size_t r = 0; r < k; ++r)
            c[r] = checked_add(c[r], f[r]);
    std::vector<std::int64_t> cw(n);
    bool bounded = !dual.facets.empty();
    for (std::size_t i = 0; i < n && bounded; ++i) {
        cw[i] = linalg::dot(c, cols[i]);
        bounded = cw[i] > 0;
    }

    if (!bounded) {
        // recession cone is nonzero: the set is infinite unless it is empty
        bool nonempty = target_zero;
        if (!nonempty) {
            const auto sols =
                minimal_nonnegative_solutions(W.with_column(std::vector<std::int64_t>(
                    [&] {
                        std::vector<std::int64_t> t(k);
                        for (std::size_t r = 0; r < k; ++r)
                            t[r] = checked_neg(target[r]);
                        return t;
                    }())));
            nonempty = std::any_of(sols.begin(), sols.end(),
                                   [&](const auto &s) { return s[n] == 1; });
        }
        if (nonempty)
            throw InfiniteSolutionSet(
                "the degree-" + std::to_string(m) +
                " solution set is infinite (some nonzero e >= 0 has W e = 0)");
        return out;
    }

    const std::int64_t budget = linalg::dot(c, target);
    if (budget < 0)
        return out;

    ExponentVector e(n, 0);
    std::vector<std::int64_t> residual = target;
    std::function<void(std::size_t, std::int64_t)> descend =
        [&](std::size_t i, std::int64_t b) {
            const auto &w = cols[i];
            if (i + 1 == n) {
                if (b % cw[i] != 0)
                    return;
                const std::int64_t v = b / cw[i];
                for (std::size_t r = 0; r < k; ++r)
                    if (residual[r] != checked_mul(v, w[r]))
                        return;
                e[i] = v;
                out.basis.push_back(e);
                e[i] = 0;
                return;
            }
            const std::int64_t top = b / cw[i];
            for (std::int64_t v = top; v >= 0; --v) {
                for (std::size_t r = 0; r < k; ++r)
                    residual[r] = checked_sub(residual[r], checked_mul(v, w[r]));
                e[i] = v;
                descend(i + 1, b - v * cw[i]);
                for (std::size_t r = 0; r < k; ++r)
                    residual[r] += v * w[r];
            }
            e[i] = 0;
        };
    descend(0, budget);
    sort_grlex(out.basis);
    return out;
}

SemigroupBasis hilbert_basis(const IntMatrix &W,
                             std::span<const std::int64_t> chi) {
    check_character(W, chi);
    std::vector<std::int64_t> neg(chi.size());
    for (std::size_t r = 0; r < chi.size(); ++r)
        neg[r] = checked_neg(chi[r]);
    const auto sols = minimal_nonnegative_solutions(W.with_column(neg));
    const std::size_t n = W.cols();
    SemigroupBasis out;
    for (const auto &s : sols) {
        SemigroupGenerator g;
        g.exponents.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
        g.degree = s[n];
        out.not_pointed |= g.degree == 0;
        out.generators.push_back(std::move(g));
    }
    std::stable_sort(out.generators.begin(), out.generators.end(),
                     [](const SemigroupGenerator &a, const SemigroupGenerator &b) {
                         if (a.degree != b.degree)
                             return a.degree < b.degree;
                         return grlex_before(a.exponents, b.exponents);
                     });
    return out;
}

HilbertCertificate certify_hilbert_basis(const IntMatrix &W,
                                         std::span<const std::int64_t> chi,
                                         const SemigroupBasis &basis,
                                         std::int64_t degree_bound) {
    HilbertCertificate cert;
    cert.degree_bound = degree_bound;
    if (basis.not_pointed)
        return cert;
    cert.checked = true;
    const std::size_t n = W.cols();
    std::vector<std::set<ExponentVector>> reach(
        static_cast<std::size_t>(degree_bound) + 1);
    reach[0].insert(ExponentVector(n, 0));
    for (std::int64_t m = 0; m <= degree_bound; ++m) {
        auto &cur = reach[static_cast<std::size_t>(m)];
        for (const auto &g : basis.generators) {
            if (g.degree <= 0 || g.degree > m)
                continue;
            for (const auto &r : reach[static_cast<std::size_t>(m - g.degree)]) {
                ExponentVector s = r;
                for (std::size_t i = 0; i < n; ++i)
                    s[i] = checked_add(s[i], g.exponents[i]);
                cur.insert(std::move(s));
            }
        }
        const auto piece = graded_sections(W, chi, m);
        const std::set<ExponentVector> expected(piece.basis.begin(),
                                                piece.basis.end());
        if (expected != cur) {
            cert.complete = false;
            cert.failing_degree = m;
            return cert;
        }
    }
    return cert;
}

} // namespace orbistack
