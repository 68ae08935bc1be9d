#include "orbistack/embed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orbistack {

namespace {

std::string vec_str(const std::vector<std::int64_t> &v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

// Mixed-radix enumeration of the box [0, bound)^dims.
struct Box {
    std::size_t dims = 0;
    std::int64_t bound = 1;
    std::size_t size = 1;
    std::vector<std::size_t> stride;

    Box(std::size_t d, std::int64_t b) : dims(d), bound(b), stride(d) {
        for (std::size_t t = 0; t < d; ++t) {
            stride[t] = size;
            if (size > (std::size_t{1} << 26) / static_cast<std::size_t>(b))
                throw InvalidArgument("residue box too large (weights too big)");
            size *= static_cast<std::size_t>(b);
        }
    }

    std::vector<std::int64_t> decode(std::size_t idx) const {
        std::vector<std::int64_t> f(dims);
        for (std::size_t t = 0; t < dims; ++t) {
            f[t] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(bound));
            idx /= static_cast<std::size_t>(bound);
        }
        return f;
    }

    std::size_t encode(const std::vector<std::int64_t> &f) const {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < dims; ++t)
            idx += static_cast<std::size_t>(f[t]) * stride[t];
        return idx;
    }
};

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::int64_t section_ring_generation_degree(const WeightSystem &a,
                                            std::int64_t d_prime) {
    const std::int64_t chi = d_prime;
    return hilbert_basis(a.matrix(), std::span(&chi, 1)).max_degree();
}

bool pushforward_globally_generated(const WeightSystem &a, std::int64_t k) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        // Local sections on D_+(x_i) are x^u with u_j >= 0 (j != i), u_i ∈ Z,
        // a·u = k. They are generated by global ones iff every residue class
        // of off-chart exponents in [0, a_i)^{n-1} dominates a global
        // monomial of degree k.
        const std::int64_t ai = a[i];
        std::vector<std::int64_t> off;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                off.push_back(a[j]);
        const Box box(off.size(), ai);
        for (std::size_t idx = 0; idx < box.size; ++idx) {
            const auto f = box.decode(idx);
            std::int64_t s = 0;
            for (std::size_t t = 0; t < f.size(); ++t)
                s += off[t] * f[t];
            if (mod(k - s, ai) != 0)
                continue;
            // look for g <= f with a_off·g <= k and a_off·g ≡ k (mod a_i)
            bool found = false;
            const Box sub(off.size(), ai);
            for (std::size_t gi = 0; gi < sub.size && !found; ++gi) {
                const auto g = sub.decode(gi);
                bool le = true;
                std::int64_t gs = 0;
                for (std::size_t t = 0; t < g.size() && le; ++t) {
                    le = g[t] <= f[t];
                    gs += off[t] * g[t];
                }
                found = le && gs <= k && mod(k - gs, ai) == 0;
            }
            if (!found)
                return false;
        }
    }
    return true;
}

bool section_polytope_normal(const WeightSystem &a, std::int64_t deg,
                             std::int64_t max_j) {
    const auto base = section_basis(a, deg).basis;
    std::set<ExponentVector> sums(base.begin(), base.end());
    for (std::int64_t j = 2; j <= max_j; ++j) {
        std::set<ExponentVector> next;
        for (const auto &s : sums)
            for (const auto &b : base) {
                ExponentVector t = s;
                for (std::size_t i = 0; i < t.size(); ++i)
                    t[i] = checked_add(t[i], b[i]);
                next.insert(std::move(t));
            }
        sums = std::move(next);
        if (sums.size() != section_basis(a, checked_mul(j, deg)).basis.size())
            return false;
    }
    return true;
}

EmbeddingResult find_embedding(const WeightSystem &a, std::int64_t d_prime,
                               const EmbeddingOptions &options) {
    if (!is_det_ample(a, LineBundle{d_prime})) {
        std::string why = d_prime <= 0 ? "degree is not positive" : "";
        if (const auto f = is_faithful(a, LineBundle{d_prime}); !f.faithful)
            why = "not faithful on the stratum of x_" +
                  std::to_string(f.witness->support.indices().front());
        throw NotDetAmple("O(" + std::to_string(d_prime) + ") is not det-ample: " + why);
    }
    EmbeddingResult out;
    auto &cert = out.certificate;
    const std::int64_t L = descent_modulus(a);
    cert.descent_modulus = L;
    cert.first_admissible_n = L / gcd64(L, d_prime);
    const std::int64_t m0 = section_ring_generation_degree(a, d_prime);
    const auto dim = static_cast<std::int64_t>(a.size()) - 1;
    for (std::int64_t j = 2; j <= dim - 1; ++j)
        cert.normality_degrees.push_back(j);
    cert.assumptions.push_back(
        "higher cohomology of the twisted pushforwards vanishes (nef line "
        "bundles on the toric coarse space)");

    std::int64_t chosen = 0;
    for (std::int64_t N = cert.first_admissible_n; N <= options.max_n;
         N += cert.first_admissible_n) {
        const std::int64_t deg = checked_mul(N, d_prime);
        if (!section_polytope_normal(a, deg, dim - 1)) {
            cert.rejected.push_back("N=" + std::to_string(N) + ": normality");
            continue;
        }
        bool generated = true;
        for (std::int64_t m = 1; m <= m0 && generated; ++m)
            generated = pushforward_globally_generated(a, checked_mul(m + N, d_prime));
        if (!generated) {
            cert.rejected.push_back("N=" + std::to_string(N) + ": global generation");
            continue;
        }
        chosen = N;
        break;
    }
    if (chosen == 0)
        throw VeryAmpleCertificationFailed(
            "no N <= " + std::to_string(options.max_n) +
                " passed the very-ampleness and global-generation tests",
            options.max_n);
    cert.escalated = chosen != cert.first_admissible_n;

    auto &data = out.data;
    data.source = a;
    data.d_prime = d_prime;
    data.m0 = m0;
    data.N = chosen;
    data.v1 = section_basis(a, checked_mul(chosen, d_prime)).basis;
    for (const auto &v : data.v1) {
        data.coordinates.push_back(v);
        data.target_weights.push_back(chosen);
    }
    for (std::int64_t m = 1; m <= m0; ++m) {
        const std::int64_t e = m + chosen;
        for (auto &v : section_basis(a, checked_mul(e, d_prime)).basis) {
            data.coordinates.push_back(v);
            data.target_weights.push_back(e);
            data.v2.push_back({std::move(v), e});
        }
    }
    return out;
}

std::int64_t default_chart_bound(const EmbeddingData &data) {
    std::int64_t top = 0;
    for (const auto &v : data.v2)
        top = std::max(top, v.e_degree);
    for (auto w : data.target_weights)
        top = std::max(top, w);
    return 2 * top;
}

void validate(const EmbeddingData &data) {
    const auto &a = data.source;
    const std::size_t n = a.size();
    const auto bad = [](const std::string &msg) { throw InvalidEmbeddingData(msg); };
    if (data.d_prime < 1)
        bad("d_prime must be positive");
    if (data.N < 1 || data.m0 < 1)
        bad("N and m0 must be positive");
    if (data.v1.empty())
        bad("V1 is empty");
    const auto check_vec = [&](const ExponentVector &e) {
        if (e.size() != n)
            bad("exponent vector " + vec_str(e) + " has the wrong length");
        for (auto v : e)
            if (v < 0)
                bad("exponent vector " + vec_str(e) + " has a negative entry");
    };
    for (const auto &e : data.v1)
        check_vec(e);
    for (const auto &t : data.v2)
        check_vec(t.exponents);
    if (data.coordinates.size() != data.v1.size() + data.v2.size() ||
        data.target_weights.size() != data.coordinates.size())
        bad("coordinates and target weights must list V1 followed by V2");
    for (std::size_t i = 0; i < data.v1.size(); ++i) {
        if (data.coordinates[i] != data.v1[i])
            bad("coordinate " + std::to_string(i) + " differs from V1");
        if (data.target_weights[i] != data.target_weights[0])
            bad("V1 block has more than one target weight");
    }
    for (std::size_t i = 0; i < data.v2.size(); ++i) {
        const std::size_t c = data.v1.size() + i;
        if (data.coordinates[c] != data.v2[i].exponents)
            bad("coordinate " + std::to_string(c) + " differs from V2");
        if (data.target_weights[c] != data.v2[i].e_degree)
            bad("target weight of coordinate " + std::to_string(c) +
                " differs from its V2 tag");
    }
    for (std::size_t c = 0; c < data.coordinates.size(); ++c) {
        if (data.target_weights[c] < 1)
            bad("target weights must be positive");
        if (weighted_degree(a.weights(), data.coordinates[c]) !=
            checked_mul(data.target_weights[c], data.d_prime))
            bad("coordinate " + std::to_string(c) +
                " is not a section of E^" + std::to_string(data.target_weights[c]));
    }
}

namespace {

ChartCheck check_chart(const EmbeddingData &data, const ExponentVector &s,
                       std::int64_t alpha_s, std::int64_t bound) {
    const auto &a = data.source;
    const std::size_t n = a.size();
    ChartCheck out;
    out.chart = s;

    const Support supp = support_of(s);
    std::vector<std::size_t> on, off;
    std::int64_t g = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (supp.contains(j)) {
            on.push_back(j);
            g = gcd64(g, a[j]);
        } else {
            off.push_back(j);
        }
    }
    // On D(s) the variables in supp(s) are inverted, so a section monomial
    // u of E-degree m is determined up to degree-0 units by its off-support
    // exponents, and only their residues modulo g matter.
    const Box box(off.size(), g);

    std::set<std::pair<std::int64_t, std::size_t>> moves;
    for (const auto &v : data.v2) {
        const std::int64_t delta = v.e_degree - alpha_s;
        if (delta < 1 || delta > bound)
            continue;
        std::vector<std::int64_t> p(off.size());
        bool inside = true;
        for (std::size_t t = 0; t < off.size() && inside; ++t) {
            p[t] = v.exponents[off[t]];
            inside = p[t] < g;
        }
        if (inside)
            moves.emplace(delta, box.encode(p));
    }

    std::vector<std::vector<std::int64_t>> coords(box.size);
    std::vector<std::int64_t> off_degree(box.size);
    for (std::size_t idx = 0; idx < box.size; ++idx) {
        coords[idx] = box.decode(idx);
        std::int64_t sdeg = 0;
        for (std::size_t t = 0; t < off.size(); ++t)
            sdeg += a[off[t]] * coords[idx][t];
        off_degree[idx] = sdeg;
    }

    std::vector<std::vector<char>> reach(static_cast<std::size_t>(bound) + 1,
                                         std::vector<char>(box.size, 0));
    reach[0][0] = 1;
    for (std::int64_t delta = 1; delta <= bound; ++delta) {
        auto &cur = reach[static_cast<std::size_t>(delta)];
        for (const auto &[dv, pv] : moves) {
            if (dv > delta)
                continue;
            const auto &prev = reach[static_cast<std::size_t>(delta - dv)];
            const auto &pc = coords[pv];
            for (std::size_t q = 0; q < box.size; ++q) {
                if (!prev[q])
                    continue;
                bool fits = true;
                for (std::size_t t = 0; t < off.size() && fits; ++t)
                    fits = coords[q][t] + pc[t] < g;
                if (fits)
                    cur[q + pv] = 1;
            }
        }
        // a target f is covered when some reachable p satisfies p <= f
        std::vector<char> covered = cur;
        for (std::size_t t = 0; t < off.size(); ++t)
            for (std::size_t idx = 0; idx < box.size; ++idx)
                if (coords[idx][t] > 0 && covered[idx - box.stride[t]])
                    covered[idx] = 1;
        const std::int64_t target = checked_mul(delta, data.d_prime);
        for (std::size_t idx = 0; idx < box.size; ++idx) {
            if (mod(target - off_degree[idx], g) != 0 || covered[idx])
                continue;
            out.passed = false;
            out.failing_degree = delta;
            // realise the missing class as a section of E^{delta + alpha_s}
            std::vector<std::int64_t> on_weights;
            for (auto j : on)
                on_weights.push_back(a[j]);
            const std::int64_t s_deg = checked_mul(alpha_s, data.d_prime);
            for (std::int64_t t = 1; t <= 4096 && !out.witness; ++t) {
                const std::int64_t rest =
                    target - off_degree[idx] + checked_mul(t, s_deg);
                if (on.empty()) {
                    if (rest == 0)
                        out.witness = ExponentVector(n, 0);
                    break;
                }
                const auto sols = section_basis(WeightSystem(on_weights), rest).basis;
                if (sols.empty())
                    continue;
                ExponentVector w(n, 0);
                for (std::size_t t2 = 0; t2 < off.size(); ++t2)
                    w[off[t2]] = coords[idx][t2];
                for (std::size_t t2 = 0; t2 < on.size(); ++t2)
                    w[on[t2]] = sols.front()[t2];
                out.witness = std::move(w);
            }
            return out;
        }
    }
    return out;
}

StratumCheck check_stratum(const EmbeddingData &data, Support S) {
    StratumCheck out;
    out.support = S;
    const auto idx = S.indices();
    const std::size_t r = idx.size();
    // Characters of the stratum torus modulo G_m: {(e, k) : a_S·e = d′ k}.
    // The map is an immersion on the stratum iff the coordinates nonvanishing
    // there, read as (c|_S, α_c), generate this whole lattice.
    std::set<linalg::IntVector> rows;
    for (std::size_t c = 0; c < data.coordinates.size(); ++c) {
        const auto &e = data.coordinates[c];
        if (!support_of(e).subset_of(S))
            continue;
        linalg::IntVector row(r + 1);
        for (std::size_t t = 0; t < r; ++t)
            row[t] = e[idx[t]];
        row[r] = data.target_weights[c];
        rows.insert(std::move(row));
    }
    linalg::IntRows basis;
    linalg::IntRows pending;
    const auto settle = [&]() {
        basis.insert(basis.end(), pending.begin(), pending.end());
        pending.clear();
        basis = linalg::lattice_basis(basis, r + 1);
        const auto li = linalg::lattice_index(basis, r + 1);
        out.rank = li.rank;
        out.index = li.rank == r ? li.index : BigInt(0);
        return li.rank == r && li.index == 1;
    };
    bool done = false;
    for (const auto &row : rows) {
        pending.push_back(row);
        if (pending.size() == 16 && (done = settle()))
            break;
    }
    if (!done)
        done = settle();
    out.passed = done;
    return out;
}

} // namespace

ImmersionReport verify_immersion(const EmbeddingData &data,
                                 std::optional<std::int64_t> degree_bound) {
    validate(data);
    ImmersionReport report;
    report.degree_bound = degree_bound.value_or(default_chart_bound(data));
    if (report.degree_bound < 1)
        throw InvalidArgument("chart degree bound must be positive");

    std::map<std::uint64_t, ChartCheck> by_support;
    for (std::size_t i = 0; i < data.v1.size(); ++i) {
        const auto &s = data.v1[i];
        const auto key = support_of(s).bits();
        auto it = by_support.find(key);
        ChartCheck c;
        if (it == by_support.end()) {
            c = check_chart(data, s, data.target_weights[i], report.degree_bound);
            by_support.emplace(key, c);
        } else {
            c = it->second;
            c.chart = s;
            if (!c.passed) // recompute the witness relative to this s
                c = check_chart(data, s, data.target_weights[i], report.degree_bound);
        }
        report.passed &= c.passed;
        report.charts.push_back(std::move(c));
    }
    for (const auto &st : strata(data.source)) {
        auto c = check_stratum(data, st.support);
        report.passed &= c.passed;
        report.strata.push_back(std::move(c));
    }
    return report;
}

void ImmersionReport::ensure() const {
    for (const auto &c : charts)
        if (!c.passed)
            throw ChartGenerationFailed(
                "chart D(" + vec_str(c.chart) + ") is not generated by V2 in E-degree " +
                    std::to_string(c.failing_degree) + "; missing " +
                    (c.witness ? vec_str(*c.witness) : std::string("?")),
                c.chart, c.witness.value_or(ExponentVector{}));
    for (const auto &s : strata)
        if (!s.passed)
            throw StabilizerNotPreserved(
                "stratum " + vec_str([&] {
                    std::vector<std::int64_t> v;
                    for (auto i : s.support.indices())
                        v.push_back(static_cast<std::int64_t>(i));
                    return v;
                }()) + " maps with lattice index " + s.index.get_str(),
                s.support.indices(), s.index.get_str());
}

RecoveryReport recover_data(const EmbeddingData &data) {
    RecoveryReport report;
    auto &rec = report.recovered;
    const auto fail = [&](const char *field) {
        report.passed = false;
        report.mismatch = field;
        return report;
    };
    if (data.coordinates.empty() ||
        data.coordinates.size() != data.target_weights.size())
        return fail("coordinates");

    // E is the pullback of O(1): every coordinate of weight α pulls back to
    // a section of degree α·d′.
    std::int64_t d = 0;
    for (std::size_t c = 0; c < data.coordinates.size(); ++c) {
        const std::int64_t alpha = data.target_weights[c];
        const std::int64_t deg =
            weighted_degree(data.source.weights(), data.coordinates[c]);
        if (alpha <= 0 || deg % alpha != 0)
            return fail("d_prime");
        if (d == 0)
            d = deg / alpha;
        else if (deg / alpha != d)
            return fail("d_prime");
    }
    rec.d_prime = d;
    // V1 is the block pulled back from P(V1): the coordinates of least weight.
    rec.N = *std::min_element(data.target_weights.begin(), data.target_weights.end());
    const std::int64_t top =
        *std::max_element(data.target_weights.begin(), data.target_weights.end());
    rec.m0 = top - rec.N;
    for (std::size_t c = 0; c < data.coordinates.size(); ++c) {
        if (data.target_weights[c] == rec.N)
            rec.v1.push_back(data.coordinates[c]);
        else
            rec.v2.push_back({data.coordinates[c], data.target_weights[c]});
    }

    if (rec.d_prime != data.d_prime)
        return fail("d_prime");
    if (rec.N != data.N)
        return fail("N");
    if (rec.m0 != data.m0)
        return fail("m0");
    if (rec.v1 != data.v1)
        return fail("V1");
    if (rec.v2 != data.v2)
        return fail("V2");
    return report;
}

void RecoveryReport::ensure() const {
    if (!passed)
        throw RoundTripMismatch("recovered " + mismatch.value_or("?") +
                                    " differs from the stored value",
                                mismatch.value_or("?"));
}

MorphismReport morphism_from_sections(const WeightSystem &a, std::int64_t d_prime,
                                      const std::vector<TaggedSection> &sections) {
    MorphismReport report;
    for (const auto &s : sections) {
        if (s.exponents.size() != a.size())
            throw InvalidArgument("section " + vec_str(s.exponents) +
                                  " has the wrong number of exponents");
        for (auto v : s.exponents)
            if (v < 0)
                throw InvalidArgument("section " + vec_str(s.exponents) +
                                      " has a negative exponent");
        if (weighted_degree(a.weights(), s.exponents) != checked_mul(s.e_degree, d_prime))
            report.well_defined = false;
        if (s.e_degree < 0)
            report.polynomial_target = false;
    }
    const std::int64_t chi = 1;
    for (const auto &st : strata(a)) {
        std::vector<std::vector<std::int64_t>> image;
        for (const auto &s : sections)
            if (support_of(s.exponents).subset_of(st.support))
                image.push_back({s.e_degree});
        if (image.empty())
            report.base_locus.push_back(st.support);
        if (!is_stable_columns(image, std::span(&chi, 1)).stable)
            report.lands_in_stable = false;
    }
    return report;
}

} // namespace orbistack
