#include "commands.hpp"

#include <fstream>
#include <sstream>

namespace orbistack::cli {

namespace {

struct Bound {
    std::int64_t value;
    std::string source; // "flag", "ORBISTACK_DEGREE_BOUND" or "default"
};

Bound resolve_bound(const JobSpec &job, std::int64_t fallback) {
    if (job.degree_bound) {
        if (*job.degree_bound < 1)
            throw InvalidArgument("--degree-bound must be positive");
        return {*job.degree_bound, "flag"};
    }
    if (job.env_degree_bound && !job.env_degree_bound->empty()) {
        const auto v = parse_int_list(*job.env_degree_bound, "ORBISTACK_DEGREE_BOUND");
        if (v.size() != 1 || v[0] < 1)
            throw InvalidArgument("ORBISTACK_DEGREE_BOUND must be a positive integer");
        return {v[0], "ORBISTACK_DEGREE_BOUND"};
    }
    return {fallback, "default"};
}

std::int64_t require(const std::optional<std::int64_t> &v, const char *flag) {
    if (!v)
        throw InvalidArgument(std::string(flag) + " is required");
    return *v;
}

WeightSystem weights_of(const JobSpec &job) {
    if (job.weights.empty())
        throw InvalidArgument("--weights is required");
    for (std::size_t i = 0; i < job.weights.size(); ++i)
        if (job.weights[i] < 1)
            throw InvalidArgument("--weights[" + std::to_string(i) + "] must be positive");
    if (job.weights.size() > Support::max_size)
        throw InvalidArgument("at most 62 weights are supported");
    return WeightSystem(job.weights);
}

CharacterAction action_of(const JobSpec &job) {
    if (!job.matrix)
        throw InvalidArgument("--matrix is required");
    auto rows = parse_matrix(*job.matrix);
    if (!job.chi_given)
        throw InvalidArgument("--chi is required");
    if (job.chi.size() != rows.size())
        throw InvalidArgument("--chi must have one entry per row of --matrix");
    return CharacterAction(IntMatrix::from_rows(std::move(rows)), job.chi);
}

std::string read_data(const JobSpec &job) {
    if (!job.data)
        throw InvalidArgument("--data is required");
    if (*job.data == "-")
        return job.stdin_text;
    std::ifstream in(*job.data);
    if (!in)
        throw InvalidArgument("cannot open " + *job.data);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json header(const std::string &command) {
    return Json{{"schema", schema_version}, {"command", command}};
}

Json cmd_sections(const JobSpec &job, std::string &pretty) {
    const auto a = weights_of(job);
    const auto d = require(job.degree, "--degree");
    const auto basis = section_basis(a, d).basis;
    for (const auto &e : basis)
        pretty += monomial_string(e) + "\n";
    Json out = header("sections");
    out["weights"] = int_array(a.weights());
    out["degree"] = integer(d);
    out["sections"] = vectors(basis);
    return out;
}

Json cmd_hilbert_series(const JobSpec &job) {
    const auto a = weights_of(job);
    const auto D = require(job.max_degree, "--max-degree");
    if (D < 0)
        throw InvalidArgument("--max-degree must be nonnegative");
    Json out = header("hilbert-series");
    out["weights"] = int_array(a.weights());
    out["max_degree"] = integer(D);
    out["dimensions"] = int_array(hilbert_series(a, D));
    return out;
}

Json cmd_ample_check(const JobSpec &job) {
    const auto a = weights_of(job);
    const LineBundle L{require(job.degree, "--degree")};
    const auto f = is_faithful(a, L);
    Json out = header("ample-check");
    out["weights"] = int_array(a.weights());
    out["degree"] = integer(L.degree);
    out["faithful"] = f.faithful;
    out["witness"] = f.witness ? Json{{"support", support_json(f.witness->support, 0)},
                                      {"stabilizer_order", integer(f.witness->stabilizer_order)}}
                               : Json(nullptr);
    out["det_ample"] = is_det_ample(a, L);
    out["h_ample"] = is_h_ample(a, L);
    out["descent_modulus"] = integer(descent_modulus(a));
    return out;
}

std::string pretty_map(const EmbeddingData &d) {
    const std::size_t n = d.source.size();
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e(n, 0);
        e[i] = 1;
        s += (i ? ":" : "") + monomial_string(e);
    }
    s += "] -> [";
    for (std::size_t c = 0; c < d.coordinates.size(); ++c)
        s += (c ? ":" : "") + monomial_string(d.coordinates[c]);
    s += "] in P(";
    for (std::size_t c = 0; c < d.target_weights.size(); ++c)
        s += (c ? "," : "") + std::to_string(d.target_weights[c]);
    return s + ")\n";
}

Json cmd_embed(const JobSpec &job, std::string &pretty) {
    const auto a = weights_of(job);
    EmbeddingOptions opts;
    opts.max_n = job.max_n;
    const auto res = find_embedding(a, require(job.degree, "--degree"), opts);
    pretty = "m0 = " + std::to_string(res.data.m0) + ", N = " + std::to_string(res.data.N) +
             "\n" + pretty_map(res.data);
    return embed_document(res);
}

Json immersion_json(const ImmersionReport &r, const Bound &bound) {
    Json charts = Json::array();
    for (const auto &c : r.charts) {
        Json item{{"chart", int_array(c.chart)}, {"passed", c.passed}};
        if (!c.passed) {
            item["failing_degree"] = integer(c.failing_degree);
            item["witness"] = c.witness ? int_array(*c.witness) : Json(nullptr);
        }
        charts.push_back(std::move(item));
    }
    Json strata = Json::array();
    for (const auto &s : r.strata)
        strata.push_back(Json{{"support", support_json(s.support, 0)},
                              {"rank", s.rank},
                              {"index", integer(s.index)},
                              {"passed", s.passed}});
    return Json{{"passed", r.passed},
                {"degree_bound", integer(bound.value)},
                {"degree_bound_source", bound.source},
                {"charts", std::move(charts)},
                {"strata", std::move(strata)}};
}

Json cmd_verify(const JobSpec &job, Json &report) {
    const auto data = embedding_data_from_document(parse_json(read_data(job)));
    validate(data);
    const auto bound = resolve_bound(job, default_chart_bound(data));
    const auto r = verify_immersion(data, bound.value);
    report = immersion_json(r, bound);
    r.ensure();
    Json out = header("verify");
    out["report"] = report;
    return out;
}

Json cmd_recover(const JobSpec &job) {
    const auto data = embedding_data_from_document(parse_json(read_data(job)));
    const auto r = recover_data(data);
    r.ensure();
    Json v2 = Json::array();
    for (const auto &t : r.recovered.v2)
        v2.push_back(Json{{"exponents", int_array(t.exponents)}, {"e_degree", integer(t.e_degree)}});
    Json out = header("recover");
    out["recovered"] = Json{{"d_prime", integer(r.recovered.d_prime)},
                            {"N", integer(r.recovered.N)},
                            {"m0", integer(r.recovered.m0)},
                            {"V1", vectors(r.recovered.v1)},
                            {"V2", std::move(v2)}};
    out["passed"] = r.passed;
    return out;
}

Json certificate_json(const StabilityCertificate &c) {
    return Json{{"stable", c.stable},
                {"reason", to_string(c.reason)},
                {"witness", c.witness ? int_array(*c.witness) : Json(nullptr)}};
}

Json cmd_stable_locus(const JobSpec &job) {
    const auto act = action_of(job);
    Json out = header("stable-locus");
    out["matrix"] = Json::array();
    for (const auto &row : act.weights().row_list())
        out["matrix"].push_back(int_array(row));
    out["chi"] = int_array(act.chi());
    if (job.support) {
        std::vector<std::size_t> idx;
        for (auto i : parse_int_list(*job.support, "--support")) {
            if (i < 1 || static_cast<std::size_t>(i) > act.dimension())
                throw InvalidArgument("--support indices are 1-based coordinates");
            idx.push_back(static_cast<std::size_t>(i - 1));
        }
        out["support"] = support_json(Support::of(idx), 1);
        out["certificate"] = certificate_json(is_stable_support(act, Support::of(idx)));
        return out;
    }
    if (act.dimension() > max_sweep_dimension)
        throw InvalidArgument("stable-locus sweeps at most " +
                              std::to_string(max_sweep_dimension) + " coordinates");
    const auto locus = stable_locus(act);
    Json minimal = Json::array();
    for (auto s : locus.minimal_supports())
        minimal.push_back(support_json(s, 1));
    out["minimal_supports"] = std::move(minimal);
    return out;
}

Json cmd_proj(const JobSpec &job, std::string &pretty) {
    const auto act = action_of(job);
    // the default bound depends on the basis, so compute once without it
    auto pres = proj_presentation(act);
    const auto bound = resolve_bound(job, pres.certificate.degree_bound);
    if (bound.source != "default")
        pres = proj_presentation(act, bound.value);
    Json gens = Json::array();
    for (const auto &c : pres.charts) {
        gens.push_back(Json{{"exponents", int_array(c.generator.exponents)},
                            {"degree", integer(c.generator.degree)},
                            {"chart_stable", c.chart_stable}});
        pretty += monomial_string(c.generator.exponents) + "  degree " +
                  std::to_string(c.generator.degree) +
                  (c.chart_stable ? "  stable chart" : "") + "\n";
    }
    Json out = header("proj");
    out["generators"] = std::move(gens);
    out["not_pointed"] = pres.basis.not_pointed;
    out["certificate"] = Json{{"checked", pres.certificate.checked},
                              {"complete", pres.certificate.complete},
                              {"degree_bound", integer(pres.certificate.degree_bound)},
                              {"degree_bound_source", bound.source},
                              {"failing_degree", pres.certificate.failing_degree
                                                     ? integer(*pres.certificate.failing_degree)
                                                     : Json(nullptr)}};
    return out;
}

Json cmd_morphism_check(const JobSpec &job) {
    const auto a = weights_of(job);
    const auto d = require(job.degree, "--degree");
    if (!job.sections)
        throw InvalidArgument("--sections is required");
    const auto sections = parse_sections(*job.sections);
    const auto r = morphism_from_sections(a, d, sections);
    Json base = Json::array();
    for (auto s : r.base_locus)
        base.push_back(support_json(s, 0));
    Json out = header("morphism-check");
    out["well_defined"] = r.well_defined;
    out["polynomial_target"] = r.polynomial_target;
    out["base_locus"] = std::move(base);
    out["lands_in_stable"] = r.lands_in_stable;
    return out;
}

Json cmd_selftest(std::string &pretty, bool &passed) {
    Json checks = Json::array();
    passed = true;
    for (const auto &c : selftest()) {
        passed &= c.passed;
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        pretty += (c.passed ? "pass  " : "FAIL  ") + c.name +
                  (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
    }
    Json out = header("selftest");
    out["passed"] = passed;
    out["checks"] = std::move(checks);
    return out;
}

} // namespace

std::string monomial_string(const ExponentVector &e) {
    static const char *short_names[] = {"x", "y", "z", "w"};
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += e.size() <= 4 ? short_names[i] : "x" + std::to_string(i);
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

JobResult run(const JobSpec &job) {
    JobResult res;
    std::string pretty;
    Json report;
    try {
        Json out;
        const auto &c = job.command;
        if (c == "sections")
            out = cmd_sections(job, pretty);
        else if (c == "hilbert-series")
            out = cmd_hilbert_series(job);
        else if (c == "ample-check")
            out = cmd_ample_check(job);
        else if (c == "embed")
            out = cmd_embed(job, pretty);
        else if (c == "verify")
            out = cmd_verify(job, report);
        else if (c == "recover")
            out = cmd_recover(job);
        else if (c == "stable-locus")
            out = cmd_stable_locus(job);
        else if (c == "proj")
            out = cmd_proj(job, pretty);
        else if (c == "morphism-check")
            out = cmd_morphism_check(job);
        else if (c == "selftest") {
            bool passed = true;
            out = cmd_selftest(pretty, passed);
            res.exit_code = passed ? 0 : 1;
        } else
            throw InvalidArgument("unknown command '" + c + "'");
        res.output = job.pretty && !pretty.empty() ? pretty : dump(out);
    } catch (const Error &e) {
        Json out = header(job.command);
        out["error"] = error_json(e);
        if (!report.is_null())
            out["report"] = report;
        res.exit_code = e.is_input_error() ? 2 : 1;
        res.output = dump(out);
    } catch (const std::exception &e) {
        Json out = header(job.command);
        out["error"] = Json{{"name", "InternalError"}, {"message", e.what()}, {"witness", nullptr}};
        res.exit_code = 1;
        res.output = dump(out);
    }
    return res;
}

} // namespace orbistack::cli
