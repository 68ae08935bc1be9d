#include "json_io.hpp"

#include <charconv>
#include <sstream>

namespace orbistack::cli {

namespace {

constexpr std::int64_t max_safe = (std::int64_t{1} << 53) - 1;

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string &raw, const std::string &what) {
    const std::string s = trim(raw);
    std::int64_t v = 0;
    const char *first = s.data();
    if (!s.empty() && s[0] == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidArgument("cannot read integer '" + s + "' in " + what);
    return v;
}

} // namespace

Json integer(std::int64_t v) {
    if (v > max_safe || v < -max_safe)
        return std::to_string(v);
    return v;
}

Json integer(const BigInt &v) {
    if (v.fits_slong_p())
        return integer(static_cast<std::int64_t>(v.get_si()));
    return v.get_str();
}

Json int_array(const std::vector<std::int64_t> &v) {
    Json out = Json::array();
    for (auto x : v)
        out.push_back(integer(x));
    return out;
}

Json vectors(const std::vector<ExponentVector> &v) {
    Json out = Json::array();
    for (const auto &e : v)
        out.push_back(int_array(e));
    return out;
}

Json support_json(Support s, std::size_t base) {
    Json out = Json::array();
    for (auto i : s.indices())
        out.push_back(i + base);
    return out;
}

Reader Reader::at(std::string_view key) const {
    const std::string p = path_ + "." + std::string(key);
    if (!doc_.is_object())
        fail("expected an object");
    const auto it = doc_.find(std::string(key));
    if (it == doc_.end())
        throw SchemaViolation("missing field", p);
    return Reader(*it, p);
}

Reader Reader::at(std::size_t index) const {
    if (!doc_.is_array())
        fail("expected an array");
    if (index >= doc_.size())
        fail("index out of range");
    return Reader(doc_[index], path_ + "[" + std::to_string(index) + "]");
}

bool Reader::has(std::string_view key) const {
    return doc_.is_object() && doc_.contains(std::string(key));
}

std::int64_t Reader::integer() const {
    if (doc_.is_number_integer())
        return doc_.get<std::int64_t>();
    if (doc_.is_number_unsigned()) {
        const auto u = doc_.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX))
            fail("integer out of range");
        return static_cast<std::int64_t>(u);
    }
    if (doc_.is_string()) {
        try {
            return parse_int(doc_.get<std::string>(), path_);
        } catch (const InvalidArgument &) {
            fail("expected a decimal integer string");
        }
    }
    fail("expected an integer");
}

bool Reader::boolean() const {
    if (!doc_.is_boolean())
        fail("expected a boolean");
    return doc_.get<bool>();
}

std::string Reader::string() const {
    if (!doc_.is_string())
        fail("expected a string");
    return doc_.get<std::string>();
}

std::size_t Reader::size() const {
    if (!doc_.is_array())
        fail("expected an array");
    return doc_.size();
}

std::vector<std::int64_t> Reader::int_array() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        out.push_back(at(i).integer());
    return out;
}

std::vector<ExponentVector> Reader::exponent_vectors() const {
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto r = at(i);
        auto e = r.int_array();
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] < 0)
                r.at(j).fail("exponent must be nonnegative");
        out.push_back(std::move(e));
    }
    return out;
}

void Reader::fail(const std::string &message) const {
    throw SchemaViolation(message, path_);
}

Json to_json(const EmbeddingData &d) {
    Json v2 = Json::array();
    for (const auto &t : d.v2)
        v2.push_back(Json{{"exponents", int_array(t.exponents)},
                          {"e_degree", integer(t.e_degree)}});
    return Json{{"source", Json{{"weights", int_array(d.source.weights())}}},
                {"d_prime", integer(d.d_prime)},
                {"m0", integer(d.m0)},
                {"N", integer(d.N)},
                {"V1", vectors(d.v1)},
                {"V2", std::move(v2)},
                {"target_weights", int_array(d.target_weights)},
                {"coordinates", vectors(d.coordinates)}};
}

EmbeddingData embedding_data_from_json(const Reader &r) {
    EmbeddingData d;
    const auto wr = r.at("source").at("weights");
    auto weights = wr.int_array();
    if (weights.empty())
        wr.fail("weights must be nonempty");
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] < 1)
            wr.at(i).fail("weight must be positive");
    if (weights.size() > Support::max_size)
        wr.fail("too many weights");
    d.source = WeightSystem(std::move(weights));
    d.d_prime = r.at("d_prime").integer();
    d.m0 = r.at("m0").integer();
    d.N = r.at("N").integer();
    d.v1 = r.at("V1").exponent_vectors();
    const auto v2 = r.at("V2");
    for (std::size_t i = 0; i < v2.size(); ++i) {
        const auto item = v2.at(i);
        TaggedSection t;
        t.exponents = item.at("exponents").int_array();
        for (std::size_t j = 0; j < t.exponents.size(); ++j)
            if (t.exponents[j] < 0)
                item.at("exponents").at(j).fail("exponent must be nonnegative");
        t.e_degree = item.at("e_degree").integer();
        d.v2.push_back(std::move(t));
    }
    d.target_weights = r.at("target_weights").int_array();
    d.coordinates = r.at("coordinates").exponent_vectors();
    const std::size_t n = d.source.size();
    const auto check_len = [&](const Reader &arr, std::size_t i, const ExponentVector &e) {
        if (e.size() != n)
            arr.at(i).fail("expected " + std::to_string(n) + " exponents");
    };
    for (std::size_t i = 0; i < d.v1.size(); ++i)
        check_len(r.at("V1"), i, d.v1[i]);
    for (std::size_t i = 0; i < d.v2.size(); ++i)
        if (d.v2[i].exponents.size() != n)
            v2.at(i).at("exponents").fail("expected " + std::to_string(n) + " exponents");
    for (std::size_t i = 0; i < d.coordinates.size(); ++i)
        check_len(r.at("coordinates"), i, d.coordinates[i]);
    return d;
}

Json to_json(const NCertificate &c, std::int64_t N) {
    Json rejected = Json::array();
    for (const auto &s : c.rejected)
        rejected.push_back(s);
    Json assumptions = Json::array();
    for (const auto &s : c.assumptions)
        assumptions.push_back(s);
    return Json{{"descent_modulus", integer(c.descent_modulus)},
                {"first_admissible_N", integer(c.first_admissible_n)},
                {"N", integer(N)},
                {"escalated", c.escalated},
                {"normality_degrees", int_array(c.normality_degrees)},
                {"rejected", std::move(rejected)},
                {"assumptions", std::move(assumptions)}};
}

NCertificate certificate_from_json(const Reader &r) {
    NCertificate c;
    c.descent_modulus = r.at("descent_modulus").integer();
    c.first_admissible_n = r.at("first_admissible_N").integer();
    c.escalated = r.at("escalated").boolean();
    c.normality_degrees = r.at("normality_degrees").int_array();
    const auto rej = r.at("rejected");
    for (std::size_t i = 0; i < rej.size(); ++i)
        c.rejected.push_back(rej.at(i).string());
    const auto as = r.at("assumptions");
    for (std::size_t i = 0; i < as.size(); ++i)
        c.assumptions.push_back(as.at(i).string());
    return c;
}

Json embed_document(const EmbeddingResult &res) {
    return Json{{"schema", schema_version},
                {"command", "embed"},
                {"data", to_json(res.data)},
                {"certificate", to_json(res.certificate, res.data.N)}};
}

namespace {

void check_schema(const Reader &root) {
    if (!root.json().is_object())
        root.fail("expected an object");
    if (root.has("schema") && root.at("schema").integer() != schema_version)
        root.at("schema").fail("unsupported schema version");
}

} // namespace

EmbeddingResult embed_document_from_json(const Json &doc) {
    const Reader root(doc, "$");
    check_schema(root);
    EmbeddingResult res;
    res.data = embedding_data_from_json(root.at("data"));
    res.certificate = certificate_from_json(root.at("certificate"));
    if (root.at("certificate").at("N").integer() != res.data.N)
        root.at("certificate").at("N").fail("disagrees with data.N");
    return res;
}

EmbeddingData embedding_data_from_document(const Json &doc) {
    const Reader root(doc, "$");
    check_schema(root);
    if (root.has("data"))
        return embedding_data_from_json(root.at("data"));
    return embedding_data_from_json(root);
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw SchemaViolation(std::string("malformed JSON: ") + e.what(), "$");
    }
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

Json error_json(const Error &e) {
    Json witness = nullptr;
    if (const auto *c = dynamic_cast<const ChartGenerationFailed *>(&e))
        witness = Json{{"chart", int_array(c->chart)}, {"monomial", int_array(c->witness)}};
    else if (const auto *s = dynamic_cast<const StabilizerNotPreserved *>(&e)) {
        Json support = Json::array();
        for (auto i : s->support)
            support.push_back(i);
        witness = Json{{"support", std::move(support)}, {"index", s->index}};
    } else if (const auto *r = dynamic_cast<const RoundTripMismatch *>(&e))
        witness = Json{{"field", r->field}};
    else if (const auto *v = dynamic_cast<const SchemaViolation *>(&e))
        witness = Json{{"path", v->path}};
    else if (const auto *a = dynamic_cast<const VeryAmpleCertificationFailed *>(&e))
        witness = Json{{"max_N", integer(a->max_n)}};
    return Json{{"name", e.name()}, {"message", e.what()}, {"witness", std::move(witness)}};
}

std::vector<std::int64_t> parse_int_list(const std::string &text, const std::string &flag) {
    std::vector<std::int64_t> out;
    if (trim(text).empty())
        return out;
    for (const auto &part : split(text, ','))
        out.push_back(parse_int(part, flag));
    return out;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const std::string &text) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto &row : split(text, ';'))
        rows.push_back(parse_int_list(row, "--matrix"));
    for (const auto &r : rows)
        if (r.size() != rows.front().size() || r.empty())
            throw InvalidArgument("--matrix rows must be nonempty and of equal length");
    if (rows.empty())
        throw InvalidArgument("--matrix is empty");
    return rows;
}

std::vector<TaggedSection> parse_sections(const std::string &text) {
    std::vector<TaggedSection> out;
    for (const auto &item : split(text, ';')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2)
            throw InvalidArgument("--sections items must look like e0,e1,...:weight");
        out.push_back({parse_int_list(parts[0], "--sections"),
                       parse_int(parts[1], "--sections")});
    }
    return out;
}

} // namespace orbistack::cli
