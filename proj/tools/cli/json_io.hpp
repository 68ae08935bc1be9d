#pragma once

#include "orbistack/orbistack.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace orbistack::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Integers outside the exactly representable double range (|v| > 2^53 - 1)
/// are written as decimal strings.
Json integer(std::int64_t v);
Json integer(const BigInt &v);
Json int_array(const std::vector<std::int64_t> &v);
Json vectors(const std::vector<ExponentVector> &v);
/// 0-based or 1-based index list of a support.
Json support_json(Support s, std::size_t base);

/// Reader that reports the JSON path of the first offending value.
class Reader {
  public:
    Reader(const Json &doc, std::string path) : doc_(doc), path_(std::move(path)) {}

    const Json &json() const { return doc_; }
    const std::string &path() const { return path_; }

    Reader at(std::string_view key) const;
    Reader at(std::size_t index) const;
    bool has(std::string_view key) const;

    std::int64_t integer() const;
    bool boolean() const;
    std::string string() const;
    std::size_t size() const; // array length
    std::vector<std::int64_t> int_array() const;
    std::vector<ExponentVector> exponent_vectors() const;

    [[noreturn]] void fail(const std::string &message) const;

  private:
    const Json &doc_;
    std::string path_;
};

Json to_json(const EmbeddingData &d);
EmbeddingData embedding_data_from_json(const Reader &r);

Json to_json(const NCertificate &c, std::int64_t N);
NCertificate certificate_from_json(const Reader &r);

/// The `embed` output document.
Json embed_document(const EmbeddingResult &res);
EmbeddingResult embed_document_from_json(const Json &doc);

/// Accepts either an `embed` document or a bare data object.
EmbeddingData embedding_data_from_document(const Json &doc);

Json parse_json(const std::string &text);
std::string dump(const Json &doc);

Json error_json(const Error &e);

/// Parses "1,3" into integers; throws InvalidArgument naming the flag.
std::vector<std::int64_t> parse_int_list(const std::string &text, const std::string &flag);
/// Parses "1,0;0,1" into rows of equal length.
std::vector<std::vector<std::int64_t>> parse_matrix(const std::string &text);
/// Parses "1,0:1;0,1:3" into (exponents, target weight) pairs.
std::vector<TaggedSection> parse_sections(const std::string &text);

} // namespace orbistack::cli
