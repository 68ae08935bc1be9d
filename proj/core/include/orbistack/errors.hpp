#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbistack {

/// Base of every error raised by the library. `name()` is the stable,
/// machine-readable identifier that the CLI puts in its error objects.
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string &message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string &name() const noexcept { return name_; }

    /// Domain errors exit with status 1, malformed input with status 2.
    virtual bool is_input_error() const noexcept { return false; }

  private:
    std::string name_;
};

class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string &message)
        : Error("InvalidArgument", message) {}
    bool is_input_error() const noexcept override { return true; }
};

class ArithmeticOverflow : public Error {
  public:
    explicit ArithmeticOverflow(const std::string &message)
        : Error("ArithmeticOverflow", message) {}
};

class InfiniteSolutionSet : public Error {
  public:
    explicit InfiniteSolutionSet(const std::string &message)
        : Error("InfiniteSolutionSet", message) {}
};

class NotPolynomial : public Error {
  public:
    explicit NotPolynomial(const std::string &message)
        : Error("NotPolynomial", message) {}
};

class NotDetAmple : public Error {
  public:
    explicit NotDetAmple(const std::string &message)
        : Error("NotDetAmple", message) {}
};

class VeryAmpleCertificationFailed : public Error {
  public:
    VeryAmpleCertificationFailed(const std::string &message, std::int64_t max_n)
        : Error("VeryAmpleCertificationFailed", message), max_n(max_n) {}
    std::int64_t max_n;
};

class InvalidEmbeddingData : public Error {
  public:
    explicit InvalidEmbeddingData(const std::string &message)
        : Error("InvalidEmbeddingData", message) {}
};

class ChartGenerationFailed : public Error {
  public:
    ChartGenerationFailed(const std::string &message,
                          std::vector<std::int64_t> chart,
                          std::vector<std::int64_t> witness)
        : Error("ChartGenerationFailed", message), chart(std::move(chart)),
          witness(std::move(witness)) {}
    std::vector<std::int64_t> chart;
    std::vector<std::int64_t> witness;
};

class StabilizerNotPreserved : public Error {
  public:
    StabilizerNotPreserved(const std::string &message,
                           std::vector<std::size_t> support,
                           std::string index)
        : Error("StabilizerNotPreserved", message),
          support(std::move(support)), index(std::move(index)) {}
    std::vector<std::size_t> support;
    std::string index; // decimal, "0" when the image has deficient rank
};

class RoundTripMismatch : public Error {
  public:
    RoundTripMismatch(const std::string &message, std::string field)
        : Error("RoundTripMismatch", message), field(std::move(field)) {}
    std::string field;
};

class SchemaViolation : public Error {
  public:
    SchemaViolation(const std::string &message, std::string path)
        : Error("SchemaViolation", message + " at " + path),
          path(std::move(path)) {}
    bool is_input_error() const noexcept override { return true; }
    std::string path;
};

} // namespace orbistack
