#pragma once

#include "json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbistack::cli {

/// One parsed command line. Fields not used by the command are ignored.
struct JobSpec {
    std::string command;
    std::vector<std::int64_t> weights;
    std::optional<std::int64_t> degree;
    std::optional<std::int64_t> max_degree;
    std::optional<std::string> matrix;
    std::vector<std::int64_t> chi;
    bool chi_given = false;
    std::optional<std::string> data;   // path, or "-" for stdin
    std::string stdin_text;            // contents used for --data -
    std::optional<std::string> sections;
    std::optional<std::string> support;
    std::optional<std::int64_t> degree_bound;
    std::optional<std::string> env_degree_bound; // ORBISTACK_DEGREE_BOUND
    std::int64_t max_n = 64;
    bool pretty = false;
};

struct JobResult {
    int exit_code = 0;
    std::string output;
};

JobResult run(const JobSpec &job);

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<SelftestCheck> selftest();

/// x, y, z, w for up to four variables, x0, x1, ... otherwise.
std::string monomial_string(const ExponentVector &e);

} // namespace orbistack::cli
