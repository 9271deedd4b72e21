#pragma once

#include "spindec/decompose.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spindec {

/// One job: group, both factors, a command, and report controls. All
/// half-integers travel as exact strings ("3/2", "-1/2", "2").
struct JobSpec {
    enum class Command { decompose, mult_discrete, mult_principal, report };

    int m = 3;
    Weight sigma;
    double pi1_t = 0.0;
    Pi2 pi2;
    Command command = Command::decompose;
    HalfInt cutoff = HalfInt(5);
    std::vector<double> t_grid{0.5, 1.0, 2.0, 4.0};
    DensityVariant variant = DensityVariant::proposition;

    // mult-discrete / mult-principal query payloads
    std::optional<Weight> query_a;
    DiscreteSign query_sign = DiscreteSign::plus;
    std::optional<Weight> query_phi;
};

/// Raised on malformed job documents; the message names the field.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

JobSpec parse_job(const std::string& text);

/// Flag-level overrides applied on top of the parsed document.
struct RunOverrides {
    std::optional<HalfInt> cutoff;
    std::optional<std::vector<double>> t_grid;
    std::optional<DensityVariant> variant;
    int threads = 1;
    int max_rank = kDefaultRankCap;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 validation/parse, 1 internal consistency
    std::string document; // serialized result (or error) JSON, newline-terminated
};

/// Executes the job end to end; never throws — failures become documents
/// with the matching exit code.
RunResult run_job(const std::string& input_text, const RunOverrides& overrides = {});

} // namespace spindec
