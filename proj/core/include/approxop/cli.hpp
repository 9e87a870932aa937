#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "approxop/analysis.hpp"
#include "approxop/experiments.hpp"
#include "approxop/policy.hpp"
#include "approxop/report.hpp"

namespace approxop {

/// A malformed invocation; maps to exit code 2.
class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Validated command-line configuration. Lists left empty fall back to the
/// experiment defaults at execution time.
struct CliConfig {
    std::string subcommand;
    std::string fn_name;
    std::string op_kind = "p";  // eval: p | jain | szasz
    std::int64_t n = 100;
    std::vector<std::int64_t> n_list;
    std::optional<double> beta;
    std::optional<BetaSchedule> schedule;
    std::optional<double> x;
    std::vector<double> x_list;
    std::vector<double> beta_list;
    std::optional<Domain> domain;
    double x_max = 100.0;
    double step = 0.0;  // 0 = per-subcommand default
    BoundInputs bound_inputs;
    double eps = TruncationPolicy{}.epsilon;
    std::uint64_t max_terms = TruncationPolicy{}.max_terms;
    std::string out_format = "csv";
    std::string out_path = "-";
    bool print_config = false;

    TruncationPolicy policy() const { return {eps, max_terms}; }

    /// Field-wise equality over the run description (print_config excluded).
    bool same_run(const CliConfig& o) const;
};

/// Parses program arguments (without argv[0]). `--config FILE` tokens are
/// expanded in place from the key=value file. Throws UsageError on malformed
/// input and HelpRequested after printing help.
CliConfig parse_args(const std::vector<std::string>& args);

class HelpRequested : public std::runtime_error {
  public:
    HelpRequested() : std::runtime_error("help requested") {}
};

/// key=value rendering of the configuration, re-readable through --config.
std::string render_config(const CliConfig& config);

/// Runs the configured experiment and returns its report.
ExperimentReport execute(const CliConfig& config);

/// Full driver: parse, run, serialize.
/// Exit codes: 0 success, 2 usage error, 3 truncation cap exhausted, 4 I/O error.
int cli_main(int argc, const char* const* argv);

}  // namespace approxop
