#pragma once

// Commands behind the matfix executable. Each returns a RunReport holding the
// structured document, a text rendering and the process exit code.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "matfix/io.hpp"

namespace matfix::cli {

using io::Json;

inline constexpr int schema_version = 1;

enum ExitCode : int {
    Ok = 0,
    InvalidInput = 1,
    NonConvergence = 2,
    ConditionViolatedOnly = 3,
};

enum class OutputFormat { Text, Structured };

struct Options {
    double tol = 1e-10;
    int max_iter = 1000;
    std::string x0 = "q";  ///< q | identity | scale:<c> | file:<path>
    ConditionMode mode = ConditionMode::Relative;
    std::optional<DataCase> data_case;  ///< defaults to real for real data
    bool allow_nonhermitian = false;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Text;
    std::optional<LowerBoundConvention> l_convention;  ///< default depends on the command
    std::filesystem::path fixture_dir;                 ///< reference values for reproduce
};

struct RunReport {
    int exit_code = Ok;
    Json document;
    std::string text;
};

/// MATFIX_SEED when set to an unsigned integer, otherwise 0.
[[nodiscard]] std::uint64_t default_seed();

/// Parses the --x0 argument. Throws Error(InvalidArgument) or a ParseError.
[[nodiscard]] StartPolicy parse_start(std::string_view spec, Index n);

[[nodiscard]] Json settings_json(const Options& options);

[[nodiscard]] RunReport cmd_solve(const std::filesystem::path& input, const Options& options);
[[nodiscard]] RunReport cmd_bounds(const std::filesystem::path& input, const Options& options);
[[nodiscard]] RunReport cmd_analyze(const std::filesystem::path& input, const std::filesystem::path& delta,
                                    const Options& options);
[[nodiscard]] RunReport cmd_backward(const std::filesystem::path& input, const std::filesystem::path& approx,
                                     const Options& options);
[[nodiscard]] RunReport cmd_cond(const std::filesystem::path& input, const Options& options);
[[nodiscard]] RunReport cmd_reproduce(int example, const Options& options);

/// The text or the structured document, depending on format.
[[nodiscard]] std::string render(const RunReport& report, OutputFormat format);

}  // namespace matfix::cli
