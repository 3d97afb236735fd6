#include <iostream>

#include <CLI11.hpp>

#include "matfix/cli.hpp"

#ifndef MATFIX_FIXTURE_DIR
#define MATFIX_FIXTURE_DIR ""
#endif

int main(int argc, char** argv) {
    using namespace matfix;
    CLI::App app{"Fixed-point solver and certificates for X - sum A_i^* X^-1 A_i = Q"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::Options opts;
    opts.seed = cli::default_seed();
    opts.fixture_dir = MATFIX_FIXTURE_DIR;
    std::string format = "text";
    std::string mode = "relative";
    std::string data_case = "auto";
    std::string convention = "default";

    app.add_option("--tol", opts.tol, "Residual tolerance")->capture_default_str();
    app.add_option("--max-iter", opts.max_iter, "Iteration cap")->capture_default_str();
    app.add_option("--x0", opts.x0, "Start: q | identity | scale:<c> | file:<path>")->capture_default_str();
    app.add_option("--mode", mode, "Condition number mode")
        ->check(CLI::IsMember({"absolute", "relative"}))
        ->capture_default_str();
    app.add_option("--case", data_case, "Condition number data case")
        ->check(CLI::IsMember({"auto", "complex", "real"}))
        ->capture_default_str();
    app.add_flag("--allow-nonhermitian", opts.allow_nonhermitian, "Iterate on raw data without Hermitian checks");
    app.add_option("--seed", opts.seed, "Seed for random perturbations (MATFIX_SEED sets the default)")
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--l-convention", convention, "How l is taken from L: inverse-norm or reciprocal-norm")
        ->check(CLI::IsMember({"default", "inverse-norm", "reciprocal-norm"}))
        ->capture_default_str();
    app.add_option("--fixtures", opts.fixture_dir, "Directory holding reference_values.jsonc")->capture_default_str();

    std::string input;
    std::string second;
    int example = 0;

    auto* solve_cmd = app.add_subcommand("solve", "Solve and check the a priori intervals");
    solve_cmd->add_option("instance", input, "Instance file")->required();
    auto* bounds_cmd = app.add_subcommand("bounds", "Scalar bounds and solution intervals");
    bounds_cmd->add_option("instance", input, "Instance file")->required();
    auto* analyze_cmd = app.add_subcommand("analyze", "Perturbation bounds, feasibility and condition number");
    analyze_cmd->alias("perturb");
    analyze_cmd->add_option("instance", input, "Instance file")->required();
    analyze_cmd->add_option("delta", second, "Delta file")->required();
    auto* backward_cmd = app.add_subcommand("backward", "Residual certificate for an approximate solution");
    backward_cmd->add_option("instance", input, "Instance file")->required();
    backward_cmd->add_option("approx", second, "Matrix file with the approximate solution")->required();
    auto* cond_cmd = app.add_subcommand("cond", "Condition number of the solution");
    cond_cmd->add_option("instance", input, "Instance file")->required();
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate a reference problem");
    reproduce_cmd->add_option("example", example, "Problem id (1-4)")->required()->check(CLI::Range(1, 4));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : cli::InvalidInput;
    }

    opts.format = format == "structured" ? cli::OutputFormat::Structured : cli::OutputFormat::Text;
    opts.mode = mode == "absolute" ? ConditionMode::Absolute : ConditionMode::Relative;
    if (data_case != "auto") opts.data_case = data_case == "real" ? DataCase::Real : DataCase::Complex;
    if (convention != "default") {
        opts.l_convention =
            convention == "inverse-norm" ? LowerBoundConvention::InverseNorm : LowerBoundConvention::ReciprocalNorm;
    }

    cli::RunReport report;
    if (*solve_cmd) {
        report = cli::cmd_solve(input, opts);
    } else if (*bounds_cmd) {
        report = cli::cmd_bounds(input, opts);
    } else if (*analyze_cmd) {
        report = cli::cmd_analyze(input, second, opts);
    } else if (*backward_cmd) {
        report = cli::cmd_backward(input, second, opts);
    } else if (*cond_cmd) {
        report = cli::cmd_cond(input, opts);
    } else {
        report = cli::cmd_reproduce(example, opts);
    }
    std::cout << cli::render(report, opts.format);
    return report.exit_code;
}
