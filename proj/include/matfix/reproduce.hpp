#pragma once

// Regeneration of the four reference problems as plain result structures.
// The CLI formats these; the acceptance suite checks them.

#include <cstdint>
#include <optional>
#include <vector>

#include "matfix/backward_error.hpp"
#include "matfix/bounds.hpp"
#include "matfix/conditioning.hpp"
#include "matfix/perturbation.hpp"

namespace matfix::reproduce {

struct Problem1Result {
    ScalarBounds sb;
    SolveReport solve;
    bool in_coarse = false;
    bool in_refined = false;
    bool in_scalar = false;
};

/// Scalar bounds and a solve from X0 = 1.1 I.
[[nodiscard]] Problem1Result run_problem1(double tol = 1e-10, int max_iter = 1000);

struct Problem2Column {
    int j = 0;
    std::vector<Condition> conditions;  ///< con1..con6; identical for every direction
    double true_error = 0.0;            ///< geometric mean of ||X~ - X|| / ||X||
    double xi1 = 0.0;
    double xi2 = 0.0;  ///< relative
    double xi2_absolute = 0.0;
    double xi3 = 0.0;      ///< absolute
    double nu_star = 0.0;  ///< xi3 / ||X||
    int runs = 0;
};

struct Problem2Result {
    LowerBoundConvention convention = LowerBoundConvention::ReciprocalNorm;
    double x_norm = 0.0;
    std::vector<Problem2Column> columns;
};

/// Problem 2 over `runs` random directions per j. Direction r of column j uses
/// a generator seeded from (seed, j, r).
[[nodiscard]] Problem2Result run_problem2(std::uint64_t seed,
                                          LowerBoundConvention convention = LowerBoundConvention::ReciprocalNorm,
                                          int runs = 20, const std::vector<int>& js = {4, 5, 6, 7});

/// One column for a fixed direction C = I, so ||dA_1|| = 10^-j and ||dA_2|| = 3 * 10^(-j-1) exactly.
[[nodiscard]] Problem2Column problem2_column(int j, LowerBoundConvention convention);

struct Problem3Row {
    int k = 0;
    double error = 0.0;  ///< ||X~_k - X||
    BackwardErrorReport backward;
};

struct Problem3Result {
    double reference_residual = 0.0;
    std::vector<Problem3Row> rows;
};

/// Iterates X~_k = F(X~_{k-1}) from X~_0 = A against a tightly converged X.
[[nodiscard]] Problem3Result run_problem3(int iterates = 4);

struct Problem4Row {
    int k = 0;
    GeneralSolveReport solve;              ///< Q as given
    std::optional<double> c_rel;           ///< present when the as-given solve converged
    GeneralSolveReport solve_symmetrized;  ///< Q replaced by its symmetric part
    std::optional<double> c_rel_symmetrized;
    bool substituted = false;  ///< the reported value comes from the symmetrized data

    [[nodiscard]] std::optional<double> reported() const { return substituted ? c_rel_symmetrized : c_rel; }
};

[[nodiscard]] std::vector<Problem4Row> run_problem4(double tol = 1e-10, int max_iter = 1000,
                                                    const std::vector<int>& ks = {1, 3, 5, 7, 9});

}  // namespace matfix::reproduce
