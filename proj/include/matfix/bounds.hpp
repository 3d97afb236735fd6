#pragma once

#include <vector>

#include "matfix/solver.hpp"

namespace matfix {

/// Scalars with beta * I <= X <= alpha * I for the solution X.
struct ScalarBounds {
    double alpha = 0.0;
    double beta = 0.0;
    int iterations = 0;
    bool converged = false;

    struct Step {
        double alpha;
        double beta;
    };
    std::vector<Step> history;  ///< (alpha_n, beta_n) for n = 0..iterations
};

/// Loewner-order interval [lower, upper].
struct MatrixInterval {
    HermitianMatrix lower;
    HermitianMatrix upper;
};

/// Spectral extremes the scalar recurrences consume.
struct SpectralData {
    double q_min = 0.0;      ///< lambda_min(Q)
    double q_max = 0.0;      ///< lambda_max(Q)
    double sum_a_max = 0.0;  ///< sum lambda_max(A_i^* A_i) = sum ||A_i||^2
    double sum_a_min = 0.0;  ///< sum lambda_min(A_i^* A_i) = sum sigma_min(A_i)^2
};

[[nodiscard]] SpectralData spectral_data(const EquationInstance& instance);

/// Coupled monotone recurrences
///   beta_0 = lambda_min(Q),
///   alpha_n = lambda_max(Q) + sum lambda_max(A_i^* A_i) / beta_n,
///   beta_{n+1} = lambda_min(Q) + sum lambda_min(A_i^* A_i) / alpha_n,
/// run until |alpha_{n+1} - alpha_n| + |beta_{n+1} - beta_n| < tol * max(1, alpha).
/// Throws MaxIterationsExceeded.
[[nodiscard]] ScalarBounds scalar_bounds(const EquationInstance& instance, double tol = 1e-14,
                                         int max_iter = 10000);

/// [Q, Q + sum A_i^* Q^{-1} A_i].
[[nodiscard]] MatrixInterval coarse_interval(const EquationInstance& instance);

/// [Q + (1/alpha) sum A_i^* A_i, Q + (1/beta) sum A_i^* A_i].
[[nodiscard]] MatrixInterval refined_interval(const EquationInstance& instance, const ScalarBounds& sb);

/// [beta I, alpha I].
[[nodiscard]] MatrixInterval scalar_interval(Index order, const ScalarBounds& sb);

/// X - lower and upper - X are PSD up to -tol eigenvalue slack.
[[nodiscard]] bool membership(const HermitianMatrix& x, const MatrixInterval& interval, double tol);

/// membership with slack n * eps * ||upper||.
[[nodiscard]] bool membership(const HermitianMatrix& x, const MatrixInterval& interval);

/// inner is a subset of outer: inner.lower >= outer.lower and inner.upper <= outer.upper.
[[nodiscard]] bool nested(const MatrixInterval& inner, const MatrixInterval& outer, double tol);

}  // namespace matfix
