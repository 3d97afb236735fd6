#pragma once

#include <optional>

#include "matfix/solver.hpp"

namespace matfix {

/// Residual-based certificate for an approximate solution X~:
///   ||X~ - X|| <= theta ||R(X~)||
/// whenever Sigma = sum ||X~^{-1} A_i||^2 < 1 and
///   ||R(X~)|| < (1 - Sigma)^2 / (1 + Sigma + 2 sqrt(Sigma)) * lambda_min(X~).
struct BackwardErrorReport {
    double sigma = 0.0;
    double residual_norm = 0.0;
    double lambda_min = 0.0;
    double threshold = 0.0;
    std::optional<double> theta;  ///< present when feasible
    std::optional<double> bound;  ///< theta * ||R||, present when feasible
    bool feasible = false;
};

/// An infeasible certificate is reported with feasible = false, not thrown.
/// Throws NotPositiveDefinite when X~ is not positive definite.
[[nodiscard]] BackwardErrorReport backward_bound(const EquationInstance& instance, const HermitianMatrix& xt);

}  // namespace matfix
