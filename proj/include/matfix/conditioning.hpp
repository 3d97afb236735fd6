#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "matfix/sensitivity.hpp"

namespace matfix {

enum class ConditionMode { Absolute, Relative };
enum class DataCase { Complex, Real };

[[nodiscard]] constexpr std::string_view to_string(ConditionMode m) noexcept {
    return m == ConditionMode::Absolute ? "absolute" : "relative";
}
[[nodiscard]] constexpr std::string_view to_string(DataCase c) noexcept {
    return c == DataCase::Complex ? "complex" : "real";
}

/// c(X) = (1/xi) || (rho S, eta_1 U_1, ..., eta_m U_m) ||.
///
/// Absolute mode uses xi = rho = eta_i = 1; relative mode uses xi = ||X||_F,
/// rho = ||Q||_F and eta_i = ||A_i||_F.
struct ConditionReport {
    ConditionMode mode = ConditionMode::Absolute;
    DataCase data_case = DataCase::Complex;
    double value = 0.0;
    double xi = 1.0;
    double rho = 1.0;
    std::vector<double> etas;
    RealBlockMatrix assembled;  ///< the weighted block row; its spectral norm is value * xi
};

/// Complex data. S is the real form [[Re, -Im], [Im, Re]] of L^{-1}; U_i is the
/// real form of P_i (bundle.p_real_reps).
[[nodiscard]] ConditionReport cond_complex(const EquationInstance& instance, const HermitianMatrix& x,
                                           const OperatorBundle& bundle, ConditionMode mode);

/// Real data, with T_i = A_i^T X^{-1}:
///   S_r = (I + sum T_i (x) T_i)^{-1},  U_i = S_r [I (x) T_i + (T_i (x) I) Pi].
/// Throws NotReal when any imaginary part is nonzero.
[[nodiscard]] ConditionReport cond_real(const EquationInstance& instance, const HermitianMatrix& x,
                                        ConditionMode mode);

/// Same formula on raw data; X need not be symmetric.
[[nodiscard]] ConditionReport cond_real(const GeneralInstance& instance, const ComplexMatrix& x, ConditionMode mode);

struct FdOracleSettings {
    double step = 1e-6;
    int trials = 200;
    std::uint64_t seed = 0;
    DataCase data_case = DataCase::Real;
};

/// Monte-Carlo lower estimate of c(X) from perturbed solves.
///
/// Each trial draws a direction of unit weighted Frobenius norm, solves the
/// perturbed equation at steps h and h/2, and takes 2 r(h/2) - r(h) with
/// r(h) = ||X(h) - X||_F / (xi h). Returns the maximum over trials.
[[nodiscard]] double cond_fd_oracle(const GeneralInstance& instance, const ComplexMatrix& x, ConditionMode mode,
                                    const FdOracleSettings& settings = {});
[[nodiscard]] double cond_fd_oracle(const EquationInstance& instance, const HermitianMatrix& x, ConditionMode mode,
                                    const FdOracleSettings& settings = {});

}  // namespace matfix
