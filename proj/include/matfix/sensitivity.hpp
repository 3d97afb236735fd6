#pragma once

#include <string_view>
#include <vector>

#include "matfix/solver.hpp"

namespace matfix {

/// How the scalar l standing in for ||L^{-1}||^{-1} is obtained from L_rep.
enum class LowerBoundConvention {
    /// l = sigma_min(L_rep), the exact Frobenius-induced value.
    InverseNorm,
    /// l = 1 / sigma_max(L_rep). Never larger than InverseNorm; this is the
    /// value behind the reference feasibility tables.
    ReciprocalNorm,
};

[[nodiscard]] constexpr std::string_view to_string(LowerBoundConvention c) noexcept {
    return c == LowerBoundConvention::InverseNorm ? "inverse-norm" : "reciprocal-norm";
}

/// Matrix representations of
///   L W   = W + sum B_i^* W B_i,                 B_i = X^{-1} A_i,
///   P_i Z = L^{-1}(B_i^* Z + Z^* B_i),
/// at a solution X, plus the scalar norms used by the operator-based bound.
/// Operator norms are induced by the Frobenius norm (extreme singular values
/// of the representations).
struct OperatorBundle {
    std::vector<ComplexMatrix> b;
    ComplexMatrix l_rep;                       ///< I + sum B_i^T (x) B_i^*, order n^2
    ComplexMatrix l_inv;                       ///< l_rep^{-1}
    std::vector<ComplexMatrix> p_reps;         ///< L^{-1}(I (x) B_i^* + (B_i^T (x) I) Pi); exact on real Z
    std::vector<RealBlockMatrix> p_real_reps;  ///< P_i on (Re vec Z, Im vec Z), order 2n^2
    double l = 0.0;
    std::vector<double> n_ops;     ///< ||P_i||
    std::vector<double> theta_is;  ///< ||B_i||
    double theta = 0.0;            ///< sum theta_i^2
    double zeta = 0.0;             ///< ||X^{-1}||
    LowerBoundConvention convention = LowerBoundConvention::InverseNorm;

    static constexpr std::string_view operator_norm = "frobenius-induced";

    [[nodiscard]] Index order() const noexcept { return b.empty() ? 0 : b.front().rows(); }
};

/// Throws SingularOperator when L_rep is numerically singular, NotPositiveDefinite for X.
[[nodiscard]] OperatorBundle build_bundle(const EquationInstance& instance, const HermitianMatrix& x,
                                          LowerBoundConvention convention = LowerBoundConvention::InverseNorm);

/// W + sum B_i^* W B_i, evaluated directly.
[[nodiscard]] ComplexMatrix apply_l(const OperatorBundle& bundle, const ComplexMatrix& w);

/// unvec(L_rep^{-1} vec(w)).
[[nodiscard]] ComplexMatrix apply_l_inverse(const OperatorBundle& bundle, const ComplexMatrix& w);

/// P_i Z for complex Z.
[[nodiscard]] ComplexMatrix apply_p(const OperatorBundle& bundle, std::size_t i, const ComplexMatrix& z);

}  // namespace matfix
