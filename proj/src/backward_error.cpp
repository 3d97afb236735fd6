#include "matfix/backward_error.hpp"

#include <cmath>

namespace matfix {

BackwardErrorReport backward_bound(const EquationInstance& instance, const HermitianMatrix& xt) {
    const Residual r = residual(instance, xt);  // rejects X~ that is not positive definite
    const ComplexMatrix xt_inv = inverse(xt.matrix());

    BackwardErrorReport out;
    for (const auto& ai : instance.a()) {
        const double s = spectral_norm(ComplexMatrix(xt_inv * ai));
        out.sigma += s * s;
    }
    out.residual_norm = r.norm;
    out.lambda_min = eig_extremes(xt).min;
    const double one_minus = 1.0 - out.sigma;
    out.threshold = one_minus * one_minus / (1.0 + out.sigma + 2.0 * std::sqrt(out.sigma)) * out.lambda_min;
    out.feasible = out.sigma < 1.0 && out.residual_norm < out.threshold;
    if (!out.feasible) return out;

    const double lead = one_minus * out.lambda_min + out.residual_norm;
    const double disc = lead * lead - 4.0 * out.lambda_min * out.residual_norm;
    const double theta = 2.0 * out.lambda_min / (lead + std::sqrt(disc));
    out.theta = theta;
    out.bound = theta * out.residual_norm;
    return out;
}

}  // namespace matfix
