#include "matfix/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace matfix {
namespace {

HermitianMatrix gram_sum(const EquationInstance& instance) {
    ComplexMatrix sum = ComplexMatrix::Zero(instance.order(), instance.order());
    for (const auto& ai : instance.a()) sum.noalias() += ai.adjoint() * ai;
    return hermitian_part(sum);
}

bool psd_within(const HermitianMatrix& h, double tol) { return eig_extremes(h).min >= -tol; }

}  // namespace

SpectralData spectral_data(const EquationInstance& instance) {
    const auto q = eig_extremes(instance.q());
    SpectralData d{q.min, q.max, 0.0, 0.0};
    for (const auto& ai : instance.a()) {
        const double smax = spectral_norm(ai);
        const double smin = min_singular_value(ai);
        d.sum_a_max += smax * smax;
        d.sum_a_min += smin * smin;
    }
    return d;
}

ScalarBounds scalar_bounds(const EquationInstance& instance, double tol, int max_iter) {
    const SpectralData d = spectral_data(instance);

    ScalarBounds sb;
    double beta = d.q_min;
    double alpha = d.q_max + d.sum_a_max / beta;
    sb.history.push_back({alpha, beta});
    for (int k = 1; k <= max_iter; ++k) {
        const double beta_next = d.q_min + d.sum_a_min / alpha;
        const double alpha_next = d.q_max + d.sum_a_max / beta_next;
        const double change = std::abs(alpha_next - alpha) + std::abs(beta_next - beta);
        alpha = alpha_next;
        beta = beta_next;
        sb.history.push_back({alpha, beta});
        if (change < tol * std::max(1.0, alpha)) {
            sb.alpha = alpha;
            sb.beta = beta;
            sb.iterations = k;
            sb.converged = true;
            return sb;
        }
    }
    throw Error(ErrorCode::MaxIterationsExceeded,
                "scalar bound recurrences did not settle in " + std::to_string(max_iter) + " steps");
}

MatrixInterval coarse_interval(const EquationInstance& instance) {
    return {instance.q(), iteration_map(instance, instance.q())};
}

MatrixInterval refined_interval(const EquationInstance& instance, const ScalarBounds& sb) {
    if (!sb.converged) throw Error(ErrorCode::MaxIterationsExceeded, "refined_interval needs converged scalar bounds");
    const HermitianMatrix g = gram_sum(instance);
    return {instance.q() + (1.0 / sb.alpha) * g, instance.q() + (1.0 / sb.beta) * g};
}

MatrixInterval scalar_interval(Index order, const ScalarBounds& sb) {
    return {HermitianMatrix::scaled_identity(order, sb.beta), HermitianMatrix::scaled_identity(order, sb.alpha)};
}

bool membership(const HermitianMatrix& x, const MatrixInterval& interval, double tol) {
    if (x.order() != interval.lower.order() || x.order() != interval.upper.order()) {
        throw Error(ErrorCode::DimensionMismatch, "membership: orders differ");
    }
    return psd_within(x - interval.lower, tol) && psd_within(interval.upper - x, tol);
}

bool membership(const HermitianMatrix& x, const MatrixInterval& interval) {
    const double tol = static_cast<double>(x.order()) * std::numeric_limits<double>::epsilon() *
                       spectral_norm(interval.upper.matrix());
    return membership(x, interval, tol);
}

bool nested(const MatrixInterval& inner, const MatrixInterval& outer, double tol) {
    return psd_within(inner.lower - outer.lower, tol) && psd_within(outer.upper - inner.upper, tol);
}

}  // namespace matfix
