#include "matfix/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace matfix {
namespace {

std::string shape(const ComplexMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

bool hermitian_within(const ComplexMatrix& q) {
    const double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    return (q - q.adjoint()).cwiseAbs().maxCoeff() <= slack;
}

std::vector<Violation> shape_violations(std::span<const ComplexMatrix> a, const ComplexMatrix& q) {
    std::vector<Violation> out;
    if (a.empty()) out.push_back({ErrorCode::DimensionMismatch, "need at least one coefficient matrix"});
    if (q.rows() != q.cols()) out.push_back({ErrorCode::NotSquare, "Q is " + shape(q)});
    if (q.size() == 0) out.push_back({ErrorCode::DimensionMismatch, "Q is empty"});
    if (!is_finite(q)) out.push_back({ErrorCode::NotFinite, "Q"});
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string name = "A[" + std::to_string(i) + "]";
        if (a[i].rows() != q.rows() || a[i].cols() != q.rows()) {
            out.push_back({ErrorCode::DimensionMismatch, name + " is " + shape(a[i]) + " but Q is " + shape(q)});
        }
        if (!is_finite(a[i])) out.push_back({ErrorCode::NotFinite, name});
    }
    return out;
}

ComplexMatrix start_matrix(const StartPolicy& policy, const ComplexMatrix& q) {
    const Index n = q.rows();
    if (std::holds_alternative<StartFromQ>(policy)) return q;
    if (const auto* s = std::get_if<StartScaledIdentity>(&policy)) {
        return ComplexMatrix(s->c * ComplexMatrix::Identity(n, n));
    }
    const auto& x0 = std::get<StartExplicit>(policy).x0;
    if (x0.rows() != n || x0.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "X0 is " + shape(x0) + " but Q is " + shape(q));
    }
    return x0;
}

// Q + sum A_i^* Yinv A_i
ComplexMatrix apply_map(const std::vector<ComplexMatrix>& a, const ComplexMatrix& q, const ComplexMatrix& y_inv) {
    ComplexMatrix out = q;
    for (const auto& ai : a) out.noalias() += ai.adjoint() * y_inv * ai;
    return out;
}

}  // namespace

EquationInstance EquationInstance::create(std::vector<ComplexMatrix> a, const ComplexMatrix& q) {
    validate(a, q);
    return EquationInstance(std::move(a), hermitian_part(q));
}

EquationInstance EquationInstance::create(std::vector<ComplexMatrix> a, HermitianMatrix q) {
    validate(a, q.matrix());
    return EquationInstance(std::move(a), std::move(q));
}

bool EquationInstance::is_real() const {
    if (!q_.is_real()) return false;
    for (const auto& ai : a_) {
        if (!ai.imag().isZero(0.0)) return false;
    }
    return true;
}

GeneralInstance GeneralInstance::create(std::vector<ComplexMatrix> a, ComplexMatrix q) {
    auto violations = shape_violations(a, q);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return GeneralInstance{std::move(a), std::move(q)};
}

GeneralInstance GeneralInstance::from(const EquationInstance& instance) {
    return GeneralInstance{instance.a(), instance.q().matrix()};
}

bool GeneralInstance::is_real() const {
    if (!q.imag().isZero(0.0)) return false;
    for (const auto& ai : a) {
        if (!ai.imag().isZero(0.0)) return false;
    }
    return true;
}

std::vector<Violation> find_violations(std::span<const ComplexMatrix> a, const ComplexMatrix& q) {
    auto out = shape_violations(a, q);
    const bool square = q.rows() == q.cols() && q.size() > 0 && is_finite(q);
    if (!square) return out;
    if (!hermitian_within(q)) {
        out.push_back({ErrorCode::NotHermitian, "Q differs from its conjugate transpose"});
        return out;
    }
    const auto qh = hermitian_part(q);
    const auto ext = eig_extremes(qh);
    if (!is_positive_definite(qh)) {
        out.push_back({ErrorCode::NotPositiveDefinite, "lambda_min(Q) = " + std::to_string(ext.min)});
    }
    return out;
}

void validate(std::span<const ComplexMatrix> a, const ComplexMatrix& q) {
    auto violations = find_violations(a, q);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

HermitianMatrix iteration_map(const EquationInstance& instance, const HermitianMatrix& y) {
    return hermitian_part(apply_map(instance.a(), instance.q().matrix(), inverse(y.matrix())));
}

SolveReport solve(const EquationInstance& instance, const SolveSettings& settings) {
    if (!(settings.tol > 0.0) || settings.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "solve settings need tol > 0 and max_iter >= 1");
    }
    const ComplexMatrix x0 = start_matrix(settings.start, instance.q().matrix());
    if (!hermitian_within(x0)) throw Error(ErrorCode::NotHermitian, "starting matrix X0");
    HermitianMatrix x = hermitian_part(x0);
    if (!is_positive_definite(x)) throw Error(ErrorCode::NotPositiveDefinite, "starting matrix X0");

    SolveReport report;
    report.history.reserve(static_cast<std::size_t>(std::min(settings.max_iter, 4096)));
    double best = std::numeric_limits<double>::infinity();
    HermitianMatrix next = iteration_map(instance, x);

    for (int k = 1; k <= settings.max_iter; ++k) {
        x = next;
        if (!is_finite(x.matrix()) || !is_positive_definite(x)) {
            throw Error(ErrorCode::SingularIterate, "iterate " + std::to_string(k) + " is not positive definite");
        }
        // F(X_k) doubles as the next iterate, so R(X_k) = F(X_k) - X_k costs no extra inverse.
        next = iteration_map(instance, x);
        const double r = spectral_norm(ComplexMatrix(next.matrix() - x.matrix()));
        report.history.push_back(r);
        if (r < best) {
            best = r;
            report.x = x;
            report.iterations = k;
            report.residual_norm = r;
        }
        if (r < settings.tol) {
            report.converged = true;
            return report;
        }
    }
    return report;
}

GeneralSolveReport solve_general(const GeneralInstance& instance, const SolveSettings& settings) {
    if (!(settings.tol > 0.0) || settings.max_iter < 1) {
        throw Error(ErrorCode::InvalidArgument, "solve settings need tol > 0 and max_iter >= 1");
    }
    ComplexMatrix x = start_matrix(settings.start, instance.q);
    ComplexMatrix next = apply_map(instance.a, instance.q, inverse(x));

    GeneralSolveReport report;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= settings.max_iter; ++k) {
        x = next;
        if (!is_finite(x)) throw Error(ErrorCode::SingularIterate, "iterate " + std::to_string(k) + " is not finite");
        try {
            next = apply_map(instance.a, instance.q, inverse(x));
        } catch (const SingularMatrixError& e) {
            throw Error(ErrorCode::SingularIterate, "iterate " + std::to_string(k) + ": " + e.what());
        }
        const double r = spectral_norm(ComplexMatrix(next - x));
        report.history.push_back(r);
        if (r < best) {
            best = r;
            report.x = x;
            report.iterations = k;
            report.residual_norm = r;
        }
        if (r < settings.tol) {
            report.converged = true;
            return report;
        }
    }
    return report;
}

Residual residual(const EquationInstance& instance, const HermitianMatrix& x) {
    if (x.order() != instance.order()) {
        throw Error(ErrorCode::DimensionMismatch, "X has order " + std::to_string(x.order()) + ", Q has order " +
                                                      std::to_string(instance.order()));
    }
    if (!is_positive_definite(x)) throw Error(ErrorCode::NotPositiveDefinite, "residual needs X > 0");
    HermitianMatrix r = iteration_map(instance, x) - x;
    const double norm = spectral_norm(r.matrix());
    return {std::move(r), norm};
}

double residual_norm(const GeneralInstance& instance, const ComplexMatrix& x) {
    return spectral_norm(ComplexMatrix(apply_map(instance.a, instance.q, inverse(x)) - x));
}

}  // namespace matfix
