#pragma once

#include <span>
#include <variant>
#include <vector>

#include "matfix/linalg.hpp"

namespace matfix {

/// Coefficients A_1..A_m and Hermitian positive definite Q of
/// X - sum A_i^* X^{-1} A_i = Q. Instances are valid by construction.
class EquationInstance {
public:
    /// Validates and builds; throws ValidationError listing every violation.
    [[nodiscard]] static EquationInstance create(std::vector<ComplexMatrix> a, const ComplexMatrix& q);
    [[nodiscard]] static EquationInstance create(std::vector<ComplexMatrix> a, HermitianMatrix q);

    [[nodiscard]] Index order() const noexcept { return q_.order(); }
    [[nodiscard]] std::size_t terms() const noexcept { return a_.size(); }
    [[nodiscard]] const std::vector<ComplexMatrix>& a() const noexcept { return a_; }
    [[nodiscard]] const ComplexMatrix& a(std::size_t i) const { return a_.at(i); }
    [[nodiscard]] const HermitianMatrix& q() const noexcept { return q_; }

    /// True when Q and every A_i have zero imaginary part.
    [[nodiscard]] bool is_real() const;

private:
    EquationInstance(std::vector<ComplexMatrix> a, HermitianMatrix q) : a_(std::move(a)), q_(std::move(q)) {}

    std::vector<ComplexMatrix> a_;
    HermitianMatrix q_;
};

/// Coefficients with an arbitrary square Q. No Hermitian or definiteness
/// requirement; used for data that does not satisfy the equation's hypotheses.
struct GeneralInstance {
    std::vector<ComplexMatrix> a;
    ComplexMatrix q;

    /// Checks shapes, finiteness and m >= 1; throws ValidationError.
    [[nodiscard]] static GeneralInstance create(std::vector<ComplexMatrix> a, ComplexMatrix q);
    [[nodiscard]] static GeneralInstance from(const EquationInstance& instance);

    [[nodiscard]] Index order() const noexcept { return q.rows(); }
    [[nodiscard]] bool is_real() const;
};

/// Every invariant violation of (A, Q); empty when the data is a valid instance.
[[nodiscard]] std::vector<Violation> find_violations(std::span<const ComplexMatrix> a, const ComplexMatrix& q);

/// Throws ValidationError unless (A, Q) is a valid instance.
void validate(std::span<const ComplexMatrix> a, const ComplexMatrix& q);

struct StartFromQ {};
struct StartScaledIdentity {
    double c = 1.0;
};
struct StartExplicit {
    ComplexMatrix x0;
};
using StartPolicy = std::variant<StartFromQ, StartScaledIdentity, StartExplicit>;

struct SolveSettings {
    StartPolicy start = StartFromQ{};
    double tol = 1e-10;  ///< spectral norm of the equation residual
    int max_iter = 1000;
};

struct SolveReport {
    HermitianMatrix x;
    int iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;
    std::vector<double> history;  ///< residual norm of X_k, k = 1..iterations
};

struct GeneralSolveReport {
    ComplexMatrix x;
    int iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;
    std::vector<double> history;
};

struct Residual {
    HermitianMatrix r;
    double norm = 0.0;
};

/// F(Y) = Q + sum A_i^* Y^{-1} A_i, re-symmetrized.
[[nodiscard]] HermitianMatrix iteration_map(const EquationInstance& instance, const HermitianMatrix& y);

/// Fixed-point iteration X_k = F(X_{k-1}) until ||X_k - F(X_k)|| < tol.
///
/// Non-convergence is not an error: the report carries converged = false and
/// the iterate with the smallest residual. Throws SingularIterate if an iterate
/// loses positive definiteness, and NotPositiveDefinite for a bad explicit start.
[[nodiscard]] SolveReport solve(const EquationInstance& instance, const SolveSettings& settings = {});

/// Same iteration on raw matrices, without symmetrization or definiteness checks.
[[nodiscard]] GeneralSolveReport solve_general(const GeneralInstance& instance, const SolveSettings& settings = {});

/// R(X) = Q + sum A_i^* X^{-1} A_i - X and its spectral norm. Throws NotPositiveDefinite.
[[nodiscard]] Residual residual(const EquationInstance& instance, const HermitianMatrix& x);

/// Spectral norm of Q + sum A_i^* X^{-1} A_i - X for raw data.
[[nodiscard]] double residual_norm(const GeneralInstance& instance, const ComplexMatrix& x);

}  // namespace matfix
