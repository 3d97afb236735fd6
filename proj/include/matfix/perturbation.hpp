#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matfix/bounds.hpp"
#include "matfix/sensitivity.hpp"

namespace matfix {

/// Perturbations dA_1..dA_m and dQ of the data, with their spectral norms.
class PerturbationSpec {
public:
    /// Throws DimensionMismatch when shapes disagree with the instance.
    [[nodiscard]] static PerturbationSpec create(const EquationInstance& instance, std::vector<ComplexMatrix> da,
                                                 HermitianMatrix dq);
    /// Zero dQ.
    [[nodiscard]] static PerturbationSpec create(const EquationInstance& instance, std::vector<ComplexMatrix> da);

    [[nodiscard]] const std::vector<ComplexMatrix>& da() const noexcept { return da_; }
    [[nodiscard]] const HermitianMatrix& dq() const noexcept { return dq_; }
    [[nodiscard]] const std::vector<double>& da_norms() const noexcept { return da_norms_; }
    [[nodiscard]] double dq_norm() const noexcept { return dq_norm_; }

    /// Same direction scaled by t.
    [[nodiscard]] PerturbationSpec scaled(double t) const;

private:
    PerturbationSpec(std::vector<ComplexMatrix> da, HermitianMatrix dq);

    std::vector<ComplexMatrix> da_;
    HermitianMatrix dq_;
    std::vector<double> da_norms_;
    double dq_norm_ = 0.0;
};

enum class BoundKind { Xi1, Xi2, Xi3 };

[[nodiscard]] constexpr std::string_view to_string(BoundKind k) noexcept {
    switch (k) {
        case BoundKind::Xi1: return "xi1";
        case BoundKind::Xi2: return "xi2";
        case BoundKind::Xi3: return "xi3";
    }
    return "?";
}

/// A named feasibility quantity; `pass` records the inequality it must satisfy.
struct Condition {
    std::string name;
    double value = 0.0;
    bool pass = false;
};

struct NamedScalar {
    std::string name;
    double value = 0.0;
};

struct BoundReport {
    BoundKind kind = BoundKind::Xi1;
    double relative_bound = 0.0;            ///< bound on ||X~ - X|| / ||X||
    std::optional<double> absolute_bound;   ///< bound on ||X~ - X|| when the theorem gives one
    std::vector<Condition> conditions;
    std::vector<NamedScalar> inputs;

    [[nodiscard]] bool feasible() const;
    [[nodiscard]] double input(std::string_view name) const;
};

/// Thrown when a bound's hypotheses fail. Carries the full diagnostic report.
class ConditionViolated : public Error {
public:
    ConditionViolated(BoundReport report, const std::string& condition);

    [[nodiscard]] const BoundReport& report() const noexcept { return report_; }
    [[nodiscard]] const std::string& condition() const noexcept { return condition_; }

private:
    BoundReport report_;
    std::string condition_;
};

/// Relative bound from the a priori scalar beta only:
///   b = beta^2 + beta ||dQ|| - sum ||A_i||^2,  s = sum ||dA_i|| (2 ||A_i|| + ||dA_i||),
///   xi1 = 2 (s + beta ||dQ||) / (b + sqrt(b^2 - 4 beta^2 (beta ||dQ|| + s))),
/// valid when 0 < b < 2 beta^2 and the discriminant is nonnegative.
[[nodiscard]] BoundReport xi1(const EquationInstance& instance, const ScalarBounds& sb, const PerturbationSpec& spec);

/// Bound for perturbations of the A_i only (dQ must be zero):
///   ||X~ - X|| <= 2 beta sum (||A_i|| + ||dA_i||) ||dA_i|| / (beta^2 - sum (||A_i|| + ||dA_i||)^2).
/// Throws NonzeroDeltaQ or ConditionViolated.
[[nodiscard]] BoundReport xi2(const EquationInstance& instance, const ScalarBounds& sb, const HermitianMatrix& x,
                              const PerturbationSpec& spec);

/// Operator-based bound built from l, n_i, theta_i, zeta of the bundle. The
/// relative value is the absolute bound divided by ||X||.
[[nodiscard]] BoundReport xi3(const EquationInstance& instance, const HermitianMatrix& x, const OperatorBundle& bundle,
                              const PerturbationSpec& spec);

/// con1..con6 with pass flags (con1 > 0, con2 > 0, con3 >= 0, con4 > 0, con5 > 0, con6 > 0).
[[nodiscard]] std::vector<Condition> feasibility_table(const EquationInstance& instance, const ScalarBounds& sb,
                                                       const OperatorBundle& bundle, const PerturbationSpec& spec);

/// L^{-1} dQ + sum P_i dA_i, the linear part of X~ - X.
[[nodiscard]] HermitianMatrix first_order_delta(const OperatorBundle& bundle, const PerturbationSpec& spec);

}  // namespace matfix
