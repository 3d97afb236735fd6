#include <cmath>

#include <gtest/gtest.h>

#include "matfix/perturbation.hpp"
#include "matfix/reference_problems.hpp"
#include "support/generators.hpp"

namespace matfix {
namespace {

ComplexMatrix scalar(double v) { return ComplexMatrix::Constant(1, 1, v); }

double find(const std::vector<Condition>& table, const std::string& name) {
    for (const auto& c : table) {
        if (c.name == name) return c.value;
    }
    ADD_FAILURE() << "missing " << name;
    return 0.0;
}

struct Problem2 {
    EquationInstance inst = reference::problem2();
    ScalarBounds sb = scalar_bounds(inst);
    HermitianMatrix x = testing::tight_solve(inst).x;

    PerturbationSpec spec(int j) const {
        return PerturbationSpec::create(inst, reference::problem2_perturbation(j, 0.5 * ComplexMatrix::Identity(5, 5)));
    }
};

TEST(PerturbationSpec, NormsAndShapes) {
    const Problem2 p;
    const auto spec = p.spec(7);
    EXPECT_NEAR(spec.da_norms()[0], 1e-7, 1e-22);
    EXPECT_NEAR(spec.da_norms()[1], 3e-8, 1e-22);
    EXPECT_EQ(spec.dq_norm(), 0.0);
    EXPECT_NEAR(spec.scaled(2.0).da_norms()[0], 2e-7, 1e-21);
    EXPECT_THROW((void)PerturbationSpec::create(p.inst, {ComplexMatrix::Zero(5, 5)}), Error);
    EXPECT_THROW((void)PerturbationSpec::create(p.inst, testing::zero_coefficients(4, 2)), Error);
}

TEST(Bounds, ZeroPerturbationGivesZero) {
    const Problem2 p;
    const auto spec = PerturbationSpec::create(p.inst, testing::zero_coefficients(5, 2));
    const auto bundle = build_bundle(p.inst, p.x);
    EXPECT_EQ(xi1(p.inst, p.sb, spec).relative_bound, 0.0);
    EXPECT_EQ(xi2(p.inst, p.sb, p.x, spec).relative_bound, 0.0);
    const auto r3 = xi3(p.inst, p.x, bundle, spec);
    EXPECT_EQ(r3.relative_bound, 0.0);
    EXPECT_EQ(r3.input("epsilon"), 0.0);
    EXPECT_EQ(r3.input("sigma"), 0.0);
    EXPECT_TRUE(first_order_delta(bundle, spec).matrix().isZero(0.0));
    for (const auto& c : feasibility_table(p.inst, p.sb, bundle, spec)) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Bounds, Problem2AtJ7) {
    const Problem2 p;
    const auto spec = p.spec(7);
    const auto bundle = build_bundle(p.inst, p.x);
    const auto r1 = xi1(p.inst, p.sb, spec);
    const auto r2 = xi2(p.inst, p.sb, p.x, spec);
    const auto r3 = xi3(p.inst, p.x, bundle, spec);
    EXPECT_NEAR(r1.relative_bound, 9.8301e-8, 1e-2 * 9.8301e-8);
    EXPECT_NEAR(r2.relative_bound, 8.6061e-8, 1e-2 * 8.6061e-8);
    EXPECT_NEAR(*r3.absolute_bound, 6.4045e-8, 5e-2 * 6.4045e-8);
    // Independent evaluation of the closed forms.
    EXPECT_NEAR(r1.relative_bound, 9.84175e-8, 1e-12);
    EXPECT_NEAR(r2.relative_bound, 8.61626e-8, 1e-12);
    EXPECT_NEAR(*r3.absolute_bound, 6.41208e-8, 1e-12);
    EXPECT_LE(*r3.absolute_bound, *r2.absolute_bound);
}

TEST(Feasibility, Problem2AtJ7) {
    const Problem2 p;
    const auto bundle = build_bundle(p.inst, p.x, LowerBoundConvention::ReciprocalNorm);
    const auto table = feasibility_table(p.inst, p.sb, bundle, p.spec(7));
    EXPECT_NEAR(find(table, "con1"), 1.1650, 2e-3);
    EXPECT_NEAR(find(table, "con2"), 0.8379, 2e-3);
    EXPECT_NEAR(find(table, "con3"), 0.7021, 2e-3);
    EXPECT_NEAR(find(table, "con4"), 0.8379, 2e-3);
    EXPECT_NEAR(find(table, "con5"), 1.0000, 2e-3);
    EXPECT_NEAR(find(table, "con6"), 0.4804, 2e-3);
    const auto inverse_norm = feasibility_table(p.inst, p.sb, build_bundle(p.inst, p.x), p.spec(7));
    EXPECT_NEAR(find(inverse_norm, "con6"), 0.50036, 1e-5);
}

TEST(Feasibility, AlgebraicIdentities) {
    const Problem2 p;
    const auto bundle = build_bundle(p.inst, p.x);
    const auto zero = feasibility_table(p.inst, p.sb, bundle, PerturbationSpec::create(p.inst, testing::zero_coefficients(5, 2)));
    EXPECT_DOUBLE_EQ(find(zero, "con3"), find(zero, "con2") * find(zero, "con2"));
    const auto table = feasibility_table(p.inst, p.sb, bundle, p.spec(5));
    EXPECT_NEAR(find(table, "con1") + find(table, "con2"), 2.0 * p.sb.beta * p.sb.beta, 1e-14);
}

TEST(Bounds, NonzeroDeltaQRejectedByXi2) {
    const Problem2 p;
    const auto spec = PerturbationSpec::create(p.inst, testing::zero_coefficients(5, 2),
                                               HermitianMatrix::scaled_identity(5, 1e-6));
    try {
        (void)xi2(p.inst, p.sb, p.x, spec);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonzeroDeltaQ);
    }
    EXPECT_GT(xi1(p.inst, p.sb, spec).relative_bound, 0.0);
}

TEST(Bounds, InfeasibleRaisesWithReport) {
    const Problem2 p;
    const auto spec = p.spec(0);  // ||dA_1|| = 1
    try {
        (void)xi1(p.inst, p.sb, spec);
        FAIL();
    } catch (const ConditionViolated& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConditionViolated);
        EXPECT_FALSE(e.report().feasible());
        EXPECT_EQ(e.condition(), "discriminant>=0");
    }
    EXPECT_THROW((void)xi2(p.inst, p.sb, p.x, spec), ConditionViolated);
    EXPECT_THROW((void)xi3(p.inst, p.x, build_bundle(p.inst, p.x), spec), ConditionViolated);
}

TEST(Bounds, ScalarDomination) {
    testing::Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        const double q = rng.uniform(0.5, 3.0);
        const double a = rng.uniform(-0.6, 0.6) * q;
        const double da = rng.uniform(-1e-3, 1e-3);
        const auto inst = EquationInstance::create({scalar(a)}, scalar(q));
        const auto sb = scalar_bounds(inst);
        const auto x = testing::tight_solve(inst).x;
        const auto spec = PerturbationSpec::create(inst, {scalar(da)});
        const double xt = testing::tight_solve(testing::with_coefficients(inst, spec.da())).x(0, 0).real();
        const double err = std::abs(xt - x(0, 0).real());
        EXPECT_GE(xi1(inst, sb, spec).relative_bound * x(0, 0).real() + 1e-14, err);
        EXPECT_GE(*xi2(inst, sb, x, spec).absolute_bound + 1e-14, err);
        EXPECT_GE(*xi3(inst, x, build_bundle(inst, x), spec).absolute_bound + 1e-14, err);
    }
}

TEST(FirstOrderDelta, ScalarExpansion) {
    const double q = 1.3, a = 0.7, da = 1e-7, dq = 2e-7;
    const auto inst = EquationInstance::create({scalar(a)}, scalar(q));
    const auto x = testing::tight_solve(inst).x;
    const double b = a / x(0, 0).real();
    const auto spec = PerturbationSpec::create(inst, {scalar(da)}, HermitianMatrix::from_lower(scalar(dq)));
    const double dx = first_order_delta(build_bundle(inst, x), spec)(0, 0).real();
    EXPECT_NEAR(dx, (dq + 2.0 * b * da) / (1.0 + b * b), 1e-20);
}

TEST(FirstOrderDelta, SecondOrderRemainder) {
    const auto inst = reference::problem1();
    const auto x = testing::tight_solve(inst).x;
    const auto bundle = build_bundle(inst, x);
    testing::Rng rng(42);
    const auto base = PerturbationSpec::create(inst, testing::random_deltas(rng, 5, {1.0, 1.0}, false));
    const auto remainder = [&](double t) {
        const auto spec = base.scaled(t);
        const auto xt = testing::tight_solve(testing::with_coefficients(inst, spec.da())).x;
        return spectral_norm(ComplexMatrix(xt.matrix() - x.matrix() - first_order_delta(bundle, spec).matrix()));
    };
    const double order = std::log2(remainder(1e-3) / remainder(5e-4));
    EXPECT_GE(order, 1.9);
}

}  // namespace
}  // namespace matfix
