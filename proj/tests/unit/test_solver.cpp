#include <cmath>

#include <gtest/gtest.h>

#include "matfix/reference_problems.hpp"
#include "matfix/solver.hpp"
#include "support/generators.hpp"

namespace matfix {
namespace {

ComplexMatrix scalar(double v) { return ComplexMatrix::Constant(1, 1, v); }

double scalar_root(double q, double sum_a2) { return 0.5 * (q + std::sqrt(q * q + 4.0 * sum_a2)); }

ErrorCode violation_code(const std::vector<ComplexMatrix>& a, const ComplexMatrix& q) {
    try {
        (void)EquationInstance::create(a, q);
    } catch (const ValidationError& e) {
        return e.code();
    }
    ADD_FAILURE() << "instance was accepted";
    return ErrorCode::InvalidArgument;
}

// Reference solution of problem 1, four decimals.
const double reference_x[5][5] = {{1.0643, 0.0494, 0.0104, -0.0009, -0.0000},
                                {0.0494, 1.0747, 0.0485, 0.0104, -0.0009},
                                {0.0104, 0.0485, 1.0747, 0.0485, 0.0104},
                                {-0.0009, 0.0104, 0.0485, 1.0747, 0.0494},
                                {-0.0000, -0.0009, 0.0104, 0.0494, 1.0643}};

TEST(Validate, AcceptsProblem1) { EXPECT_NO_THROW((void)reference::problem1()); }

TEST(Validate, RejectsIndefiniteQ) {
    ComplexMatrix q = ComplexMatrix::Identity(2, 2);
    q(1, 1) = -1.0;
    EXPECT_EQ(violation_code({ComplexMatrix::Zero(2, 2)}, q), ErrorCode::NotPositiveDefinite);
}

TEST(Validate, RejectsShapeMismatch) {
    EXPECT_EQ(violation_code({ComplexMatrix::Zero(4, 4)}, ComplexMatrix::Identity(5, 5)),
              ErrorCode::DimensionMismatch);
}

TEST(Validate, RejectsNonHermitianAndEmpty) {
    EXPECT_EQ(violation_code({ComplexMatrix::Zero(5, 5)}, reference::problem4_q()), ErrorCode::NotHermitian);
    EXPECT_EQ(violation_code({}, ComplexMatrix::Identity(2, 2)), ErrorCode::DimensionMismatch);
}

TEST(Validate, ListsEveryViolation) {
    ComplexMatrix bad = ComplexMatrix::Zero(3, 3);
    bad(0, 0) = std::nan("");
    const auto v = find_violations(std::vector<ComplexMatrix>{ComplexMatrix::Zero(2, 2), bad},
                                   ComplexMatrix::Identity(3, 3));
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].code, ErrorCode::DimensionMismatch);
    EXPECT_EQ(v[1].code, ErrorCode::NotFinite);
}

TEST(Solve, Problem1FromScaledIdentity) {
    SolveSettings s;
    s.start = StartScaledIdentity{1.1};
    s.tol = 1e-10;
    const SolveReport r = solve(reference::problem1(), s);
    ASSERT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 11);
    EXPECT_LT(r.residual_norm, 1e-10);
    EXPECT_NEAR(r.residual_norm, 4.8477e-11, 5e-15);
    EXPECT_EQ(r.history.size(), 11u);
    for (Index i = 0; i < 5; ++i) {
        for (Index j = 0; j < 5; ++j) EXPECT_NEAR(r.x(i, j).real(), reference_x[i][j], 5e-5 + 1e-12);
    }
}

TEST(Solve, ZeroCoefficientGivesQInOneStep) {
    testing::Rng rng(11);
    const HermitianMatrix q = rng.hermitian(4, true, 1.0, 2.0);
    const SolveReport r = solve(EquationInstance::create({ComplexMatrix::Zero(4, 4)}, q));
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 1);
    EXPECT_EQ(r.x.matrix(), q.matrix());
}

TEST(Solve, ScalarClosedForm) {
    const SolveReport r = solve(EquationInstance::create({scalar(1.0), scalar(1.0)}, scalar(1.0)));
    ASSERT_TRUE(r.converged);
    EXPECT_NEAR(r.x(0, 0).real(), 2.0, 1e-10);
}

TEST(Solve, ConvergedImpliesSmallResidualAndPositiveDefinite) {
    testing::Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const auto inst = testing::random_instance(rng, rng.integer(1, 6), rng.integer(1, 3), t % 2 == 0, 0.5);
        const SolveReport r = solve(inst);
        ASSERT_TRUE(r.converged);
        EXPECT_LT(r.residual_norm, 1e-10);
        EXPECT_LT(residual(inst, r.x).norm, 1e-10);
        EXPECT_TRUE(is_positive_definite(r.x));
        EXPECT_EQ(r.x.matrix(), r.x.matrix().adjoint());
    }
}

TEST(Solve, NonConvergenceReportsBestIterate) {
    SolveSettings s;
    s.max_iter = 3;
    const SolveReport r = solve(reference::problem1(), s);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.history.size(), 3u);
    EXPECT_EQ(r.iterations, 3);
    EXPECT_DOUBLE_EQ(r.residual_norm, r.history.back());
}

TEST(Solve, RejectsBadSettingsAndStart) {
    const auto inst = reference::problem1();
    SolveSettings s;
    s.tol = 0.0;
    EXPECT_THROW((void)solve(inst, s), Error);
    s = {};
    s.start = StartScaledIdentity{-1.0};
    try {
        (void)solve(inst, s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
    }
    s.start = StartExplicit{ComplexMatrix::Identity(3, 3)};
    EXPECT_THROW((void)solve(inst, s), Error);
}

TEST(Solve, ExplicitStart) {
    SolveSettings s;
    s.start = StartExplicit{reference::tridiagonal5()};
    const SolveReport r = solve(reference::problem3(), s);
    EXPECT_TRUE(r.converged);
}

TEST(Solve, GeneralMatchesHermitianOnValidData) {
    const auto inst = reference::problem2();
    const SolveReport h = solve(inst);
    const GeneralSolveReport g = solve_general(GeneralInstance::from(inst));
    ASSERT_TRUE(g.converged);
    EXPECT_EQ(g.iterations, h.iterations);
    EXPECT_LT(spectral_norm(ComplexMatrix(g.x - h.x.matrix())), 1e-12);
}

TEST(Solve, GeneralHandlesNonsymmetricQ) {
    const GeneralSolveReport r = solve_general(reference::problem4(1));
    ASSERT_TRUE(r.converged);
    EXPECT_LT(residual_norm(reference::problem4(1), r.x), 1e-10);
}

TEST(Residual, Examples) {
    const auto one = EquationInstance::create({scalar(1.0), scalar(1.0)}, scalar(1.0));
    EXPECT_NEAR(residual(one, HermitianMatrix::from_lower(scalar(2.0))).norm, 0.0, 1e-15);

    const auto inst = reference::problem1();
    ComplexMatrix expected = ComplexMatrix::Zero(5, 5);
    for (const auto& a : inst.a()) expected += a.adjoint() * a;  // Q = I
    EXPECT_NEAR(residual(inst, inst.q()).norm, spectral_norm(expected), 1e-14);

    EXPECT_THROW((void)residual(inst, HermitianMatrix::scaled_identity(5, -1.0)), Error);
}

TEST(Residual, FirstIterateErrorOfProblem3) {
    const auto inst = reference::problem3();
    const HermitianMatrix x1 = iteration_map(inst, HermitianMatrix::from_lower(reference::tridiagonal5()));
    const SolveReport r = testing::tight_solve(inst);
    EXPECT_NEAR(testing::spectral_distance(x1, r.x), 5.0268e-4, 5e-8);
}

TEST(Properties, ScalarOracle) {
    testing::Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        const double q = rng.uniform(0.1, 5.0);
        const int m = rng.integer(1, 3);
        std::vector<ComplexMatrix> a;
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            const Complex ai(rng.normal(), rng.normal());
            sum += std::norm(ai);
            a.push_back(ComplexMatrix::Constant(1, 1, ai));
        }
        const double x = scalar_root(q, sum);
        const SolveReport r = testing::tight_solve(EquationInstance::create(a, scalar(q)));
        ASSERT_TRUE(r.converged);
        EXPECT_NEAR(r.x(0, 0).real(), x, 1e-12 * std::max(1.0, x));
    }
}

TEST(Properties, StartIndependence) {
    testing::Rng rng(14);
    for (int t = 0; t < 20; ++t) {
        const auto inst = testing::random_instance(rng, rng.integer(1, 6), rng.integer(1, 3), t % 3 != 0, 0.6);
        SolveSettings s;
        const SolveReport a = solve(inst, s);
        s.start = StartScaledIdentity{10.0};
        const SolveReport b = solve(inst, s);
        ASSERT_TRUE(a.converged && b.converged);
        EXPECT_LT(testing::spectral_distance(a.x, b.x), 10.0 * s.tol);
    }
}

}  // namespace
}  // namespace matfix
