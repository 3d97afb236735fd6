#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "matfix/linalg.hpp"
#include "matfix/reference_problems.hpp"
#include "support/generators.hpp"

namespace matfix {
namespace {

ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    ComplexMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (const double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

TEST(HermitianMatrix, FromLowerMirrorsAndDropsDiagonalImaginary) {
    ComplexMatrix m(2, 2);
    m << Complex(1, 5), Complex(9, 9), Complex(2, 3), Complex(4, -1);
    const HermitianMatrix h = HermitianMatrix::from_lower(m);
    EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
    EXPECT_EQ(h(0, 1), Complex(2, -3));
    EXPECT_EQ(h(0, 0).imag(), 0.0);
    EXPECT_EQ(h(1, 1).imag(), 0.0);
}

TEST(HermitianMatrix, ArithmeticStaysExactlyHermitian) {
    testing::Rng rng(1);
    const HermitianMatrix a = rng.hermitian(4, true, -1.0, 1.0);
    const HermitianMatrix b = rng.hermitian(4, true, -1.0, 1.0);
    const ComplexMatrix c = (0.3 * a - b + a).matrix();
    EXPECT_EQ(c, c.adjoint());
}

TEST(Norms, SpectralNorm) {
    EXPECT_DOUBLE_EQ(spectral_norm(ComplexMatrix(ComplexMatrix::Identity(4, 4))), 1.0);
    EXPECT_EQ(spectral_norm(ComplexMatrix(ComplexMatrix::Zero(3, 3))), 0.0);
    EXPECT_NEAR(spectral_norm(reference::tridiagonal5()), 2.0 + 2.0 * std::cos(std::numbers::pi / 6.0), 1e-13);
}

TEST(Norms, SpectralNormWideRealMatrixMatchesSvd) {
    testing::Rng rng(2);
    const RealBlockMatrix m = rng.gaussian(3, 11, false).real();
    const double svd = Eigen::JacobiSVD<RealBlockMatrix>(m).singularValues()(0);
    EXPECT_NEAR(spectral_norm(m), svd, 1e-12 * svd);
}

TEST(Norms, FrobeniusNorm) {
    EXPECT_DOUBLE_EQ(frobenius_norm(ComplexMatrix::Identity(4, 4)), 2.0);
    EXPECT_EQ(frobenius_norm(ComplexMatrix::Zero(2, 2)), 0.0);
    EXPECT_DOUBLE_EQ(frobenius_norm(ComplexMatrix::Ones(2, 2)), 2.0);
}

TEST(Norms, MinSingularValue) {
    EXPECT_NEAR(min_singular_value(real_matrix({{3, 0}, {0, -0.5}})), 0.5, 1e-15);
}

TEST(EigExtremes, Examples) {
    const auto d = eig_extremes(HermitianMatrix::diagonal(RealVector{{1.0, 3.0, 7.0}}));
    EXPECT_DOUBLE_EQ(d.min, 1.0);
    EXPECT_DOUBLE_EQ(d.max, 7.0);
    const auto t = eig_extremes(HermitianMatrix::from_lower(reference::tridiagonal5()));
    EXPECT_NEAR(t.min, 2.0 - 2.0 * std::cos(std::numbers::pi / 6.0), 1e-13);
    EXPECT_NEAR(t.max, 2.0 + 2.0 * std::cos(std::numbers::pi / 6.0), 1e-13);
    const auto i = eig_extremes(HermitianMatrix::identity(3));
    EXPECT_DOUBLE_EQ(i.min, 1.0);
    EXPECT_DOUBLE_EQ(i.max, 1.0);
}

TEST(PositiveDefinite, Examples) {
    EXPECT_TRUE(is_positive_definite(HermitianMatrix::identity(3), 0.0));
    EXPECT_FALSE(is_positive_definite(HermitianMatrix::diagonal(RealVector{{1.0, -1.0}}), 0.0));
    EXPECT_FALSE(is_positive_definite(HermitianMatrix::diagonal(RealVector{{1e-14, 1.0}}), 1e-12));
    EXPECT_TRUE(is_positive_definite(HermitianMatrix::identity(2)));
}

TEST(Kron, Examples) {
    EXPECT_EQ(kron<Complex>(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
              ComplexMatrix::Identity(4, 4));
    EXPECT_EQ(kron<Complex>(real_matrix({{0, 1}, {0, 0}}), real_matrix({{2}})), real_matrix({{0, 2}, {0, 0}}));
    const ComplexMatrix k = kron<Complex>(real_matrix({{1, 2}, {3, 4}}), real_matrix({{0, 1}, {1, 0}}));
    EXPECT_EQ(k, real_matrix({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
}

TEST(Vec, ColumnMajor) {
    const ComplexVector v = vec(real_matrix({{1, 2}, {3, 4}}));
    EXPECT_EQ(v, ComplexVector(real_matrix({{1}, {3}, {2}, {4}})));
    const ComplexMatrix col = real_matrix({{5}, {6}, {7}});
    EXPECT_EQ(vec(col), ComplexVector(col));
}

TEST(Vec, UnvecInvertsVec) {
    testing::Rng rng(3);
    const ComplexMatrix m = rng.gaussian(3, 4, true);
    EXPECT_EQ(unvec(vec(m), 3, 4), m);
}

TEST(Vec, KroneckerIdentity) {
    testing::Rng rng(4);
    const ComplexMatrix a = rng.gaussian(3, 3, true);
    const ComplexMatrix e = rng.gaussian(3, 3, true);
    const ComplexMatrix b = rng.gaussian(3, 3, true);
    const ComplexVector lhs = vec(a * e * b);
    const ComplexVector rhs = kron<Complex>(ComplexMatrix(b.transpose()), a) * vec(e);
    EXPECT_LT((lhs - rhs).norm(), 1e-12 * lhs.norm());
}

TEST(VecPermutation, Examples) {
    EXPECT_EQ(vec_permutation(1), RealBlockMatrix::Ones(1, 1));
    const Eigen::Vector4d mapped = vec_permutation(2) * Eigen::Vector4d(1, 2, 3, 4);
    EXPECT_EQ(mapped, Eigen::Vector4d(1, 3, 2, 4));
    const RealBlockMatrix p = vec_permutation(3);
    EXPECT_EQ(p * p, RealBlockMatrix::Identity(9, 9));
}

TEST(VecPermutation, TransposesVec) {
    testing::Rng rng(5);
    const ComplexMatrix e = rng.gaussian(4, 4, true);
    EXPECT_EQ(ComplexVector(vec_permutation(4).cast<Complex>() * vec(e)), vec(e.transpose()));
}

TEST(HermitianPart, Examples) {
    testing::Rng rng(6);
    const HermitianMatrix h = rng.hermitian(3, true, -1.0, 1.0);
    EXPECT_LT((hermitian_part(h.matrix()).matrix() - h.matrix()).norm(), 1e-15);
    EXPECT_EQ(hermitian_part(real_matrix({{0, 2}, {0, 0}})).matrix(), real_matrix({{0, 1}, {1, 0}}));
    const ComplexMatrix q = reference::problem4_q();
    const HermitianMatrix s = hermitian_part(q);
    EXPECT_DOUBLE_EQ(s(2, 0).real(), 2.5);
    EXPECT_DOUBLE_EQ(s(4, 1).real(), 5.0);
    EXPECT_DOUBLE_EQ(s(0, 3).real(), 9.0);
    EXPECT_THROW((void)hermitian_part(ComplexMatrix::Zero(2, 3)), Error);
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(ComplexMatrix(ComplexMatrix::Identity(3, 3))), ComplexMatrix::Identity(3, 3));
    EXPECT_EQ(inverse(real_matrix({{2, 0}, {0, 4}})), real_matrix({{0.5, 0}, {0, 0.25}}));
    testing::Rng rng(7);
    const ComplexMatrix m = rng.gaussian(5, 5, true) + 5.0 * ComplexMatrix::Identity(5, 5);
    EXPECT_LE(spectral_norm(ComplexMatrix(m * inverse(m) - ComplexMatrix::Identity(5, 5))), 1e-12);
}

TEST(Inverse, SingularThrows) {
    try {
        (void)inverse(real_matrix({{1, 2}, {2, 4}}));
        FAIL() << "expected SingularMatrixError";
    } catch (const SingularMatrixError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Singular);
        EXPECT_LE(e.rcond(), 1e-15);
    }
}

TEST(RequireFinite, NamesTheMatrix) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(1, 0) = std::nan("");
    EXPECT_FALSE(is_finite(m));
    try {
        require_finite(m, "Q");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotFinite);
        EXPECT_NE(std::string(e.what()).find("Q"), std::string::npos);
    }
}

TEST(RealLinearRepresentation, MatchesComplexAction) {
    testing::Rng rng(8);
    const ComplexMatrix m1 = rng.gaussian(4, 4, true);
    const ComplexMatrix m2 = rng.gaussian(4, 4, true);
    const ComplexVector z = rng.gaussian(4, 1, true);
    const ComplexVector w = m1 * z + m2 * z.conjugate();
    Eigen::VectorXd zr(8);
    zr << z.real(), z.imag();
    const Eigen::VectorXd wr = real_linear_representation(m1, m2) * zr;
    EXPECT_LT((wr.head(4) - w.real()).norm(), 1e-13);
    EXPECT_LT((wr.tail(4) - w.imag()).norm(), 1e-13);
}

}  // namespace
}  // namespace matfix
