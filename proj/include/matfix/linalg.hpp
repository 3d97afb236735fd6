#pragma once

// Dense complex matrix primitives shared by every module: norms, Hermitian
// eigen-extremes, Kronecker products and the column-major vec operator.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "matfix/error.hpp"

namespace matfix {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealBlockMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Square matrix with exact conjugate symmetry and a real diagonal.
///
/// The strict lower triangle is the source of truth; the upper triangle is
/// always its mirror. Sums, differences and real scalings of Hermitian
/// matrices stay exactly Hermitian in floating point, so those operators
/// are provided here and skip re-mirroring.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    /// Zero matrix of the given order.
    explicit HermitianMatrix(Index order);

    /// Mirrors the lower triangle of `m` and drops the imaginary part of its diagonal.
    [[nodiscard]] static HermitianMatrix from_lower(const ComplexMatrix& m);
    [[nodiscard]] static HermitianMatrix identity(Index order);
    [[nodiscard]] static HermitianMatrix scaled_identity(Index order, double c);
    [[nodiscard]] static HermitianMatrix diagonal(const RealVector& d);

    [[nodiscard]] Index order() const noexcept { return m_.rows(); }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
    [[nodiscard]] Complex operator()(Index i, Index j) const { return m_(i, j); }

    /// True when every imaginary part is zero.
    [[nodiscard]] bool is_real() const;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

private:
    explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

struct EigenExtremes {
    double min = 0.0;
    double max = 0.0;
};

/// Throws NotFinite when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, std::string_view name);

[[nodiscard]] bool is_finite(const ComplexMatrix& m);

/// Largest singular value.
[[nodiscard]] double spectral_norm(const ComplexMatrix& m);
[[nodiscard]] double spectral_norm(const RealBlockMatrix& m);

/// Smallest singular value (zero for an empty matrix).
[[nodiscard]] double min_singular_value(const ComplexMatrix& m);

[[nodiscard]] double frobenius_norm(const ComplexMatrix& m);

[[nodiscard]] EigenExtremes eig_extremes(const HermitianMatrix& h);

/// Default positive-definiteness slack: n * eps * |lambda_max|.
[[nodiscard]] double default_pd_tolerance(const HermitianMatrix& h);

/// lambda_min(h) > tol.
[[nodiscard]] bool is_positive_definite(const HermitianMatrix& h, double tol);
[[nodiscard]] bool is_positive_definite(const HermitianMatrix& h);

/// Block matrix whose (i, j) block is a(i, j) * b.
template <typename Scalar>
[[nodiscard]] Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Stacks columns top to bottom.
[[nodiscard]] ComplexVector vec(const ComplexMatrix& m);

/// Inverse of vec for a rows x cols matrix.
[[nodiscard]] ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols);

/// The n^2 x n^2 permutation with vec(E^T) = Pi * vec(E).
[[nodiscard]] RealBlockMatrix vec_permutation(Index n);

/// (M + M^*) / 2. Throws NotSquare.
[[nodiscard]] HermitianMatrix hermitian_part(const ComplexMatrix& m);

/// LU-based inverse. Throws SingularMatrixError when the reciprocal
/// condition estimate falls below machine epsilon.
[[nodiscard]] ComplexMatrix inverse(const ComplexMatrix& m);

/// Hermitian inverse; the result is re-mirrored to stay exactly Hermitian.
[[nodiscard]] HermitianMatrix inverse(const HermitianMatrix& h);

/// Real matrix of the real-linear map z -> m1 z + m2 conj(z) acting on
/// (Re z, Im z) stacked:
///   [ Re(m1 + m2)   Im(m2 - m1) ]
///   [ Im(m1 + m2)   Re(m1 - m2) ]
[[nodiscard]] RealBlockMatrix real_linear_representation(const ComplexMatrix& m1, const ComplexMatrix& m2);

}  // namespace matfix
