#include "matfix/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace matfix {

HermitianMatrix::HermitianMatrix(Index order) : m_(ComplexMatrix::Zero(order, order)) {}

HermitianMatrix HermitianMatrix::from_lower(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NotSquare,
                    "Hermitian storage needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    const Index n = m.rows();
    ComplexMatrix out(n, n);
    for (Index j = 0; j < n; ++j) {
        out(j, j) = Complex(m(j, j).real(), 0.0);
        for (Index i = j + 1; i < n; ++i) {
            out(i, j) = m(i, j);
            out(j, i) = std::conj(m(i, j));
        }
    }
    return HermitianMatrix(std::move(out));
}

HermitianMatrix HermitianMatrix::identity(Index order) { return scaled_identity(order, 1.0); }

HermitianMatrix HermitianMatrix::scaled_identity(Index order, double c) {
    return HermitianMatrix(ComplexMatrix(c * ComplexMatrix::Identity(order, order)));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
    return HermitianMatrix(ComplexMatrix(d.cast<Complex>().asDiagonal()));
}

bool HermitianMatrix::is_real() const { return m_.imag().isZero(0.0); }

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(ComplexMatrix(a.m_ + b.m_));
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(ComplexMatrix(a.m_ - b.m_));
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(ComplexMatrix(s * a.m_));
}

bool is_finite(const ComplexMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

void require_finite(const ComplexMatrix& m, std::string_view name) {
    if (!is_finite(m)) {
        throw Error(ErrorCode::NotFinite, std::string(name) + " has a NaN or infinite entry");
    }
}

double spectral_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

double spectral_norm(const RealBlockMatrix& m) {
    if (m.size() == 0) return 0.0;
    // For wide matrices the Gram matrix route is much cheaper than a full SVD
    // and loses nothing we need: the norm is sqrt of the top eigenvalue.
    if (m.cols() > 2 * m.rows()) {
        const RealBlockMatrix gram = m * m.transpose();
        Eigen::SelfAdjointEigenSolver<RealBlockMatrix> es(gram, Eigen::EigenvaluesOnly);
        if (es.info() == Eigen::Success) return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
    Eigen::JacobiSVD<RealBlockMatrix> svd(m);
    return svd.singularValues()(0);
}

double min_singular_value(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    return s(s.size() - 1);
}

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

EigenExtremes eig_extremes(const HermitianMatrix& h) {
    if (h.order() == 0) return {};
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.matrix(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenFailure,
                    "Hermitian eigensolver did not converge for order " + std::to_string(h.order()));
    }
    const auto& ev = es.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
}

double default_pd_tolerance(const HermitianMatrix& h) {
    const auto ext = eig_extremes(h);
    return static_cast<double>(h.order()) * std::numeric_limits<double>::epsilon() *
           std::max(std::abs(ext.max), std::abs(ext.min));
}

bool is_positive_definite(const HermitianMatrix& h, double tol) {
    if (h.order() == 0) return false;
    return eig_extremes(h).min > tol;
}

bool is_positive_definite(const HermitianMatrix& h) {
    if (h.order() == 0) return false;
    const auto ext = eig_extremes(h);
    const double tol = static_cast<double>(h.order()) * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(ext.max), std::abs(ext.min));
    return ext.min > tol;
}

ComplexVector vec(const ComplexMatrix& m) {
    // Eigen's default storage is column-major, so the raw buffer is already vec(m).
    return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
    if (v.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "unvec: vector of length " + std::to_string(v.size()) +
                                                      " cannot fill " + std::to_string(rows) + "x" +
                                                      std::to_string(cols));
    }
    return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

RealBlockMatrix vec_permutation(Index n) {
    RealBlockMatrix pi = RealBlockMatrix::Zero(n * n, n * n);
    // Entry (i, j) of E sits at j*n + i in vec(E) and at i*n + j in vec(E^T).
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) pi(i * n + j, j * n + i) = 1.0;
    }
    return pi;
}

HermitianMatrix hermitian_part(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NotSquare, "hermitian_part of a " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    }
    return HermitianMatrix::from_lower(0.5 * (m + m.adjoint()));
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NotSquare,
                    "inverse of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    // An exactly zero pivot makes the estimate NaN.
    const double estimate = lu.rcond();
    const double rcond = std::isnan(estimate) ? 0.0 : estimate;
    if (!(rcond > std::numeric_limits<double>::epsilon())) {
        throw SingularMatrixError("matrix is singular to working precision (rcond estimate " +
                                      std::to_string(rcond) + ")",
                                  rcond);
    }
    return lu.inverse();
}

HermitianMatrix inverse(const HermitianMatrix& h) { return hermitian_part(inverse(h.matrix())); }

RealBlockMatrix real_linear_representation(const ComplexMatrix& m1, const ComplexMatrix& m2) {
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "real_linear_representation: operand shapes differ");
    }
    const Index r = m1.rows();
    const Index c = m1.cols();
    RealBlockMatrix out(2 * r, 2 * c);
    out.topLeftCorner(r, c) = (m1 + m2).real();
    out.topRightCorner(r, c) = (m2 - m1).imag();
    out.bottomLeftCorner(r, c) = (m1 + m2).imag();
    out.bottomRightCorner(r, c) = (m1 - m2).real();
    return out;
}

}  // namespace matfix
